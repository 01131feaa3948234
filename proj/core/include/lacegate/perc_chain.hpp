#ifndef LACEGATE_PERC_CHAIN_HPP
#define LACEGATE_PERC_CHAIN_HPP

#include <array>

#include <lacegate/chain_common.hpp>
#include <lacegate/rw_engine.hpp>

namespace lacegate::perc
{

// Diagram bounds of the percolation lace expansion. Vertex bounds are ratio
// norms, already divided by 1 - D^(k).
struct diagram_bounds {
    int d = 0;
    lacegate::stage stage = lacegate::stage::initial;
    big_rational p_sup = 1;
    big_rational step_sup;
    certified_upper loop;     // L = K1^2 K2 eps1
    certified_upper bubble;   // B = K1^2 K2^2 eps2
    certified_upper triangle; // T = K1^2 K2^3 eps3
    std::array<certified_upper, 4> vertex;
    certified_upper ratio;    // r = p 2^-d + L + B
    certified_upper rho;      // T (2r + T) + (r + T)(1 + B/2 + T)
};

// Needs eps1, eps2 and eps3 finite, i.e. d >= 7; throws divergence_error otherwise.
diagram_bounds initial_diagrams(const rw::rw_quantities &rw);
diagram_bounds bootstrap_diagrams(const rw::rw_quantities &rw, const big_rational &K1, const big_rational &K2,
                                  const big_rational &K3);

// Upper bound on the n-th lace coefficient (sum mode) or on its weighted
// second difference divided by 1 - D^(k) (delta mode), for n >= 0.
certified_upper pi_term_bound(unsigned long n, const diagram_bounds &db, term_mode mode);

// Sums over even and odd n of the delta-mode term bounds are bounded by
// sum_j phi_j V_j.
struct phi_coefficients {
    std::array<certified_upper, 4> even;
    std::array<certified_upper, 4> odd;
};

// Throws bound_chain_failure("series_divergence") unless rho < 1.
phi_coefficients compute_phi(const diagram_bounds &db);

struct series_sums {
    certified_upper pi_even;
    certified_upper pi_odd;
    certified_upper delta_even;
    certified_upper delta_odd;
};

series_sums compute_series(const diagram_bounds &db, const phi_coefficients &phi);

// pi_even + pi_odd + delta_even + delta_odd < 1
sufficiency_witness check_sufficiency(const series_sums &s);

// Throws bound_chain_failure when one of the reciprocal denominators is not
// positive: "g1_denominator" or "g2_denominator".
g_bounds compute_g_bounds(const diagram_bounds &db, const phi_coefficients &phi, const series_sums &s);

} // namespace lacegate::perc

#endif
