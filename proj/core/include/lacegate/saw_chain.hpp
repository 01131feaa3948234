#ifndef LACEGATE_SAW_CHAIN_HPP
#define LACEGATE_SAW_CHAIN_HPP

#include <lacegate/chain_common.hpp>
#include <lacegate/directed_real.hpp>
#include <lacegate/rw_engine.hpp>

namespace lacegate::saw
{

// Diagram bounds of the self-avoiding walk lace expansion.
struct diagram_bounds {
    int d = 0;
    lacegate::stage stage = lacegate::stage::initial;
    big_rational p_sup = 1;  // p, or K1 under the bootstrap
    big_rational step_sup;   // sup_x D(x) = 2^-d
    certified_upper loop;    // L = K1^2 K2 eps1
    certified_upper bubble;  // B = K1^2 K2^2 eps2
    certified_upper bubble_prime; // B' = K1^4 K2^2 eps2'
    certified_upper weight;  // W = 5 K3 (1 + 2 eps1 + eps2)
    certified_upper ratio;   // r = p 2^-d + L + B
};

// Needs eps1, eps2 and eps2' finite, i.e. d >= 5; throws divergence_error otherwise.
diagram_bounds initial_diagrams(const rw::rw_quantities &rw);
diagram_bounds bootstrap_diagrams(const rw::rw_quantities &rw, const big_rational &K1, const big_rational &K2,
                                  const big_rational &K3);

// Upper bound on the n-th lace coefficient (sum mode) or on its weighted
// second difference divided by 1 - D^(k) (delta mode), for n >= 1.
certified_upper pi_term_bound(unsigned long n, const diagram_bounds &db, term_mode mode);

struct series_sums {
    certified_upper pi_odd;
    certified_upper pi_even;
    certified_upper delta_odd;
    certified_upper delta_even;
};

// Throws bound_chain_failure("series_divergence") unless r < 1.
series_sums compute_series(const diagram_bounds &db);

// delta_odd + delta_even < 1
sufficiency_witness check_sufficiency(const series_sums &s);

// Throws bound_chain_failure("g2_denominator") when delta_odd >= 1.
g_bounds compute_g_bounds(const diagram_bounds &db, const series_sums &s);

} // namespace lacegate::saw

#endif
