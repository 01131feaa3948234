#ifndef LACEGATE_ORACLES_SAW_ENUMERATION_HPP
#define LACEGATE_ORACLES_SAW_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include <lacegate/oracles/lattice.hpp>

namespace lacegate::oracle
{

// Largest inputs accepted by the exhaustive walk enumerations.
inline constexpr int max_enumeration_dimension = 4;
inline constexpr int max_enumeration_degree = 10;

// Coefficient of p^n at x is (number of self-avoiding walks o -> x with n
// steps) * 2^{-dn}. Throws scale_error when the input or the walk count is
// beyond the enumeration budget.
site_power_series enumerate_saw_series(int d, int max_degree);

// First (n = 1) or second (n = 2) lace coefficient computed from its
// definition: walks closing a loop at the origin, respectively ordered triples
// of self-avoiding walks o -> x that pairwise meet only at {o, x}.
site_power_series pi_direct(int d, int n, int max_degree);

// Remainders of the expansion, enumerated from their definitions.
// first:  walks from a neighbour of o to x that pass through o.
// second: loop at o followed by a walk from o that hits the loop again.
// third:  second-coefficient triple at z followed by a walk from z that hits
//         the third branch again.
struct saw_remainders {
    site_power_series first;
    site_power_series second;
    site_power_series third;
};

saw_remainders remainders_direct(int d, int max_degree);

struct coefficient_mismatch {
    lattice_site site;
    int degree = 0;
    big_rational lhs;
    big_rational rhs;
};

struct saw_recursion_report {
    int d = 0;
    int max_degree = 0;
    int depth = 0;
    std::size_t coefficients_checked = 0;
    // the recursion at the requested depth
    std::vector<coefficient_mismatch> mismatches;
    // coefficients where a remainder is negative
    std::vector<coefficient_mismatch> negative_remainders;
    // coefficients where a remainder exceeds its convolution bound
    std::vector<coefficient_mismatch> bound_violations;
    // remainder bounds checked, one per order with a direct coefficient
    int remainder_orders_checked = 0;

    bool pass() const
    {
        return mismatches.empty() && negative_remainders.empty() && bound_violations.empty();
    }
};

// Checks G = delta + (pD + Pi^(N)) * G + (-1)^{N+1} R^(N+1) coefficientwise
// up to max_degree, for depth N in {1, 2}, together with
// 0 <= R^(n) <= pi^(n) * G for n = 1, 2 and R^(3) >= 0.
saw_recursion_report verify_saw_recursion(int d, int max_degree, int depth);

} // namespace lacegate::oracle

#endif
