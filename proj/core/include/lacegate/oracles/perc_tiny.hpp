#ifndef LACEGATE_ORACLES_PERC_TINY_HPP
#define LACEGATE_ORACLES_PERC_TINY_HPP

#include <cstddef>
#include <random>

#include <lacegate/number.hpp>
#include <lacegate/oracles/finite_graph.hpp>

namespace lacegate::oracle
{

inline constexpr std::size_t max_tiny_bonds = 16;

struct perc_tiny_result {
    // P(s <-> t)
    big_rational two_point;
    // P(s <=> t): s = t, or s <-> t without pivotal bonds
    big_rational double_connection;
    // P(s <-> t, some bond is pivotal)
    big_rational pivotal;
    // sum over directed bonds (u, v) of p_b E[1{s <=> u in C} P(v <-> t off C)]
    // with C the cluster of s when b is vacant
    big_rational first_pivotal_expansion;

    bool split_identity() const
    {
        return double_connection + pivotal == two_point;
    }
    bool expansion_identity() const
    {
        return first_pivotal_expansion == pivotal;
    }
};

// Exact evaluation by summing over all 2^|bonds| configurations. Throws
// scale_error above max_tiny_bonds bonds.
perc_tiny_result perc_exact_tiny(const finite_graph &g, std::size_t source, std::size_t target);

struct pi0_check {
    int d = 0;
    big_rational bond_probability; // the common p D(x) = p 2^-d
    big_rational pi0;              // P(s <=> t) - delta_{s,t}
    big_rational bound;            // (1/2) (sum_{bonds at s} q P(other end <-> t))^2
    bool holds() const
    {
        return pi0 <= bound;
    }
};

// The zeroth-coefficient bound, for graphs whose vertices are lattice points,
// whose bonds join lattice neighbours and whose probabilities all agree.
// Throws unsupported_instance otherwise.
pi0_check check_pi0_bound(const finite_graph &g, std::size_t source, std::size_t target);

// Connected simple graph with `bond_count` bonds on at most bond_count + 1
// vertices, random rational probabilities with small denominators.
finite_graph random_graph(std::mt19937_64 &rng, std::size_t bond_count);

} // namespace lacegate::oracle

#endif
