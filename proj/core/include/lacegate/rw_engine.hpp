#ifndef LACEGATE_RW_ENGINE_HPP
#define LACEGATE_RW_ENGINE_HPP

#include <optional>
#include <string_view>

#include <lacegate/certified_upper.hpp>
#include <lacegate/directed_real.hpp>
#include <lacegate/number.hpp>

namespace lacegate::rw
{

// Weighted sums eps = sum_{n>=1} w(n) D^{*2n}(o) of the simple random walk
// return probabilities on the body-centred cubic lattice.
enum class series_kind {
    loop,        // w(n) = 1
    bubble,      // w(n) = 2n - 1
    triangle,    // w(n) = (2n - 1) n
    bubble_prime // w(n) = 2n - 3, summed from n = 2
};

std::string_view name(series_kind kind);

// Smallest dimension in which the series converges.
int convergence_threshold(series_kind kind);

// Upper bound or the tag that the series is infinite.
class rw_entry
{
public:
    static rw_entry divergent()
    {
        return rw_entry();
    }
    static rw_entry finite(certified_upper bound)
    {
        rw_entry e;
        e.m_bound = std::move(bound);
        return e;
    }

    bool is_divergent() const noexcept
    {
        return !m_bound.has_value();
    }
    // Throws divergence_error for a divergent entry.
    const certified_upper &bound() const;

private:
    std::optional<certified_upper> m_bound;
};

// D^{*2n}(o) = (C(2n,n) / 4^n)^d, exact.
big_rational return_probability(unsigned long n, int d);

struct sandwich {
    // (pi n)^{-d/2} - D^{*2n}(o), which is non-negative.
    directed_real gap;
    // (2d / 15n) (pi n)^{-d/2}, which dominates the gap.
    directed_real bound;
    // (pi n)^{-d/2}
    directed_real asymptotic;
};

sandwich stirling_sandwich(unsigned long n, int d);

// Enclosure of pi^{-d/2}, shared by the tail estimates.
directed_real inverse_pi_power(int d);

// Sum of the first N terms plus an analytic bound on the remainder.
// Requires N >= 1.
rw_entry epsilon_upper(series_kind kind, int d, unsigned long N);

// Exact partial sum over 1 <= n <= N with no tail.
big_rational epsilon_partial(series_kind kind, int d, unsigned long N);

struct rw_quantities {
    int d = 0;
    unsigned long N = 0;
    rw_entry eps1;
    rw_entry eps2;
    rw_entry eps3;
    rw_entry eps2_prime;
    // 1 + 2 eps1 + eps2, bounds the bubble-type convolution sup
    rw_entry bubble_sup;
    // 1 + 3 eps1 + 2 eps2 + eps3
    rw_entry triangle_sup;

    const rw_entry &get(series_kind kind) const;
};

// Throws divergence_error for d <= 2, where even eps1 is infinite.
rw_quantities rw_bundle(int d, unsigned long N);

} // namespace lacegate::rw

#endif
