#ifndef LACEGATE_ORACLES_LATTICE_HPP
#define LACEGATE_ORACLES_LATTICE_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <lacegate/number.hpp>

namespace lacegate::oracle
{

// Point of the body-centred cubic lattice: neighbours differ by exactly 1 in
// every coordinate.
struct lattice_site {
    std::vector<int> coords;

    static lattice_site origin(int d);

    int dimension() const
    {
        return static_cast<int>(coords.size());
    }
    // Chebyshev norm, a lower bound on the number of steps from the origin.
    int sup_norm() const;

    friend lattice_site operator+(const lattice_site &a, const lattice_site &b);
    friend lattice_site operator-(const lattice_site &a, const lattice_site &b);
    friend lattice_site operator-(const lattice_site &a);
    friend auto operator<=>(const lattice_site &, const lattice_site &) = default;
    friend bool operator==(const lattice_site &, const lattice_site &) = default;
};

bool adjacent(const lattice_site &a, const lattice_site &b);

// The 2^d neighbours of the origin.
std::vector<lattice_site> unit_steps(int d);

std::string to_string(const lattice_site &x);

// Truncated formal power series in p attached to every lattice site.
class site_power_series
{
public:
    site_power_series(int d, int max_degree);

    int dimension() const
    {
        return m_d;
    }
    int max_degree() const
    {
        return m_max_degree;
    }

    // Zero for sites without stored coefficients and for degrees out of range.
    big_rational coefficient(const lattice_site &x, int degree) const;
    // Coefficients beyond max_degree are dropped.
    void add(const lattice_site &x, int degree, const big_rational &value);

    // sum_y a(y) b(x - y), truncated at the smaller max_degree.
    friend site_power_series convolve(const site_power_series &a, const site_power_series &b);
    friend site_power_series operator+(const site_power_series &a, const site_power_series &b);
    friend site_power_series operator-(const site_power_series &a, const site_power_series &b);

    // Sites with at least one nonzero stored coefficient.
    std::vector<lattice_site> support() const;

    const std::map<lattice_site, std::vector<big_rational>> &terms() const
    {
        return m_terms;
    }

private:
    int m_d;
    int m_max_degree;
    std::map<lattice_site, std::vector<big_rational>> m_terms;
};

// delta_{o,x} as a series.
site_power_series unit_series(int d, int max_degree);

// p D(x), the one-step distribution with a formal p.
site_power_series step_series(int d, int max_degree);

// Coefficient of p^n at x is D^{*n}(x), the simple random walk series.
site_power_series simple_walk_series(int d, int max_degree);

} // namespace lacegate::oracle

#endif
