#include <lacegate/oracles/lattice.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lacegate::oracle
{

lattice_site lattice_site::origin(int d)
{
    if (d < 1) {
        throw std::invalid_argument("dimension must be positive");
    }
    return {std::vector<int>(static_cast<std::size_t>(d), 0)};
}

int lattice_site::sup_norm() const
{
    int m = 0;
    for (int c : coords) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

namespace
{

void require_same_dimension(const lattice_site &a, const lattice_site &b)
{
    if (a.coords.size() != b.coords.size()) {
        throw std::invalid_argument("lattice sites of different dimensions");
    }
}

} // namespace

lattice_site operator+(const lattice_site &a, const lattice_site &b)
{
    require_same_dimension(a, b);
    lattice_site r = a;
    for (std::size_t j = 0; j < r.coords.size(); ++j) {
        r.coords[j] += b.coords[j];
    }
    return r;
}

lattice_site operator-(const lattice_site &a, const lattice_site &b)
{
    require_same_dimension(a, b);
    lattice_site r = a;
    for (std::size_t j = 0; j < r.coords.size(); ++j) {
        r.coords[j] -= b.coords[j];
    }
    return r;
}

lattice_site operator-(const lattice_site &a)
{
    lattice_site r = a;
    for (int &c : r.coords) {
        c = -c;
    }
    return r;
}

bool adjacent(const lattice_site &a, const lattice_site &b)
{
    require_same_dimension(a, b);
    for (std::size_t j = 0; j < a.coords.size(); ++j) {
        if (std::abs(a.coords[j] - b.coords[j]) != 1) {
            return false;
        }
    }
    return true;
}

std::vector<lattice_site> unit_steps(int d)
{
    if (d < 1 || d > 20) {
        throw std::invalid_argument("unit_steps needs 1 <= d <= 20");
    }
    std::vector<lattice_site> steps;
    const unsigned long count = 1UL << d;
    steps.reserve(count);
    for (unsigned long mask = 0; mask < count; ++mask) {
        lattice_site s = lattice_site::origin(d);
        for (int j = 0; j < d; ++j) {
            s.coords[static_cast<std::size_t>(j)] = (mask >> j) & 1UL ? -1 : 1;
        }
        steps.push_back(std::move(s));
    }
    return steps;
}

std::string to_string(const lattice_site &x)
{
    std::string s = "(";
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        if (j > 0) {
            s += ",";
        }
        s += std::to_string(x.coords[j]);
    }
    return s + ")";
}

site_power_series::site_power_series(int d, int max_degree) : m_d(d), m_max_degree(max_degree)
{
    if (d < 1 || max_degree < 0) {
        throw std::invalid_argument("site_power_series needs d >= 1 and max_degree >= 0");
    }
}

big_rational site_power_series::coefficient(const lattice_site &x, int degree) const
{
    if (degree < 0 || degree > m_max_degree) {
        return 0;
    }
    const auto it = m_terms.find(x);
    if (it == m_terms.end()) {
        return 0;
    }
    return it->second[static_cast<std::size_t>(degree)];
}

void site_power_series::add(const lattice_site &x, int degree, const big_rational &value)
{
    if (x.dimension() != m_d) {
        throw std::invalid_argument("site of the wrong dimension");
    }
    if (degree < 0 || degree > m_max_degree || value == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(x);
    if (inserted) {
        it->second.assign(static_cast<std::size_t>(m_max_degree) + 1, big_rational(0));
    }
    it->second[static_cast<std::size_t>(degree)] += value;
}

site_power_series convolve(const site_power_series &a, const site_power_series &b)
{
    if (a.m_d != b.m_d) {
        throw std::invalid_argument("convolution of series of different dimensions");
    }
    site_power_series r(a.m_d, std::min(a.m_max_degree, b.m_max_degree));
    for (const auto &[y, ca] : a.m_terms) {
        for (int i = 0; i <= r.m_max_degree; ++i) {
            const auto &u = ca[static_cast<std::size_t>(i)];
            if (u == 0) {
                continue;
            }
            for (const auto &[z, cb] : b.m_terms) {
                const lattice_site x = y + z;
                for (int j = 0; i + j <= r.m_max_degree; ++j) {
                    const auto &v = cb[static_cast<std::size_t>(j)];
                    if (v != 0) {
                        r.add(x, i + j, u * v);
                    }
                }
            }
        }
    }
    return r;
}

site_power_series operator+(const site_power_series &a, const site_power_series &b)
{
    if (a.m_d != b.m_d) {
        throw std::invalid_argument("sum of series of different dimensions");
    }
    site_power_series r(a.m_d, std::min(a.m_max_degree, b.m_max_degree));
    for (const auto *s : {&a, &b}) {
        for (const auto &[x, c] : s->m_terms) {
            for (int n = 0; n <= r.m_max_degree; ++n) {
                r.add(x, n, c[static_cast<std::size_t>(n)]);
            }
        }
    }
    return r;
}

site_power_series operator-(const site_power_series &a, const site_power_series &b)
{
    if (a.m_d != b.m_d) {
        throw std::invalid_argument("difference of series of different dimensions");
    }
    site_power_series r(a.m_d, std::min(a.m_max_degree, b.m_max_degree));
    for (const auto &[x, c] : a.m_terms) {
        for (int n = 0; n <= r.m_max_degree; ++n) {
            r.add(x, n, c[static_cast<std::size_t>(n)]);
        }
    }
    for (const auto &[x, c] : b.m_terms) {
        for (int n = 0; n <= r.m_max_degree; ++n) {
            r.add(x, n, -c[static_cast<std::size_t>(n)]);
        }
    }
    return r;
}

std::vector<lattice_site> site_power_series::support() const
{
    std::vector<lattice_site> s;
    for (const auto &[x, c] : m_terms) {
        if (std::any_of(c.begin(), c.end(), [](const big_rational &v) { return v != 0; })) {
            s.push_back(x);
        }
    }
    return s;
}

site_power_series unit_series(int d, int max_degree)
{
    site_power_series s(d, max_degree);
    s.add(lattice_site::origin(d), 0, 1);
    return s;
}

site_power_series step_series(int d, int max_degree)
{
    site_power_series s(d, max_degree);
    const big_rational w = pow2(-d);
    for (const auto &e : unit_steps(d)) {
        s.add(e, 1, w);
    }
    return s;
}

site_power_series simple_walk_series(int d, int max_degree)
{
    site_power_series s(d, max_degree);
    // D^{*n} factorises over coordinates into one-dimensional +-1 walks.
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<lattice_site> sites{lattice_site{{}}};
        for (int j = 0; j < d; ++j) {
            std::vector<lattice_site> next;
            for (const auto &partial : sites) {
                for (int c = -n; c <= n; c += 2) {
                    lattice_site e = partial;
                    e.coords.push_back(c);
                    next.push_back(std::move(e));
                }
            }
            sites = std::move(next);
        }
        for (const auto &x : sites) {
            big_rational v = 1;
            for (int c : x.coords) {
                v *= make_rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>((n + c) / 2)),
                                   big_int(1) << static_cast<mp_bitcnt_t>(n));
            }
            s.add(x, n, v);
        }
    }
    return s;
}

} // namespace lacegate::oracle
