#ifndef LACEGATE_SRC_ORACLES_WALKS_HPP
#define LACEGATE_SRC_ORACLES_WALKS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <lacegate/errors.hpp>
#include <lacegate/oracles/lattice.hpp>
#include <lacegate/oracles/saw_enumeration.hpp>

namespace lacegate::oracle::detail
{

// Sites in a box of the given radius, encoded as integers so that
// translation is integer addition.
class walk_space
{
public:
    walk_space(int d, int radius) : m_d(d), m_radius(radius), m_base(2L * radius + 1)
    {
        for (const auto &e : unit_steps(d)) {
            m_steps.push_back(encode(e) - origin());
        }
    }

    int dimension() const
    {
        return m_d;
    }

    long encode(const lattice_site &x) const
    {
        long id = 0, scale = 1;
        for (int c : x.coords) {
            id += (c + m_radius) * scale;
            scale *= m_base;
        }
        return id;
    }

    lattice_site decode(long id) const
    {
        lattice_site x = lattice_site::origin(m_d);
        for (int j = 0; j < m_d; ++j) {
            x.coords[static_cast<std::size_t>(j)] = static_cast<int>(id % m_base) - m_radius;
            id /= m_base;
        }
        return x;
    }

    long origin() const
    {
        return encode(lattice_site::origin(m_d));
    }

    long translate(long id, long by) const
    {
        return id + by - origin();
    }

    const std::vector<long> &steps() const
    {
        return m_steps;
    }

private:
    int m_d;
    int m_radius;
    long m_base;
    std::vector<long> m_steps;
};

struct walk {
    std::vector<long> sites;
    // sites after the first, sorted
    std::vector<long> tail_sorted;
    // sites strictly between the endpoints, sorted
    std::vector<long> interior_sorted;

    int length() const
    {
        return static_cast<int>(sites.size()) - 1;
    }
    long end() const
    {
        return sites.back();
    }
};

inline bool sorted_disjoint(const std::vector<long> &a, const std::vector<long> &b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            return false;
        }
        if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

inline walk make_walk(std::vector<long> sites)
{
    walk w;
    w.tail_sorted.assign(sites.begin() + 1, sites.end());
    std::sort(w.tail_sorted.begin(), w.tail_sorted.end());
    if (sites.size() > 2) {
        w.interior_sorted.assign(sites.begin() + 1, sites.end() - 1);
        std::sort(w.interior_sorted.begin(), w.interior_sorted.end());
    }
    w.sites = std::move(sites);
    return w;
}

inline void check_enumeration_input(int d, int max_degree)
{
    if (d < 1 || max_degree < 0) {
        throw std::invalid_argument("enumeration needs d >= 1 and max_degree >= 0");
    }
    if (d > max_enumeration_dimension || max_degree > max_enumeration_degree) {
        throw scale_error("walk enumeration is limited to d <= 4 and max_degree <= 10");
    }
}

// Depth-first enumeration of self-avoiding walks from the origin. visit is
// called on every walk including the empty one; keep(site, remaining) may
// prune an extension. Throws scale_error after node_budget nodes.
template <typename Visit, typename Keep>
void for_each_saw(const walk_space &space, int max_length, std::size_t node_budget, Visit &&visit, Keep &&keep)
{
    std::vector<long> path{space.origin()};
    std::size_t nodes = 0;
    auto recurse = [&](auto &self) -> void {
        if (++nodes > node_budget) {
            throw scale_error("walk enumeration exceeded its budget of " + std::to_string(node_budget) + " walks");
        }
        visit(path);
        const int remaining = max_length - (static_cast<int>(path.size()) - 1);
        if (remaining == 0) {
            return;
        }
        const long here = path.back();
        for (long step : space.steps()) {
            const long next = here + step;
            if (std::find(path.begin(), path.end(), next) != path.end()) {
                continue;
            }
            if (!keep(next, remaining - 1)) {
                continue;
            }
            path.push_back(next);
            self(self);
            path.pop_back();
        }
    };
    recurse(recurse);
}

} // namespace lacegate::oracle::detail

#endif
