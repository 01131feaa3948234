#include <lacegate/oracles/saw_enumeration.hpp>

#include <map>
#include <stdexcept>
#include <utility>

#include "walks.hpp"

namespace lacegate::oracle
{

namespace
{

using detail::walk;
using detail::walk_space;

constexpr std::size_t counting_budget = 200'000'000;
constexpr std::size_t storage_budget = 5'000'000;

// Walk counts by (end site, length); the weight 2^{-d n} is applied on output.
class walk_counts
{
public:
    void add(long site, int degree, unsigned long long n = 1)
    {
        m_counts[{site, degree}] += n;
    }

    site_power_series to_series(const walk_space &space, int max_degree) const
    {
        site_power_series s(space.dimension(), max_degree);
        for (const auto &[key, n] : m_counts) {
            s.add(space.decode(key.first), key.second,
                  big_rational(big_int(static_cast<unsigned long>(n))) * pow2(-space.dimension() * key.second));
        }
        return s;
    }

private:
    std::map<std::pair<long, int>, unsigned long long> m_counts;
};

auto keep_all()
{
    return [](long, int) { return true; };
}

std::vector<walk> collect(const walk_space &space, int max_length)
{
    std::vector<walk> out;
    detail::for_each_saw(
        space, max_length, storage_budget, [&](const std::vector<long> &path) { out.push_back(detail::make_walk(path)); },
        keep_all());
    return out;
}

// Walks from o that end at a neighbour of o, pruned by Chebyshev distance.
std::vector<walk> collect_loops(const walk_space &space, int max_length)
{
    std::vector<walk> out;
    const long o = space.origin();
    std::vector<long> neighbours;
    for (long s : space.steps()) {
        neighbours.push_back(o + s);
    }
    auto is_neighbour = [&](long id) { return std::find(neighbours.begin(), neighbours.end(), id) != neighbours.end(); };
    detail::for_each_saw(
        space, max_length, storage_budget,
        [&](const std::vector<long> &path) {
            if (path.size() > 1 && is_neighbour(path.back())) {
                out.push_back(detail::make_walk(path));
            }
        },
        [&](long id, int remaining) { return space.decode(id).sup_norm() - 1 <= remaining; });
    return out;
}

struct expansion_walks {
    walk_space space;
    std::vector<walk> loops;
    std::vector<walk> short_walks;
    // short walks grouped by end point, excluding the empty walk
    std::map<long, std::vector<const walk *>> by_end;

    expansion_walks(int d, int m) : space(d, 2 * m + 1)
    {
        if (m >= 1) {
            loops = collect_loops(space, m - 1);
        }
        short_walks = collect(space, m >= 2 ? m - 2 : 0);
        for (const auto &w : short_walks) {
            if (w.length() > 0) {
                by_end[w.end()].push_back(&w);
            }
        }
    }

    // Ordered triples of walks o -> z meeting pairwise only at {o, z}.
    template <typename F>
    void for_each_triple(int max_total, F &&f) const
    {
        for (const auto &[z, ws] : by_end) {
            for (const walk *a : ws) {
                for (const walk *b : ws) {
                    if (a->length() + b->length() + 1 > max_total
                        || !detail::sorted_disjoint(a->interior_sorted, b->interior_sorted)) {
                        continue;
                    }
                    for (const walk *c : ws) {
                        const int total = a->length() + b->length() + c->length();
                        if (total > max_total || !detail::sorted_disjoint(a->interior_sorted, c->interior_sorted)
                            || !detail::sorted_disjoint(b->interior_sorted, c->interior_sorted)) {
                            continue;
                        }
                        f(z, *c, total);
                    }
                }
            }
        }
    }
};

} // namespace

site_power_series enumerate_saw_series(int d, int max_degree)
{
    detail::check_enumeration_input(d, max_degree);
    const walk_space space(d, max_degree + 1);
    walk_counts counts;
    detail::for_each_saw(
        space, max_degree, counting_budget,
        [&](const std::vector<long> &path) { counts.add(path.back(), static_cast<int>(path.size()) - 1); },
        keep_all());
    return counts.to_series(space, max_degree);
}

site_power_series pi_direct(int d, int n, int max_degree)
{
    detail::check_enumeration_input(d, max_degree);
    if (n != 1 && n != 2) {
        throw std::invalid_argument("pi_direct is available for n = 1 and n = 2 only");
    }
    const expansion_walks data(d, max_degree);
    walk_counts counts;
    if (n == 1) {
        // one step from o to y, then the reversed loop from y back to o
        for (const auto &eta : data.loops) {
            counts.add(data.space.origin(), eta.length() + 1);
        }
    } else {
        data.for_each_triple(max_degree, [&](long z, const walk &, int total) { counts.add(z, total); });
    }
    return counts.to_series(data.space, max_degree);
}

saw_remainders remainders_direct(int d, int max_degree)
{
    detail::check_enumeration_input(d, max_degree);
    const expansion_walks data(d, max_degree);
    walk_counts first, second, third;

    for (const auto &eta : data.loops) {
        for (const auto &w : data.short_walks) {
            const int degree = eta.length() + 1 + w.length();
            if (degree > max_degree) {
                continue;
            }
            if (detail::sorted_disjoint(w.tail_sorted, eta.tail_sorted)) {
                first.add(w.end(), degree);
            } else {
                second.add(w.end(), degree);
            }
        }
    }

    data.for_each_triple(max_degree - 1, [&](long z, const walk &c, int total) {
        for (const auto &w : data.short_walks) {
            const int degree = total + w.length();
            if (w.length() == 0 || degree > max_degree) {
                continue;
            }
            // w translated to start at z must revisit c somewhere other than z
            bool hits = false;
            for (std::size_t k = 1; k < w.sites.size() && !hits; ++k) {
                const long site = data.space.translate(w.sites[k], z);
                hits = std::find(c.sites.begin(), c.sites.end() - 1, site) != c.sites.end() - 1;
            }
            if (hits) {
                third.add(data.space.translate(w.end(), z), degree);
            }
        }
    });

    return {first.to_series(data.space, max_degree), second.to_series(data.space, max_degree),
            third.to_series(data.space, max_degree)};
}

} // namespace lacegate::oracle
