#include <lacegate/oracles/perc_tiny.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <lacegate/errors.hpp>

namespace lacegate::oracle
{

namespace
{

using vertex_mask = std::uint64_t;
using bond_mask = std::uint32_t;

class configuration_space
{
public:
    explicit configuration_space(const finite_graph &g) : m_g(g)
    {
        g.validate();
        if (g.bonds.size() > max_tiny_bonds) {
            throw scale_error("exact enumeration is limited to " + std::to_string(max_tiny_bonds) + " bonds");
        }
        if (g.vertex_count() > 64) {
            throw scale_error("exact enumeration is limited to 64 vertices");
        }
    }

    // Vertices joined to `from` by occupied bonds among those in `open`.
    vertex_mask cluster(std::size_t from, bond_mask open) const
    {
        vertex_mask reach = vertex_mask{1} << from;
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t e = 0; e < m_g.bonds.size(); ++e) {
                if (!(open >> e & 1U)) {
                    continue;
                }
                const vertex_mask a = vertex_mask{1} << m_g.bonds[e].u;
                const vertex_mask b = vertex_mask{1} << m_g.bonds[e].v;
                if (((reach & a) != 0) != ((reach & b) != 0)) {
                    reach |= a | b;
                    grew = true;
                }
            }
        }
        return reach;
    }

    bool connected(std::size_t a, std::size_t b, bond_mask open) const
    {
        return cluster(a, open) >> b & 1U;
    }

    // Some occupied bond whose removal disconnects a from b, given a <-> b.
    bool has_pivotal(std::size_t a, std::size_t b, bond_mask open) const
    {
        for (std::size_t e = 0; e < m_g.bonds.size(); ++e) {
            if ((open >> e & 1U) && !connected(a, b, open & ~(bond_mask{1} << e))) {
                return true;
            }
        }
        return false;
    }

    bool doubly_connected(std::size_t a, std::size_t b, bond_mask open) const
    {
        return a == b || (connected(a, b, open) && !has_pivotal(a, b, open));
    }

    // Calls f(open, weight) for every occupation pattern of the bonds in
    // `free`; bonds outside `free` are vacant and carry no weight.
    template <typename F>
    void for_each(bond_mask free, F &&f) const
    {
        walk(free, 0, 0, big_rational(1), f);
    }

    bond_mask all() const
    {
        return m_g.bonds.empty() ? 0 : static_cast<bond_mask>((std::uint64_t{1} << m_g.bonds.size()) - 1);
    }

    // Bonds with no endpoint in `avoid`.
    bond_mask outside(vertex_mask avoid) const
    {
        bond_mask m = 0;
        for (std::size_t e = 0; e < m_g.bonds.size(); ++e) {
            const auto &b = m_g.bonds[e];
            if (!(avoid >> b.u & 1U) && !(avoid >> b.v & 1U)) {
                m |= bond_mask{1} << e;
            }
        }
        return m;
    }

    const finite_graph &graph() const
    {
        return m_g;
    }

private:
    template <typename F>
    void walk(bond_mask free, std::size_t e, bond_mask open, const big_rational &w, F &f) const
    {
        if (w == 0) {
            return;
        }
        if (e == m_g.bonds.size()) {
            f(open, w);
            return;
        }
        if (!(free >> e & 1U)) {
            walk(free, e + 1, open, w, f);
            return;
        }
        const big_rational &p = m_g.bonds[e].probability;
        walk(free, e + 1, open | (bond_mask{1} << e), w * p, f);
        walk(free, e + 1, open, w * (1 - p), f);
    }

    const finite_graph &m_g;
};

// P(a <-> b using only vertices outside `avoid`)
big_rational off_connection(const configuration_space &cs, std::size_t a, std::size_t b, vertex_mask avoid)
{
    if ((avoid >> a & 1U) || (avoid >> b & 1U)) {
        return 0;
    }
    if (a == b) {
        return 1;
    }
    big_rational total = 0;
    cs.for_each(cs.outside(avoid), [&](bond_mask open, const big_rational &w) {
        if (cs.connected(a, b, open)) {
            total += w;
        }
    });
    return total;
}

void check_vertex(const finite_graph &g, std::size_t v)
{
    if (v >= g.vertex_count()) {
        throw std::invalid_argument("vertex index out of range");
    }
}

} // namespace

perc_tiny_result perc_exact_tiny(const finite_graph &g, std::size_t s, std::size_t t)
{
    const configuration_space cs(g);
    check_vertex(g, s);
    check_vertex(g, t);
    perc_tiny_result r;
    if (s == t) {
        r.two_point = 1;
        r.double_connection = 1;
        return r;
    }

    cs.for_each(cs.all(), [&](bond_mask open, const big_rational &w) {
        if (!cs.connected(s, t, open)) {
            return;
        }
        r.two_point += w;
        if (cs.has_pivotal(s, t, open)) {
            r.pivotal += w;
        } else {
            r.double_connection += w;
        }
    });

    std::map<std::pair<vertex_mask, std::size_t>, big_rational> inner;
    for (std::size_t e = 0; e < g.bonds.size(); ++e) {
        const bond_mask others = cs.all() & ~(bond_mask{1} << e);
        for (const auto &[u, v] : {std::pair{g.bonds[e].u, g.bonds[e].v}, std::pair{g.bonds[e].v, g.bonds[e].u}}) {
            big_rational sum = 0;
            cs.for_each(others, [&](bond_mask open, const big_rational &w) {
                const vertex_mask c = cs.cluster(s, open);
                if ((c >> v & 1U) || !(c >> u & 1U) || !cs.doubly_connected(s, u, open)) {
                    return;
                }
                auto it = inner.find({c, v});
                if (it == inner.end()) {
                    it = inner.emplace(std::pair{c, v}, off_connection(cs, v, t, c)).first;
                }
                sum += w * it->second;
            });
            r.first_pivotal_expansion += g.bonds[e].probability * sum;
        }
    }
    return r;
}

pi0_check check_pi0_bound(const finite_graph &g, std::size_t s, std::size_t t)
{
    g.validate();
    check_vertex(g, s);
    check_vertex(g, t);
    if (!g.has_coordinates()) {
        throw unsupported_instance("the zeroth-coefficient bound needs vertices given as lattice coordinates");
    }
    if (g.bonds.empty()) {
        throw unsupported_instance("the zeroth-coefficient bound needs at least one bond");
    }
    const big_rational q = g.bonds.front().probability;
    for (const auto &b : g.bonds) {
        if (!adjacent(g.coordinates[b.u], g.coordinates[b.v])) {
            throw unsupported_instance("bond between non-neighbouring lattice points");
        }
        if (b.probability != q) {
            throw unsupported_instance("the zeroth-coefficient bound needs one common bond probability");
        }
    }

    const configuration_space cs(g);
    std::vector<big_rational> to_target(g.vertex_count());
    big_rational doubly = 0;
    cs.for_each(cs.all(), [&](bond_mask open, const big_rational &w) {
        const vertex_mask c = cs.cluster(t, open);
        for (std::size_t y = 0; y < g.vertex_count(); ++y) {
            if (c >> y & 1U) {
                to_target[y] += w;
            }
        }
        if (cs.doubly_connected(s, t, open)) {
            doubly += w;
        }
    });

    pi0_check c;
    c.d = g.coordinates.front().dimension();
    c.bond_probability = q;
    c.pi0 = doubly - (s == t ? 1 : 0);
    big_rational conv = 0;
    for (const auto &b : g.bonds) {
        if (b.u == s) {
            conv += q * to_target[b.v];
        } else if (b.v == s) {
            conv += q * to_target[b.u];
        }
    }
    c.bound = conv * conv / 2;
    return c;
}

finite_graph random_graph(std::mt19937_64 &rng, std::size_t bond_count)
{
    if (bond_count == 0 || bond_count > max_tiny_bonds) {
        throw std::invalid_argument("random_graph needs 1 <= bond_count <= 16");
    }
    std::size_t min_vertices = 2;
    while (min_vertices * (min_vertices - 1) / 2 < bond_count) {
        ++min_vertices;
    }
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_vertices, bond_count + 1)(rng);

    finite_graph g;
    for (std::size_t i = 0; i < n; ++i) {
        g.labels.push_back("\"v" + std::to_string(i) + "\"");
    }
    std::set<std::pair<std::size_t, std::size_t>> used;
    auto add = [&](std::size_t a, std::size_t b) {
        if (a == b || !used.insert(std::minmax(a, b)).second) {
            return false;
        }
        const long den = std::uniform_int_distribution<long>(1, 6)(rng);
        const long num = std::uniform_int_distribution<long>(0, den)(rng);
        g.bonds.push_back({a, b, make_rational(num, den)});
        return true;
    };
    for (std::size_t i = 1; i < n; ++i) {
        add(i, std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (g.bonds.size() < bond_count) {
        add(pick(rng), pick(rng));
    }
    g.source = 0;
    g.target = n - 1;
    return g;
}

} // namespace lacegate::oracle
