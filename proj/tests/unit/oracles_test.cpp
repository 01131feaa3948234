#include <doctest.h>

#include <random>
#include <string>

#include <lacegate/errors.hpp>
#include <lacegate/oracles/finite_graph.hpp>
#include <lacegate/oracles/lattice.hpp>
#include <lacegate/oracles/perc_tiny.hpp>
#include <lacegate/oracles/rw_convolution.hpp>
#include <lacegate/oracles/saw_enumeration.hpp>

using namespace lacegate;
using namespace lacegate::oracle;

namespace
{

big_rational total(const site_power_series &s, int degree)
{
    big_rational t;
    for (const auto &[x, c] : s.terms()) {
        t += s.coefficient(x, degree);
    }
    return t;
}

bool all_zero(const site_power_series &s)
{
    for (const auto &[x, c] : s.terms()) {
        for (const auto &v : c) {
            if (v != 0) {
                return false;
            }
        }
    }
    return true;
}

finite_graph graph(const std::string &name)
{
    return load_graph_json(std::string(LACEGATE_DATA_DIR) + "/graphs/" + name);
}

} // namespace

TEST_CASE("lattice basics")
{
    CHECK(unit_steps(3).size() == 8);
    const lattice_site o = lattice_site::origin(2);
    for (const auto &e : unit_steps(2)) {
        CHECK(adjacent(o, e));
        CHECK(e.sup_norm() == 1);
        CHECK(-(-e) == e);
        CHECK_FALSE(adjacent(o, e + e));
    }
    CHECK(to_string(lattice_site{{1, -1}}) == "(1,-1)");
}

TEST_CASE("walk counts agree with known self-avoiding walk enumerations")
{
    // 1D: two walks of every length. 2D BCC is the square lattice rotated.
    // 3D: c_{n+1} = 7 c_n minus the walks closing a 4-cycle. There are 96
    // rooted 4-cycles at a site, so c_4 = 7 * 392 - 96 and
    // c_5 = 7 * 2648 - 8 * (96 - 2 * 12).
    const std::vector<std::pair<int, std::vector<long>>> counts{
        {1, {1, 2, 2, 2, 2, 2, 2}},
        {2, {1, 4, 12, 36, 100, 284, 780}},
        {3, {1, 8, 56, 392, 2648, 17960}},
    };
    for (const auto &[d, c] : counts) {
        const int m = static_cast<int>(c.size()) - 1;
        const auto g = enumerate_saw_series(d, m);
        for (int n = 0; n <= m; ++n) {
            CHECK(total(g, n) * pow2(static_cast<long>(d) * n) == c[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("self-avoiding walks are dominated by simple random walks")
{
    for (int d = 1; d <= 3; ++d) {
        const int m = d == 3 ? 5 : 7;
        const auto saw = enumerate_saw_series(d, m);
        const auto srw = simple_walk_series(d, m);
        for (const auto &[x, c] : srw.terms()) {
            for (int n = 0; n <= m; ++n) {
                CHECK(saw.coefficient(x, n) <= srw.coefficient(x, n));
            }
        }
        for (const auto &x : saw.support()) {
            CHECK_FALSE(srw.terms().find(x) == srw.terms().end());
        }
    }
}

TEST_CASE("simple walk series is the convolution power of the step")
{
    const auto step = step_series(2, 5);
    site_power_series power = unit_series(2, 5);
    site_power_series sum = unit_series(2, 5);
    for (int k = 1; k <= 5; ++k) {
        power = convolve(power, step);
        sum = sum + power;
    }
    const auto direct = simple_walk_series(2, 5);
    CHECK(all_zero(sum - direct));
}

TEST_CASE("lace coefficients from their definitions")
{
    for (int d = 1; d <= 3; ++d) {
        const auto p1 = pi_direct(d, 1, 6);
        const auto p2 = pi_direct(d, 2, 6);
        for (const auto &x : p1.support()) {
            CHECK(p1.coefficient(x, 0) == 0);
            CHECK(p1.coefficient(x, 1) == 0);
        }
        for (const auto &x : p2.support()) {
            for (int n = 0; n < 3; ++n) {
                CHECK(p2.coefficient(x, n) == 0);
            }
        }
        // the first coefficient at degree 2 is a step out and back
        CHECK(p1.coefficient(lattice_site::origin(d), 2) == pow2(-d));
        // three single steps to a neighbour
        CHECK(p2.coefficient(unit_steps(d).front(), 3) == pow2(-3 * d));
    }
    CHECK_THROWS_AS(pi_direct(2, 3, 4), std::invalid_argument);
}

TEST_CASE("recursion identity holds exactly")
{
    struct cfg {
        int d, m, depth;
    };
    for (const cfg c : {cfg{1, 4, 1}, cfg{1, 4, 2}, cfg{1, 6, 2}, cfg{2, 4, 1}, cfg{2, 4, 2}, cfg{2, 6, 2},
                        cfg{3, 6, 1}, cfg{3, 5, 2}}) {
        CAPTURE(c.d);
        CAPTURE(c.m);
        CAPTURE(c.depth);
        const auto rep = verify_saw_recursion(c.d, c.m, c.depth);
        CHECK(rep.pass());
        CHECK(rep.coefficients_checked > 0);
        CHECK(rep.mismatches.empty());
        CHECK(rep.remainder_orders_checked >= 1);
    }
}

TEST_CASE("a corrupted recursion is detected")
{
    const int d = 2;
    const int m = 5;
    const auto G = enumerate_saw_series(d, m);
    const auto pD = step_series(d, m);
    const auto pi1 = pi_direct(d, 1, m);
    const auto R = remainders_direct(d, m);
    const auto rhs = unit_series(d, m) + convolve(pD, G) - convolve(pi1, G) + R.second;
    CHECK(all_zero(G - rhs));
    CHECK_FALSE(all_zero(G - (rhs - R.second)));
    CHECK_FALSE(all_zero(G - (unit_series(d, m) + convolve(pD, G) + R.second)));
    // N = 0: G = delta + pD * G - R1
    CHECK(all_zero(G - (unit_series(d, m) + convolve(pD, G) - R.first)));
}

TEST_CASE("enumeration limits")
{
    CHECK_THROWS_AS(enumerate_saw_series(max_enumeration_dimension + 1, 3), scale_error);
    CHECK_THROWS_AS(enumerate_saw_series(2, max_enumeration_degree + 1), scale_error);
    CHECK_THROWS_AS(verify_saw_recursion(2, 4, 3), std::invalid_argument);
}

TEST_CASE("random-walk convolution identities")
{
    for (int d = 1; d <= 4; ++d) {
        const auto rep = rw_convolution_check(d, d == 4 ? 6 : 8);
        CAPTURE(d);
        CHECK(rep.pass());
        CHECK(rep.identities.size() >= 6);
        for (const auto &id : rep.identities) {
            CAPTURE(id.name);
            CHECK(id.match());
        }
    }
    CHECK(composition_count(4, 2) == 5);
    CHECK(composition_count(6, 3) == 28);
    CHECK(composition_count(0, 4) == 1);
    CHECK_THROWS_AS(rw_convolution_check(3, 9), std::invalid_argument);
}

TEST_CASE("single bond splits as 0 + q")
{
    const auto g = graph("single_bond.json");
    const auto r = perc_exact_tiny(g, g.source, g.target);
    CHECK(r.two_point == make_rational(1, 3));
    CHECK(r.double_connection == 0);
    CHECK(r.pivotal == make_rational(1, 3));
    CHECK(r.split_identity());
    CHECK(r.expansion_identity());
    const auto same = perc_exact_tiny(g, g.source, g.source);
    CHECK(same.two_point == 1);
    CHECK(same.double_connection == 1);
    CHECK(same.pivotal == 0);
}

TEST_CASE("two parallel two-step paths")
{
    const auto g = graph("parallel_paths.json");
    const big_rational q = make_rational(1, 3);
    const auto r = perc_exact_tiny(g, g.source, g.target);
    CHECK(r.two_point == 2 * q * q - pow(q, 4));
    CHECK(r.double_connection == pow(q, 4));
    CHECK(r.pivotal == 2 * q * q * (1 - q * q));
    CHECK(r.split_identity());
    CHECK(r.expansion_identity());
}

TEST_CASE("disconnected target")
{
    const auto g = graph("disconnected.json");
    const auto r = perc_exact_tiny(g, g.source, g.target);
    CHECK(r.two_point == 0);
    CHECK(r.double_connection == 0);
    CHECK(r.pivotal == 0);
    CHECK(r.first_pivotal_expansion == 0);
}

TEST_CASE("pivotal split on random graphs")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_graph(rng, size(rng));
        REQUIRE(g.bonds.size() <= 12);
        const auto r = perc_exact_tiny(g, g.source, g.target);
        CHECK(r.split_identity());
        CHECK(r.expansion_identity());
        CHECK(r.two_point >= 0);
        CHECK(r.two_point <= 1);
    }
}

TEST_CASE("graph JSON round trip and validation")
{
    const auto g = graph("bcc_square.json");
    const auto h = parse_graph_json(graph_to_json(g));
    REQUIRE(h.bonds.size() == g.bonds.size());
    for (std::size_t i = 0; i < g.bonds.size(); ++i) {
        CHECK(h.bonds[i].u == g.bonds[i].u);
        CHECK(h.bonds[i].v == g.bonds[i].v);
        CHECK(h.bonds[i].probability == g.bonds[i].probability);
    }
    CHECK(h.source == g.source);
    CHECK(h.target == g.target);
    CHECK(g.has_coordinates());
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [0, 1], "bonds": [[0, 0, "1/2"]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [0, 1], "bonds": [[0, 1, "3/2"]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [0, 1], "bonds": [[0, 7, "1/2"]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_json("not json"), std::invalid_argument);
}

namespace
{

// Lattice points of [-2, 2]^d joined to their neighbours, keeping bonds with
// an endpoint next to the origin until max_bonds is reached.
finite_graph embedded_patch(int d, const big_rational &p, std::size_t max_bonds)
{
    std::vector<lattice_site> box;
    std::vector<int> c(static_cast<std::size_t>(d), -2);
    for (;;) {
        bool same_parity = true;
        for (int v : c) {
            same_parity = same_parity && (v - c[0]) % 2 == 0;
        }
        if (same_parity) {
            box.push_back(lattice_site{c});
        }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > 2) {
            c[i] = -2;
            ++i;
        }
        if (i == c.size()) {
            break;
        }
    }
    finite_graph g;
    auto index_of = [&g](const lattice_site &x) {
        for (std::size_t i = 0; i < g.coordinates.size(); ++i) {
            if (g.coordinates[i] == x) {
                return i;
            }
        }
        g.coordinates.push_back(x);
        g.labels.push_back(to_string(x));
        return g.coordinates.size() - 1;
    };
    g.source = index_of(lattice_site::origin(d));
    for (std::size_t i = 0; i < box.size() && g.bonds.size() < max_bonds; ++i) {
        for (std::size_t j = i + 1; j < box.size() && g.bonds.size() < max_bonds; ++j) {
            if (adjacent(box[i], box[j]) && (box[i].sup_norm() <= 1 || box[j].sup_norm() <= 1)) {
                const std::size_t u = index_of(box[i]);
                const std::size_t v = index_of(box[j]);
                g.bonds.push_back(bond{u, v, p});
            }
        }
    }
    g.target = g.coordinates.size() - 1;
    return g;
}

} // namespace

TEST_CASE("pi0 bound on embedded instances")
{
    int checked = 0;
    for (int d = 1; d <= 3; ++d) {
        for (const big_rational q : {make_rational(1, 4), make_rational(1, 2), make_rational(9, 10)}) {
            const auto g = embedded_patch(d, q, d == 3 ? 12 : 14);
            g.validate();
            for (std::size_t t = 0; t < g.vertex_count(); ++t) {
                const auto c = check_pi0_bound(g, g.source, t);
                CAPTURE(d);
                CAPTURE(g.labels[t]);
                CHECK(c.holds());
                CHECK(c.d == d);
                ++checked;
            }
        }
    }
    CHECK(checked > 30);
    const auto sq = graph("bcc_square.json");
    CHECK(check_pi0_bound(sq, sq.source, sq.target).holds());
}

TEST_CASE("pi0 check rejects instances that are not embedded")
{
    CHECK_THROWS_AS(check_pi0_bound(graph("parallel_paths.json"), 0, 3), unsupported_instance);
    auto g = graph("bcc_square.json");
    g.bonds[0].probability = make_rational(1, 5);
    CHECK_THROWS_AS(check_pi0_bound(g, g.source, g.target), unsupported_instance);
}
