#include <doctest.h>

#include <map>
#include <stdexcept>

#include <lacegate/certificate_json.hpp>
#include <lacegate/verifier.hpp>

using namespace lacegate;
using namespace lacegate::verify;

namespace
{

const rw::rw_quantities &rw_at(int d)
{
    static std::map<int, rw::rw_quantities> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        it = cache.emplace(d, rw::rw_bundle(d, 500)).first;
    }
    return it->second;
}

bootstrap_constants constants(model m, int d, const char *k1, const char *k2, const char *k3)
{
    return {m, d, parse_rational(k1), parse_rational(k2), parse_rational(k3)};
}

} // namespace

TEST_CASE("model names and reference constants")
{
    CHECK(parse_model("saw") == model::saw);
    CHECK(parse_model("percolation") == model::percolation);
    CHECK_THROWS_AS(parse_model("ising"), std::invalid_argument);
    CHECK(name(model::percolation) == "percolation");
    CHECK(min_dimension(model::saw) == 5);
    CHECK(min_dimension(model::percolation) == 7);
    const auto K = reference_constants(model::saw, 6);
    CHECK(K.K1 == make_rational(103, 100));
    CHECK(K.K3 == make_rational(179, 100));
    CHECK(reference_constants(model::percolation, 9).K2 == make_rational(109, 100));
    CHECK_THROWS_AS(constants(model::saw, 6, "0.99", "1", "1").validate(), std::invalid_argument);
}

TEST_CASE("initial stage examples")
{
    const auto s6 = check_initial(rw_at(6), reference_constants(model::saw, 6));
    CHECK(s6.pass);
    CHECK(s6.checks.size() == 4);
    const auto s5 = check_initial(rw_at(5), reference_constants(model::saw, 5));
    CHECK_FALSE(s5.pass);
    CHECK(s5.binding_constraint == "sufficiency");
    REQUIRE(s5.sufficiency);
    CHECK(s5.sufficiency->lhs.value() >= 1);
    const auto p8 = check_initial(rw_at(8), constants(model::percolation, 8, "1.02", "1.11", "4.25"));
    CHECK(p8.pass);
    const auto p7 = check_initial(rw_at(7), reference_constants(model::percolation, 7));
    CHECK(p7.binding_constraint == "sufficiency");
}

TEST_CASE("bootstrap stage examples")
{
    const auto s6 = check_bootstrap(rw_at(6), reference_constants(model::saw, 6));
    CHECK(s6.pass);
    const auto p9 = check_bootstrap(rw_at(9), constants(model::percolation, 9, "1", "1", "1"));
    CHECK_FALSE(p9.pass);
    CHECK(p9.binding_constraint == "g1");
    REQUIRE(p9.g);
    CHECK(p9.g->g1.value() > 1);
}

TEST_CASE("unsupported dimensions are verdicts")
{
    const auto c2 = verify_theorem(reference_constants(model::saw, 2), 500);
    CHECK(c2.outcome == verdict::unsupported_dimension);
    CHECK_FALSE(c2.theorem_pass);
    CHECK_FALSE(c2.rw.has_value());
    const auto c4 = verify_theorem(reference_constants(model::saw, 4), 500);
    CHECK(c4.outcome == verdict::unsupported_dimension);
    const auto p6 = verify_theorem(reference_constants(model::percolation, 6), 500);
    CHECK(p6.outcome == verdict::unsupported_dimension);
    CHECK_FALSE(p6.initial.computed);
}

TEST_CASE("theorem gate")
{
    const auto s6 = verify_theorem(rw_at(6), reference_constants(model::saw, 6));
    CHECK(s6.theorem_pass);
    CHECK(s6.outcome == verdict::pass);
    CHECK(s6.binding_constraint.empty());
    const auto p7 = verify_theorem(rw_at(7), reference_constants(model::percolation, 7));
    CHECK_FALSE(p7.theorem_pass);
    CHECK(p7.binding_constraint == "initial:sufficiency");
    const auto p10 = verify_theorem(rw_at(10), reference_constants(model::percolation, 10));
    CHECK(p10.theorem_pass);
}

TEST_CASE("soundness coupling on a grid of constants")
{
    for (model m : {model::saw, model::percolation}) {
        const int d = m == model::saw ? 6 : 9;
        for (const char *k1 : {"1", "1.01", "1.03"}) {
            for (const char *k2 : {"1", "1.03", "1.09"}) {
                for (const char *k3 : {"1.5", "1.79", "2.7", "3"}) {
                    const auto c = verify_theorem(rw_at(d), constants(m, d, k1, k2, k3));
                    CHECK_NOTHROW(c.assert_consistent());
                    bool all = c.initial.pass && c.bootstrap.pass;
                    for (const auto *s : {&c.initial, &c.bootstrap}) {
                        for (const auto &chk : s->checks) {
                            all = all && chk.pass;
                            CHECK(chk.pass == (chk.lhs.value() < chk.threshold));
                        }
                    }
                    CHECK(c.theorem_pass == all);
                }
            }
        }
    }
    certificate broken = verify_theorem(rw_at(6), reference_constants(model::saw, 6));
    broken.bootstrap.checks.back().pass = false;
    CHECK_THROWS_AS(broken.assert_consistent(), std::logic_error);
}

TEST_CASE("feasibility is monotone in d")
{
    for (model m : {model::saw, model::percolation}) {
        for (const auto &K0 : {reference_constants(m, 0), constants(m, 0, "1.05", "1.1", "3")}) {
            bool passed = false;
            for (int d = min_dimension(m); d <= 12; ++d) {
                auto K = K0;
                K.d = d;
                const bool pass = verify_theorem(rw_at(d), K).theorem_pass;
                if (passed) {
                    CHECK(pass);
                }
                passed = passed || pass;
            }
            CHECK(passed);
        }
    }
}

TEST_CASE("certificates are deterministic and validate")
{
    for (const auto &K : {reference_constants(model::saw, 6), reference_constants(model::percolation, 9),
                          reference_constants(model::percolation, 7), reference_constants(model::saw, 3)}) {
        const std::string a = certificate_to_json(verify_theorem(K, 500));
        const std::string b = certificate_to_json(verify_theorem(K, 500));
        CHECK(a == b);
        CHECK_NOTHROW(validate_certificate_json(a));
        CHECK(a.find("\"schema\": \"lace-cert/1\"") != std::string::npos);
    }
}

TEST_CASE("certificate validation rejects tampering")
{
    const std::string good = certificate_to_json(verify_theorem(rw_at(7), reference_constants(model::percolation, 7)));
    auto replaced = [&](const std::string &from, const std::string &to) {
        std::string s = good;
        const auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        s.replace(pos, from.size(), to);
        return s;
    };
    CHECK_THROWS_AS(validate_certificate_json(replaced("\"theorem_pass\": false", "\"theorem_pass\": true")),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_certificate_json(replaced("lace-cert/1", "lace-cert/0")), std::invalid_argument);
    CHECK_THROWS_AS(validate_certificate_json(replaced("\"model\": \"percolation\"", "\"model\": 3")),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_certificate_json(replaced("\"strict_pass\": false", "\"strict_pass\": true")), std::invalid_argument);
    CHECK_THROWS_AS(validate_certificate_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(validate_certificate_json("[1"), std::invalid_argument);
}

TEST_CASE("grid axes")
{
    const grid_axis a{1, 2, make_rational(1, 4)};
    CHECK(a.size() == 5);
    CHECK(*a.first_above(make_rational(1, 2)) == 1);
    CHECK(*a.first_above(1) == make_rational(5, 4));
    CHECK(*a.first_above(make_rational(13, 10)) == make_rational(3, 2));
    CHECK_FALSE(a.first_above(2).has_value());
    CHECK(*a.next(make_rational(7, 4)) == 2);
    const grid_axis single{make_rational(3, 2), make_rational(3, 2), 0};
    CHECK_NOTHROW(single.validate());
    CHECK(single.size() == 1);
    CHECK(*single.first_above(1) == make_rational(3, 2));
    CHECK_FALSE(single.next(make_rational(3, 2)).has_value());
    CHECK_THROWS_AS((grid_axis{2, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((grid_axis{1, 2, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((grid_axis{make_rational(1, 2), 2, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((grid_axis{1, 11, 1}).validate(), std::invalid_argument);
}

namespace
{

// Plain lexicographic scan without jumps over a small grid.
std::optional<bootstrap_constants> scan(model m, int d, const grid_spec &g)
{
    for (auto k1 = std::optional<big_rational>(g.axes[0].lo); k1; k1 = g.axes[0].next(*k1)) {
        for (auto k2 = std::optional<big_rational>(g.axes[1].lo); k2; k2 = g.axes[1].next(*k2)) {
            for (auto k3 = std::optional<big_rational>(g.axes[2].lo); k3; k3 = g.axes[2].next(*k3)) {
                const bootstrap_constants K{m, d, *k1, *k2, *k3};
                if (verify_theorem(rw_at(d), K).theorem_pass) {
                    return K;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("search examples")
{
    const auto s6 = search_constants(model::saw, 6, 500, grid_spec::uniform(make_rational(1, 100)));
    REQUIRE(s6.feasible);
    CHECK(s6.point->K1 <= make_rational(103, 100));
    CHECK(s6.winner->theorem_pass);
    const auto p9 = search_constants(model::percolation, 9, 500, grid_spec::uniform(make_rational(1, 100)));
    REQUIRE(p9.feasible);
    CHECK(p9.point->K3 <= make_rational(270, 100));
    const auto p7 = search_constants(model::percolation, 7, 500, grid_spec::uniform(make_rational(1, 100)));
    CHECK_FALSE(p7.feasible);
    CHECK(p7.binding_constraint == "initial:sufficiency");
    const auto K = reference_constants(model::saw, 6);
    const auto single = search_constants(model::saw, 6, 500, grid_spec::single(K));
    REQUIRE(single.feasible);
    CHECK(single.point->K1 == K.K1);
    CHECK(single.point->K2 == K.K2);
    CHECK(single.point->K3 == K.K3);
    CHECK(search_constants(model::saw, 4, 500, grid_spec::uniform(make_rational(1, 10))).unsupported);
    grid_spec empty = grid_spec::uniform(make_rational(1, 10));
    empty.axes[1] = grid_axis{3, 2, 1};
    CHECK_THROWS_AS(search_constants(model::saw, 6, 500, empty), std::invalid_argument);
}

TEST_CASE("search jumps agree with an exhaustive scan")
{
    struct instance {
        model m;
        int d;
        grid_spec g;
    };
    const instance cases[] = {
        {model::saw, 6, grid_spec::uniform(make_rational(1, 50), 1, make_rational(11, 10))},
        {model::saw, 6, grid_spec::uniform(make_rational(1, 10), 1, 2)},
        {model::saw, 7, grid_spec::uniform(make_rational(1, 25), 1, make_rational(3, 2))},
        {model::percolation, 9, grid_spec::uniform(make_rational(1, 5), 1, 3)},
        {model::percolation, 9, grid_spec::uniform(make_rational(1, 50), 1, make_rational(11, 10))},
    };
    for (const auto &c : cases) {
        const auto fast = search_constants(c.m, c.d, 500, c.g);
        const auto slow = scan(c.m, c.d, c.g);
        CHECK(fast.feasible == slow.has_value());
        if (slow && fast.feasible) {
            CHECK(fast.point->K1 == slow->K1);
            CHECK(fast.point->K2 == slow->K2);
            CHECK(fast.point->K3 == slow->K3);
        }
    }
}
