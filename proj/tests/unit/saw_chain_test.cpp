#include <doctest.h>

#include <functional>
#include <random>

#include <lacegate/errors.hpp>
#include <lacegate/rw_engine.hpp>
#include <lacegate/saw_chain.hpp>

using namespace lacegate;

namespace
{

const rw::rw_quantities &rw_at(int d)
{
    static const rw::rw_quantities q5 = rw::rw_bundle(5, 500);
    static const rw::rw_quantities q6 = rw::rw_bundle(6, 500);
    static const rw::rw_quantities q7 = rw::rw_bundle(7, 500);
    return d == 5 ? q5 : d == 6 ? q6 : q7;
}

double v(const certified_upper &c)
{
    return c.value().get_d();
}

struct chain {
    saw::diagram_bounds db;
    saw::series_sums s;
    g_bounds g;
};

chain run(const saw::diagram_bounds &db)
{
    chain c{db, saw::compute_series(db), {}};
    c.g = saw::compute_g_bounds(db, c.s);
    return c;
}

saw::diagram_bounds manual(const big_rational &L, const big_rational &B, const big_rational &Bp,
                           const big_rational &W, int d = 6, const big_rational &p = 1)
{
    saw::diagram_bounds db;
    db.d = d;
    db.p_sup = p;
    db.step_sup = pow2(-d);
    db.loop = certified_upper::exact(L);
    db.bubble = certified_upper::exact(B);
    db.bubble_prime = certified_upper::exact(Bp);
    db.weight = certified_upper::exact(W);
    db.ratio = certified_upper::exact(p * db.step_sup + L + B);
    return db;
}

} // namespace

// Frozen values come from an independent 40-digit floating-point evaluation of
// the same bound chain.
TEST_CASE("initial chain at d = 6")
{
    const chain c = run(saw::initial_diagrams(rw_at(6)));
    CHECK(v(c.db.ratio) == doctest::Approx(0.080089763445).epsilon(1e-10));
    CHECK(v(c.s.pi_odd) == doctest::Approx(0.020588774261).epsilon(1e-10));
    CHECK(v(c.s.pi_even) == doctest::Approx(0.001598169294).epsilon(1e-10));
    CHECK(v(c.s.delta_odd + c.s.delta_even) == doctest::Approx(0.119128986343).epsilon(1e-10));
    CHECK(v(c.g.g1) == doctest::Approx(1.020588774261).epsilon(1e-10));
    CHECK(v(c.g.g2) == doctest::Approx(1.010894840614).epsilon(1e-10));
    CHECK(v(c.g.g3) == doctest::Approx(1.293833015050).epsilon(1e-10));
    CHECK(saw::check_sufficiency(c.s).pass);
    for (const auto *x : {&c.g.g1, &c.g.g2, &c.g.g3}) {
        CHECK(x->enclosure().lo() <= x->value());
        CHECK(x->tail_part() >= 0);
        CHECK(x->tail_part() > 0);
    }
}

TEST_CASE("bootstrap chain at d = 6")
{
    const chain c = run(saw::bootstrap_diagrams(rw_at(6), make_rational(103, 100), make_rational(103, 100),
                                                make_rational(179, 100)));
    CHECK(c.db.stage == stage::bootstrap);
    CHECK(v(c.db.ratio) == doctest::Approx(0.087978667879).epsilon(1e-10));
    CHECK(v(c.s.delta_odd + c.s.delta_even) == doctest::Approx(0.255683455317).epsilon(1e-10));
    CHECK(v(c.g.g1) == doctest::Approx(1.022526897044).epsilon(1e-10));
    CHECK(v(c.g.g2) == doctest::Approx(1.025187233472).epsilon(1e-10));
    CHECK(v(c.g.g3) == doctest::Approx(1.781056425493).epsilon(1e-10));
}

TEST_CASE("d = 5 fails sufficiency")
{
    const chain c = run(saw::initial_diagrams(rw_at(5)));
    CHECK(v(c.db.ratio) == doctest::Approx(0.256410795058).epsilon(1e-10));
    const auto w = saw::check_sufficiency(c.s);
    CHECK_FALSE(w.pass);
    CHECK(w.lhs.value() >= 1);
    CHECK(v(w.lhs) == doctest::Approx(1.310904992694).epsilon(1e-10));
}

TEST_CASE("bootstrap with K = 1 reduces to the initial chain")
{
    const chain a = run(saw::initial_diagrams(rw_at(6)));
    const chain b = run(saw::bootstrap_diagrams(rw_at(6), 1, 1, 1));
    CHECK(a.db.ratio.value() == b.db.ratio.value());
    CHECK(a.g.g1.value() == b.g.g1.value());
    CHECK(a.g.g2.value() == b.g.g2.value());
    CHECK(a.g.g3.value() == b.g.g3.value());
}

TEST_CASE("term bounds sum to the closed forms")
{
    for (const auto &db : {saw::initial_diagrams(rw_at(6)),
                           saw::bootstrap_diagrams(rw_at(6), make_rational(103, 100), make_rational(103, 100),
                                                   make_rational(179, 100)),
                           saw::initial_diagrams(rw_at(7))}) {
        const auto s = saw::compute_series(db);
        big_rational po, pe, dodd, deven;
        for (unsigned long n = 1; n <= 200; ++n) {
            const big_rational p = saw::pi_term_bound(n, db, term_mode::sum).value();
            const big_rational dl = saw::pi_term_bound(n, db, term_mode::delta).value();
            (n % 2 ? po : pe) += p;
            (n % 2 ? dodd : deven) += dl;
        }
        // the tail beyond n = 200 is far below the rounding of the closed forms
        const big_rational tol = pow2(-180);
        CHECK(po <= s.pi_odd.value() + tol);
        CHECK(s.pi_odd.value() - po < tol);
        CHECK(s.pi_even.value() - pe < tol);
        CHECK(s.delta_odd.value() - dodd < tol);
        CHECK(s.delta_even.value() - deven < tol);
        CHECK(pe <= s.pi_even.value() + tol);
        CHECK(dodd <= s.delta_odd.value() + tol);
        CHECK(deven <= s.delta_even.value() + tol);
    }
    const auto db = saw::initial_diagrams(rw_at(6));
    CHECK_THROWS_AS(saw::pi_term_bound(0, db, term_mode::sum), std::invalid_argument);
    CHECK(saw::pi_term_bound(1, db, term_mode::delta).value() == 0);
    CHECK(saw::pi_term_bound(1, db, term_mode::sum).value() == db.loop.value());
}

TEST_CASE("outputs are monotone in the diagram inputs")
{
    using field = std::function<void(big_rational &, big_rational &, big_rational &, big_rational &)>;
    const big_rational h = make_rational(1, 1000);
    const field bumps[] = {
        [&](big_rational &L, big_rational &, big_rational &, big_rational &) { L += h; },
        [&](big_rational &, big_rational &B, big_rational &, big_rational &) { B += h; },
        [&](big_rational &, big_rational &, big_rational &Bp, big_rational &) { Bp += h; },
        [&](big_rational &, big_rational &, big_rational &, big_rational &W) { W += h; },
    };
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> small(1, 40);
    for (int trial = 0; trial < 25; ++trial) {
        big_rational L = make_rational(small(rng), 1000);
        big_rational B = make_rational(small(rng), 1000);
        big_rational Bp = make_rational(small(rng), 2000);
        big_rational W = make_rational(5000 + 50 * small(rng), 1000);
        const chain base = run(manual(L, B, Bp, W));
        for (const auto &bump : bumps) {
            big_rational L2 = L, B2 = B, Bp2 = Bp, W2 = W;
            bump(L2, B2, Bp2, W2);
            const chain up = run(manual(L2, B2, Bp2, W2));
            CHECK(up.g.g1.value() >= base.g.g1.value());
            CHECK(up.g.g2.value() >= base.g.g2.value());
            CHECK(up.g.g3.value() >= base.g.g3.value());
            CHECK((up.s.delta_odd + up.s.delta_even).value() >= (base.s.delta_odd + base.s.delta_even).value());
        }
    }
}

TEST_CASE("outputs are monotone in K")
{
    const auto &rw = rw_at(6);
    const big_rational h = make_rational(1, 100);
    for (big_rational K1 = 1; K1 <= make_rational(106, 100); K1 += 3 * h) {
        for (big_rational K3 = 1; K3 <= 2; K3 += make_rational(1, 4)) {
            const chain base = run(saw::bootstrap_diagrams(rw, K1, K1, K3));
            const chain bumped[] = {run(saw::bootstrap_diagrams(rw, K1 + h, K1, K3)),
                                    run(saw::bootstrap_diagrams(rw, K1, K1 + h, K3)),
                                    run(saw::bootstrap_diagrams(rw, K1, K1, K3 + h))};
            for (const auto &up : bumped) {
                CHECK(up.g.g1.value() >= base.g.g1.value());
                CHECK(up.g.g2.value() >= base.g.g2.value());
                CHECK(up.g.g3.value() >= base.g.g3.value());
            }
        }
    }
}

TEST_CASE("a ratio of at least one is a chain failure")
{
    const auto db = manual(make_rational(1, 2), make_rational(1, 2), 0, 5);
    try {
        (void)saw::compute_series(db);
        FAIL("expected a chain failure");
    } catch (const bound_chain_failure &e) {
        CHECK(std::string(e.constraint()) == "series_divergence");
    }
}

TEST_CASE("g2 denominator failure")
{
    // delta_odd = B^2 (1 + r^2) W / (1 - r^2)^3 exceeds one here
    const auto db = manual(make_rational(1, 100), make_rational(1, 2), 0, 10);
    const auto s = saw::compute_series(db);
    CHECK(s.delta_odd.value() > 1);
    CHECK_THROWS_AS(saw::compute_g_bounds(db, s), bound_chain_failure);
}

TEST_CASE("g3 coefficient identity at random rationals")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(1, 999);
    for (int i = 0; i < 100; ++i) {
        const big_rational r = make_rational(num(rng), 1000);
        const big_rational r2 = r * r;
        const big_rational lhs = ((1 + r2) + 2 * r) / pow(1 - r2, 3);
        const big_rational rhs = 1 / ((1 - r2) * pow(1 - r, 2));
        CHECK(lhs == rhs);
    }
}
