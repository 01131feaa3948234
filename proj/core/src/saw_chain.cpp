#include <lacegate/saw_chain.hpp>

#include <stdexcept>

#include "route.hpp"

namespace lacegate::saw
{

using detail::at;
using detail::certify;
using detail::route;

namespace
{

diagram_bounds make_diagrams(const rw::rw_quantities &rw, lacegate::stage st, const big_rational &K1,
                             const big_rational &K2, const big_rational &K3)
{
    diagram_bounds db;
    db.d = rw.d;
    db.stage = st;
    db.p_sup = st == lacegate::stage::initial ? big_rational(1) : K1;
    db.step_sup = pow2(-rw.d);
    const big_rational K1_2 = K1 * K1;
    db.loop = rw.eps1.bound().scaled(K1_2 * K2);
    db.bubble = rw.eps2.bound().scaled(K1_2 * K2 * K2);
    db.bubble_prime = rw.eps2_prime.bound().scaled(K1_2 * K1_2 * K2 * K2);
    db.weight = rw.bubble_sup.bound().scaled(5 * K3);
    db.ratio = certified_upper::exact(db.p_sup * db.step_sup) + db.loop + db.bubble;
    return db;
}

struct parts {
    directed_real L, B, Bp, W, r, p, D;
};

parts read(const diagram_bounds &db, route rt)
{
    return {at(db.loop, rt),   at(db.bubble, rt), at(db.bubble_prime, rt), at(db.weight, rt),
            at(db.ratio, rt),  directed_real(db.p_sup), directed_real(db.step_sup)};
}

} // namespace

diagram_bounds initial_diagrams(const rw::rw_quantities &rw)
{
    return make_diagrams(rw, lacegate::stage::initial, 1, 1, 1);
}

diagram_bounds bootstrap_diagrams(const rw::rw_quantities &rw, const big_rational &K1, const big_rational &K2,
                                  const big_rational &K3)
{
    return make_diagrams(rw, lacegate::stage::bootstrap, K1, K2, K3);
}

namespace
{

directed_real term_bound(unsigned long n, const parts &v, term_mode mode)
{
    if (mode == term_mode::sum) {
        if (n == 1) {
            return v.L;
        }
        return v.B * (v.p * v.D + v.L) * pow(v.r, n - 2);
    }
    if (n == 1) {
        return directed_real(0);
    }
    if (n == 2) {
        return 3 * v.B * v.p * v.D + v.Bp * v.W;
    }
    const unsigned long m = n / 2;
    const directed_real mm(static_cast<long>(m));
    if (n % 2 == 1) {
        return v.B * v.B * v.W * mm * mm * pow(v.r, 2 * m - 2);
    }
    return v.B * v.B * v.W * mm * (mm - 1) * pow(v.r, 2 * m - 3) + v.B * v.W * mm * pow(v.r, 2 * m - 2);
}

} // namespace

certified_upper pi_term_bound(unsigned long n, const diagram_bounds &db, term_mode mode)
{
    if (n == 0) {
        throw std::invalid_argument("the self-avoiding walk expansion starts at n = 1");
    }
    return certify([&](route rt) { return term_bound(n, read(db, rt), mode); });
}

series_sums compute_series(const diagram_bounds &db)
{
    detail::require_below_one(db.ratio, "series_divergence", "r");
    series_sums s;
    s.pi_odd = certify([&](route rt) {
        const parts v = read(db, rt);
        return v.L + v.B * (v.p * v.D + v.L) * v.r / (1 - v.r * v.r);
    });
    s.pi_even = certify([&](route rt) {
        const parts v = read(db, rt);
        return v.B * (v.p * v.D + v.L) / (1 - v.r * v.r);
    });
    s.delta_odd = certify([&](route rt) {
        const parts v = read(db, rt);
        const directed_real r2 = v.r * v.r;
        return v.B * v.B * (1 + r2) * v.W / pow(1 - r2, 3);
    });
    s.delta_even = certify([&](route rt) {
        const parts v = read(db, rt);
        const directed_real r2 = v.r * v.r;
        const directed_real inner
            = v.Bp + 2 * v.B * v.B * v.r / pow(1 - r2, 3) + v.B * r2 * (2 - r2) / pow(1 - r2, 2);
        return 3 * v.B * v.p * v.D + inner * v.W;
    });
    return s;
}

sufficiency_witness check_sufficiency(const series_sums &s)
{
    sufficiency_witness w;
    w.lhs = s.delta_odd + s.delta_even;
    w.threshold = 1;
    w.pass = w.lhs.value() < w.threshold;
    return w;
}

g_bounds compute_g_bounds(const diagram_bounds &db, const series_sums &s)
{
    g_bounds g;
    g.g1 = certify([&](route rt) { return 1 + at(s.pi_odd, rt); });
    g.g2 = certify([&](route rt) {
        return 1 / detail::require_positive(1 - at(s.delta_odd, rt), "g2_denominator");
    });
    g.g3 = certify([&](route rt) {
        const parts v = read(db, rt);
        const directed_real r2 = v.r * v.r;
        const directed_real g2 = max(at(g.g2, rt), directed_real(1));
        const directed_real inner = (1 + 3 * v.B * v.D) * v.p
                                    + (v.Bp + v.B * v.B / ((1 - r2) * pow(1 - v.r, 2))
                                       + v.B * r2 * (2 - r2) / pow(1 - r2, 2))
                                          * v.W;
        return pow(g2, 3) * inner * inner;
    });
    return g;
}

} // namespace lacegate::saw
