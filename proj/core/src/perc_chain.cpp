#include <lacegate/perc_chain.hpp>

#include "route.hpp"

namespace lacegate::perc
{

using detail::at;
using detail::certify;
using detail::route;

namespace
{

diagram_bounds make_diagrams(const rw::rw_quantities &rw, lacegate::stage st, const big_rational &K1,
                             const big_rational &K2, const big_rational &K3)
{
    const certified_upper &e1 = rw.eps1.bound();
    const certified_upper &e2 = rw.eps2.bound();
    const certified_upper &e3 = rw.eps3.bound();
    const certified_upper &sup3 = rw.triangle_sup.bound();

    diagram_bounds db;
    db.d = rw.d;
    db.stage = st;
    db.p_sup = st == lacegate::stage::initial ? big_rational(1) : K1;
    db.step_sup = pow2(-rw.d);

    const big_rational K1_2 = K1 * K1;
    const big_rational K1_3 = K1_2 * K1;
    db.loop = e1.scaled(K1_2 * K2);
    db.bubble = e2.scaled(K1_2 * K2 * K2);
    db.triangle = e3.scaled(K1_2 * K2 * K2 * K2);

    db.vertex[0] = e1.scaled(K1_2 * K2) + e3.scaled(5 * K1_2 * K2 * K3);
    db.vertex[1] = certified_upper::exact(K1 + 5 * K1_2 * db.step_sup) + e1.scaled(5 * K1_3 * K2)
                   + e2.scaled(6 * K1_3 * K2 * K2) + e3.scaled(20 * K1_2 * K2 * K3);
    db.vertex[2] = certified_upper::exact(K1_2 * db.step_sup) + e1.scaled(K1_3 * K2) + e2.scaled(2 * K1_3 * K2 * K2)
                   + e3.scaled(10 * K1_2 * K2 * K3);
    const big_rational K2_7 = pow(K2, 7);
    db.vertex[3] = certify([&](route rt) {
        const directed_real t = at(e3, rt);
        return directed_real(5 * K1_2 * K1_3 * K2_7 * K3) * at(sup3, rt) * t * t;
    });

    db.ratio = certified_upper::exact(db.p_sup * db.step_sup) + db.loop + db.bubble;
    db.rho = certify([&](route rt) {
        const directed_real r = at(db.ratio, rt);
        const directed_real B = at(db.bubble, rt);
        const directed_real T = at(db.triangle, rt);
        return T * (2 * r + T) + (r + T) * (1 + B / 2 + T);
    });
    return db;
}

struct parts {
    directed_real B, T, r, rho, a, p;
    std::array<directed_real, 4> V;
};

parts read(const diagram_bounds &db, route rt)
{
    parts v;
    v.B = at(db.bubble, rt);
    v.T = at(db.triangle, rt);
    v.r = at(db.ratio, rt);
    v.rho = at(db.rho, rt);
    v.a = 1 + v.B / 2 + v.T;
    v.p = directed_real(db.p_sup);
    for (std::size_t j = 0; j < 4; ++j) {
        v.V[j] = at(db.vertex[j], rt);
    }
    return v;
}

directed_real first_odd_coefficient(const parts &v)
{
    return 1 + 2 * (v.B + v.r) + directed_real(make_rational(3, 4)) * v.B * (v.B + 2 * v.r) + 3 * v.T * v.r;
}

directed_real vertex_sum(const std::array<directed_real, 4> &c, const parts &v)
{
    return c[0] * v.V[0] + c[1] * v.V[1] + c[2] * v.V[2] + c[3] * v.V[3];
}

directed_real term_bound(unsigned long n, const parts &v, term_mode mode)
{
    const directed_real &a = v.a;
    const directed_real &r = v.r;
    const directed_real &T = v.T;
    const directed_real &rho = v.rho;
    if (mode == term_mode::sum) {
        if (n == 0) {
            return v.B / 2;
        }
        return a * a * r * pow(rho, n - 1);
    }
    if (n == 0) {
        return v.V[0] / 2;
    }
    if (n == 1) {
        return first_odd_coefficient(v) * v.V[0] + (8 + 6 * v.B + 9 * T) * T * v.V[2];
    }
    const unsigned long m = n / 2;
    const directed_real mm(static_cast<long>(m));
    std::array<directed_real, 4> c;
    if (n % 2 == 0) {
        const directed_real s = pow(rho, 2 * m - 1);
        const directed_real w = a * a * pow(rho, 2 * m - 2);
        const directed_real k = 2 * mm - 1;
        c[0] = 2 * r * a * s + w * (k * r * r + (mm - 1) * r * T);
        c[1] = T * a * s + mm * a * a * s + w * k * (r * T + T * T);
        c[2] = T * a * s + mm * a * a * s + w * k * r * T;
        c[3] = w * (mm - 1);
        return (4 * mm + 1) * vertex_sum(c, v);
    }
    const directed_real s = pow(rho, 2 * m);
    const directed_real w = mm * pow(rho, 2 * m - 1) * a * a;
    c[0] = 2 * s * r * a + w * (2 * r * r + r * T);
    c[1] = s * mm * a * a + w * 2 * (r * T + T * T);
    c[2] = 2 * s * T * a + s * (mm + 1) * a * a + w * 2 * r * T;
    c[3] = w;
    return (4 * mm + 3) * vertex_sum(c, v);
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

certified_upper pi_term_bound(unsigned long n, const diagram_bounds &db, term_mode mode)
{
    return certify([&](route rt) { return term_bound(n, read(db, rt), mode); });
}

phi_coefficients compute_phi(const diagram_bounds &db)
{
    detail::require_below_one(db.rho, "series_divergence", "rho");
    using coefficient = directed_real (*)(const parts &);
    static constexpr std::array<coefficient, 4> even = {
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return directed_real(make_rational(1, 2)) + a * 10 * r * rho / pow(o, 2)
                   + a * a * (r * r * (5 + 12 * rho * rho) + 3 * T * r * rho * rho * (3 + rho)) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return a * 5 * T * rho / pow(o, 2)
                   + a * a * (rho * (5 + 3 * rho * rho) + T * (r + T) * (5 + 12 * rho * rho)) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return a * 5 * T * rho / pow(o, 2)
                   + a * a * (rho * (5 + 3 * rho * rho) + T * r * (5 + 12 * rho * rho)) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return a * a * 3 * rho * rho * (3 + rho) / pow(o, 3);
        },
    };
    static constexpr std::array<coefficient, 4> odd = {
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return first_odd_coefficient(v) + a * 14 * r * rho * rho / pow(o, 2)
                   + a * a * r * rho * (2 * r + T) * (7 + rho * rho) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return a * a * rho * (rho + 2 * T * r + 2 * T * T) * (7 + rho * rho) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return T * (8 + 6 * B + 9 * T) + a * 14 * T * rho * rho / pow(o, 2)
                   + a * a * (rho * rho * (14 + 3 * rho * rho) + 2 * T * r * rho * (7 + rho * rho)) / pow(o, 3);
        },
        [](const parts &v) {
            const auto &[B, T, r, rho, a, p, V] = v;
            const directed_real o = 1 - rho * rho;
            return a * a * rho * (7 + rho * rho) / pow(o, 3);
        },
    };
    phi_coefficients phi;
    for (std::size_t j = 0; j < 4; ++j) {
        phi.even[j] = certify([&](route rt) { return even[j](read(db, rt)); });
        phi.odd[j] = certify([&](route rt) { return odd[j](read(db, rt)); });
    }
    return phi;
}

series_sums compute_series(const diagram_bounds &db, const phi_coefficients &phi)
{
    detail::require_below_one(db.rho, "series_divergence", "rho");
    series_sums s;
    s.pi_even = certify([&](route rt) {
        const parts v = read(db, rt);
        return v.B / 2 + v.a * v.a * v.r * v.rho / (1 - v.rho * v.rho);
    });
    s.pi_odd = certify([&](route rt) {
        const parts v = read(db, rt);
        return v.a * v.a * v.r / (1 - v.rho * v.rho);
    });
    const auto weighted = [&](const std::array<certified_upper, 4> &c) {
        return certify([&](route rt) {
            const parts v = read(db, rt);
            return vertex_sum({at(c[0], rt), at(c[1], rt), at(c[2], rt), at(c[3], rt)}, v);
        });
    };
    s.delta_even = weighted(phi.even);
    s.delta_odd = weighted(phi.odd);
    return s;
}

sufficiency_witness check_sufficiency(const series_sums &s)
{
    sufficiency_witness w;
    w.lhs = s.pi_even + s.pi_odd + s.delta_even + s.delta_odd;
    w.threshold = 1;
    w.pass = w.lhs.value() < w.threshold;
    return w;
}

namespace
{

// 1 - B/2 - (1 + B/2 + T)^2 r / (1 - rho)
directed_real lower_denominator(const parts &v)
{
    return detail::require_positive(1 - v.B / 2 - v.a * v.a * v.r / (1 - v.rho), "g2_denominator");
}

} // namespace

g_bounds compute_g_bounds(const diagram_bounds &db, const phi_coefficients &, const series_sums &s)
{
    detail::require_below_one(db.rho, "series_divergence", "rho");
    g_bounds g;
    g.g1 = certify([&](route rt) {
        const parts v = read(db, rt);
        return 1 / detail::require_positive(1 - v.a * v.a * v.r / (1 - v.rho * v.rho), "g1_denominator");
    });
    g.g2 = certify([&](route rt) {
        const parts v = read(db, rt);
        const directed_real den = lower_denominator(v);
        return 1 / detail::require_positive(1 - at(s.delta_odd, rt) / den, "g2_denominator");
    });
    // The prefactor uses the certified g2 bound in both stages.
    g.g3 = certify([&](route rt) {
        const parts v = read(db, rt);
        const directed_real den = lower_denominator(v);
        const directed_real pre = max(at(g.g2, rt) / den, directed_real(1));
        const directed_real inner
            = 1 + v.B + 2 * v.a * v.a * v.r / (1 - v.rho) + 2 * (at(s.delta_even, rt) + at(s.delta_odd, rt));
        return pow(pre, 3) * v.p * v.p * inner * inner;
    });
    return g;
}

} // namespace lacegate::perc
