#include <lacegate/verifier.hpp>

#include <stdexcept>

#include <lacegate/errors.hpp>

namespace lacegate::verify
{

void grid_axis::validate() const
{
    if (lo > hi) {
        throw std::invalid_argument("empty grid axis");
    }
    if (lo < hi && step <= 0) {
        throw std::invalid_argument("grid step must be positive");
    }
    if (lo < 1 || hi > 10) {
        throw std::invalid_argument("grid points must lie in [1, 10]");
    }
}

std::optional<big_rational> grid_axis::first_above(const big_rational &x) const
{
    if (x < lo) {
        return lo;
    }
    if (lo == hi) {
        return std::nullopt;
    }
    const big_rational k = big_rational(floor_of((x - lo) / step) + 1);
    big_rational point = lo + k * step;
    if (point > hi) {
        return std::nullopt;
    }
    return point;
}

std::optional<big_rational> grid_axis::next(const big_rational &point) const
{
    return first_above(point);
}

std::size_t grid_axis::size() const
{
    if (lo > hi) {
        return 0;
    }
    if (lo == hi) {
        return 1;
    }
    return floor_of((hi - lo) / step).get_ui() + 1;
}

grid_spec grid_spec::uniform(const big_rational &step, const big_rational &lo, const big_rational &hi)
{
    grid_spec g;
    for (auto &a : g.axes) {
        a = grid_axis{lo, hi, step};
    }
    return g;
}

grid_spec grid_spec::single(const bootstrap_constants &K)
{
    grid_spec g;
    g.axes[0] = grid_axis{K.K1, K.K1, 1};
    g.axes[1] = grid_axis{K.K2, K.K2, 1};
    g.axes[2] = grid_axis{K.K3, K.K3, 1};
    return g;
}

void grid_spec::validate() const
{
    for (const auto &a : axes) {
        a.validate();
    }
}

// Every bound of the bootstrap stage is non-decreasing in each K_i. A point
// failing g_i >= K_i therefore rules out the grid points up to that bound along
// axis i, and a failed sufficiency or denominator rules out every larger K3 and,
// at the smallest K3, every larger K2 as well.
search_result search_constants(model m, int d, unsigned long N, const grid_spec &grid)
{
    grid.validate();
    search_result res;
    res.m = m;
    res.d = d;
    res.N = N;
    if (d < min_dimension(m)) {
        res.unsupported = true;
        res.binding_constraint = "unsupported_dimension";
        return res;
    }
    const rw::rw_quantities rw = rw::rw_bundle(d, N);
    const auto &ax = grid.axes;

    bootstrap_constants K{m, d, ax[0].lo, ax[1].lo, ax[2].lo};
    const stage_record init = check_initial(rw, K);
    ++res.evaluations;
    if (!init.g || init.checks.empty() || !init.checks.front().pass) {
        res.point = K;
        res.binding_constraint = "initial:" + init.binding_constraint;
        return res;
    }
    const auto s1 = ax[0].first_above(init.g->g1.value());
    const auto s2 = ax[1].first_above(init.g->g2.value());
    const auto s3 = ax[2].first_above(init.g->g3.value());
    if (!s1 || !s2 || !s3) {
        res.point = K;
        res.binding_constraint = !s1 ? "initial:g1" : !s2 ? "initial:g2" : "initial:g3";
        return res;
    }

    std::optional<big_rational> k1 = s1;
    while (k1) {
        std::optional<big_rational> k2 = s2;
        std::optional<big_rational> jump1;
        bool next_k1 = false;
        while (k2 && !next_k1) {
            std::optional<big_rational> k3 = s3;
            std::optional<big_rational> jump2;
            while (k3) {
                K.K1 = *k1;
                K.K2 = *k2;
                K.K3 = *k3;
                certificate cert = verify_theorem(rw, K);
                ++res.evaluations;
                res.point = K;
                res.binding_constraint = cert.binding_constraint;
                if (cert.theorem_pass) {
                    res.feasible = true;
                    res.winner = std::move(cert);
                    return res;
                }
                const bool corner = *k3 == *s3;
                const stage_record &b = cert.bootstrap;
                const std::string &c = b.binding_constraint;
                if (c == "g1") {
                    next_k1 = true;
                    if (corner && *k2 == *s2) {
                        jump1 = ax[0].first_above(b.g->g1.value());
                    }
                    break;
                }
                if (c == "g2") {
                    if (corner) {
                        jump2 = ax[1].first_above(b.g->g2.value());
                        if (!jump2) {
                            next_k1 = true;
                        }
                    }
                    break;
                }
                if (c == "g3") {
                    k3 = ax[2].first_above(b.g->g3.value());
                    continue;
                }
                if (corner) {
                    next_k1 = true;
                }
                break;
            }
            if (next_k1) {
                break;
            }
            k2 = jump2 ? jump2 : ax[1].next(*k2);
        }
        k1 = jump1 ? jump1 : ax[0].next(*k1);
    }
    return res;
}

} // namespace lacegate::verify
