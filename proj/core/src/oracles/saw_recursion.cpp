#include <lacegate/oracles/saw_enumeration.hpp>

#include <set>
#include <stdexcept>

namespace lacegate::oracle
{

namespace
{

std::set<lattice_site> joint_support(std::initializer_list<const site_power_series *> series)
{
    std::set<lattice_site> sites;
    for (const auto *s : series) {
        for (const auto &x : s->support()) {
            sites.insert(x);
        }
    }
    return sites;
}

void check_remainder(const site_power_series &remainder, const site_power_series *bound, saw_recursion_report &report)
{
    const auto sites = bound ? joint_support({&remainder, bound}) : joint_support({&remainder});
    for (const auto &x : sites) {
        for (int n = 0; n <= report.max_degree; ++n) {
            const big_rational r = remainder.coefficient(x, n);
            if (r < 0) {
                report.negative_remainders.push_back({x, n, r, 0});
            }
            if (bound) {
                const big_rational b = bound->coefficient(x, n);
                if (r > b) {
                    report.bound_violations.push_back({x, n, r, b});
                }
            }
        }
    }
}

} // namespace

saw_recursion_report verify_saw_recursion(int d, int max_degree, int depth)
{
    if (depth != 1 && depth != 2) {
        throw std::invalid_argument("the recursion check supports depth 1 and 2");
    }
    saw_recursion_report report;
    report.d = d;
    report.max_degree = max_degree;
    report.depth = depth;

    const site_power_series G = enumerate_saw_series(d, max_degree);
    const site_power_series pi1 = pi_direct(d, 1, max_degree);
    const site_power_series pi2 = pi_direct(d, 2, max_degree);
    const saw_remainders R = remainders_direct(d, max_degree);

    const site_power_series pi1G = convolve(pi1, G);
    const site_power_series pi2G = convolve(pi2, G);
    site_power_series rhs = unit_series(d, max_degree) + convolve(step_series(d, max_degree), G) - pi1G;
    rhs = depth == 1 ? rhs + R.second : rhs + pi2G - R.third;

    for (const auto &x : joint_support({&G, &rhs})) {
        for (int n = 0; n <= max_degree; ++n) {
            ++report.coefficients_checked;
            const big_rational l = G.coefficient(x, n);
            const big_rational r = rhs.coefficient(x, n);
            if (l != r) {
                report.mismatches.push_back({x, n, l, r});
            }
        }
    }

    check_remainder(R.first, &pi1G, report);
    check_remainder(R.second, &pi2G, report);
    report.remainder_orders_checked = 2;
    if (depth == 2) {
        // no direct third coefficient to compare against
        check_remainder(R.third, nullptr, report);
    }
    return report;
}

} // namespace lacegate::oracle
