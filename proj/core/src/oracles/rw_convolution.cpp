#include <lacegate/oracles/rw_convolution.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include <lacegate/errors.hpp>
#include <lacegate/oracles/lattice.hpp>
#include <lacegate/rw_engine.hpp>

namespace lacegate::oracle
{

namespace
{

constexpr std::size_t support_budget = 1'000'000;

} // namespace

std::vector<big_rational> return_probabilities_by_convolution(int d, int max_length)
{
    if (d < 1 || max_length < 0) {
        throw std::invalid_argument("convolution needs d >= 1 and max_length >= 0");
    }
    const auto steps = unit_steps(d);
    std::map<std::vector<int>, big_int> counts{{std::vector<int>(static_cast<std::size_t>(d), 0), 1}};
    std::vector<big_rational> out;
    const std::vector<int> o(static_cast<std::size_t>(d), 0);
    for (int k = 0;; ++k) {
        const auto it = counts.find(o);
        const big_int at_origin = it == counts.end() ? big_int(0) : it->second;
        out.push_back(big_rational(at_origin) * pow2(-static_cast<long>(d) * k));
        if (k == max_length) {
            return out;
        }
        std::map<std::vector<int>, big_int> next;
        for (const auto &[x, c] : counts) {
            for (const auto &e : steps) {
                std::vector<int> y = x;
                for (std::size_t j = 0; j < y.size(); ++j) {
                    y[j] += e.coords[j];
                }
                next[y] += c;
            }
        }
        if (next.size() > support_budget) {
            throw scale_error("random-walk convolution support exceeds the budget");
        }
        counts = std::move(next);
    }
}

unsigned long long composition_count(int total, int parts)
{
    if (total < 0 || parts < 0) {
        return 0;
    }
    if (parts == 0) {
        return total == 0 ? 1 : 0;
    }
    unsigned long long n = 0;
    for (int first = 0; first <= total; ++first) {
        n += composition_count(total - first, parts - 1);
    }
    return n;
}

bool rw_convolution_report::pass() const
{
    return std::all_of(identities.begin(), identities.end(), [](const auto &i) { return i.match(); });
}

rw_convolution_report rw_convolution_check(int d, int N)
{
    if (N < 1 || N > 8) {
        throw std::invalid_argument("rw_convolution_check needs 1 <= N <= 8");
    }
    const auto D = return_probabilities_by_convolution(d, 2 * N);
    const auto n_terms = static_cast<unsigned long>(N);

    // sum over walk lengths L <= 2N of D^{*L}(o) times the number of ways a
    // convolution with `fixed` steps fixed and `free` free factors has length L
    auto convolution = [&](int fixed, int free) {
        big_rational s = 0;
        for (int L = fixed; L <= 2 * N; ++L) {
            s += D[static_cast<std::size_t>(L)] * big_rational(big_int(static_cast<unsigned long>(composition_count(L - fixed, free))));
        }
        return s;
    };

    rw_convolution_report report;
    report.d = d;
    report.N = N;
    for (int L = 0; L <= 2 * N; L += 2) {
        const auto n = static_cast<unsigned long>(L / 2);
        report.identities.push_back({"D^{*" + std::to_string(L) + "}(o)", n == 0 ? big_rational(1) : rw::return_probability(n, d),
                                     D[static_cast<std::size_t>(L)]});
    }
    const big_rational e1 = rw::epsilon_partial(rw::series_kind::loop, d, n_terms);
    const big_rational e2 = rw::epsilon_partial(rw::series_kind::bubble, d, n_terms);
    const big_rational e3 = rw::epsilon_partial(rw::series_kind::triangle, d, n_terms);
    const big_rational e2p = rw::epsilon_partial(rw::series_kind::bubble_prime, d, n_terms);
    report.identities.push_back({"eps1 = (D*2 * S1)(o)", e1, convolution(2, 1)});
    report.identities.push_back({"eps2 = (D*2 * S1*2)(o)", e2, convolution(2, 2)});
    report.identities.push_back({"eps3 = (D*2 * S1*3)(o)", e3, convolution(2, 3)});
    report.identities.push_back({"eps2' = (D*4 * S1*2)(o)", e2p, convolution(4, 2)});
    report.identities.push_back({"S1*2(o) = 1 + 2 eps1 + eps2", 1 + 2 * e1 + e2, convolution(0, 2)});
    report.identities.push_back({"S1*3(o) = 1 + 3 eps1 + 2 eps2 + eps3", 1 + 3 * e1 + 2 * e2 + e3, convolution(0, 3)});
    return report;
}

} // namespace lacegate::oracle
