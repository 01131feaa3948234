#include <lacegate/rw_engine.hpp>

#include <array>
#include <stdexcept>
#include <vector>

#include <lacegate/errors.hpp>
#include <lacegate/pi.hpp>

namespace lacegate::rw
{

std::string_view name(series_kind kind)
{
    switch (kind) {
        case series_kind::loop:
            return "loop";
        case series_kind::bubble:
            return "bubble";
        case series_kind::triangle:
            return "triangle";
        case series_kind::bubble_prime:
            return "bubble_prime";
    }
    return "unknown";
}

int convergence_threshold(series_kind kind)
{
    switch (kind) {
        case series_kind::loop:
            return 3;
        case series_kind::bubble:
        case series_kind::bubble_prime:
            return 5;
        case series_kind::triangle:
            return 7;
    }
    return 0;
}

const certified_upper &rw_entry::bound() const
{
    if (!m_bound) {
        throw divergence_error("random-walk quantity is infinite in this dimension");
    }
    return *m_bound;
}

namespace
{

void check_dimension(int d)
{
    if (d < 1) {
        throw std::invalid_argument("dimension must be positive");
    }
}

big_rational central_ratio(unsigned long n)
{
    return make_rational(binomial(2 * n, n), big_int(1) << static_cast<mp_bitcnt_t>(2 * n));
}

// x^{-e/2} for a positive rational x and a positive integer e.
directed_real inverse_half_power(const big_rational &x, unsigned long e)
{
    directed_real p = pow(directed_real(x), e / 2);
    if (e % 2 == 1) {
        p = p * sqrt(directed_real(x));
    }
    return directed_real(1) / p;
}

struct partials {
    big_rational loop;
    big_rational bubble;
    big_rational triangle;
    big_rational bubble_prime;
};

partials partial_sums(int d, unsigned long N)
{
    partials s;
    big_rational q = 1;
    for (unsigned long n = 1; n <= N; ++n) {
        q *= make_rational(big_int(2 * n - 1), big_int(2 * n));
        const big_rational t = pow(q, static_cast<unsigned long>(d));
        const long m = static_cast<long>(n);
        s.loop += t;
        s.bubble += t * (2 * m - 1);
        s.triangle += t * ((2 * m - 1) * m);
        if (n >= 2) {
            s.bubble_prime += t * (2 * m - 3);
        }
    }
    return s;
}

const big_rational &pick(const partials &s, series_kind kind)
{
    switch (kind) {
        case series_kind::loop:
            return s.loop;
        case series_kind::bubble:
            return s.bubble;
        case series_kind::triangle:
            return s.triangle;
        case series_kind::bubble_prime:
            break;
    }
    return s.bubble_prime;
}

// Integral comparison of sum_{n>N} w(n) (pi n)^{-d/2} after w(n) <= c n^j.
directed_real tail_bound(series_kind kind, int d, unsigned long N)
{
    const directed_real ipi = inverse_pi_power(d);
    const big_rational n(static_cast<long>(N));
    switch (kind) {
        case series_kind::loop:
            return ipi * 2 * inverse_half_power(n, static_cast<unsigned long>(d - 2))
                   / directed_real(d - 2);
        case series_kind::bubble:
        case series_kind::bubble_prime:
            return ipi * 4 * inverse_half_power(n, static_cast<unsigned long>(d - 4))
                   / directed_real(d - 4);
        case series_kind::triangle:
            break;
    }
    return ipi * 2 * directed_real(make_rational(2, d - 6))
           * inverse_half_power(n, static_cast<unsigned long>(d - 6));
}

rw_entry make_entry(series_kind kind, int d, unsigned long N, const big_rational &exact)
{
    if (d < convergence_threshold(kind)) {
        return rw_entry::divergent();
    }
    return rw_entry::finite(certified_upper::from_parts(exact, tail_bound(kind, d, N).hi()));
}

rw_entry combine(const std::vector<std::pair<long, const rw_entry *>> &terms)
{
    certified_upper total = certified_upper::exact(1);
    for (const auto &[coefficient, entry] : terms) {
        if (entry->is_divergent()) {
            return rw_entry::divergent();
        }
        total += entry->bound().scaled(coefficient);
    }
    return rw_entry::finite(total);
}

} // namespace

big_rational return_probability(unsigned long n, int d)
{
    check_dimension(d);
    return pow(central_ratio(n), static_cast<unsigned long>(d));
}

directed_real inverse_pi_power(int d)
{
    check_dimension(d);
    static const std::array<directed_real, 65> table = [] {
        std::array<directed_real, 65> t;
        const directed_real p = pi_enclosure(directed_real::working_bits + 16);
        const directed_real root = directed_real(1) / sqrt(p);
        directed_real acc(1);
        for (std::size_t k = 0; k < t.size(); ++k) {
            t[k] = acc;
            acc = acc * root;
        }
        return t;
    }();
    if (static_cast<std::size_t>(d) < table.size()) {
        return table[static_cast<std::size_t>(d)];
    }
    return pow(table[1], static_cast<unsigned long>(d));
}

sandwich stirling_sandwich(unsigned long n, int d)
{
    check_dimension(d);
    if (n == 0) {
        throw std::invalid_argument("stirling_sandwich needs n >= 1");
    }
    sandwich s;
    s.asymptotic = inverse_pi_power(d) * inverse_half_power(big_rational(static_cast<long>(n)),
                                                            static_cast<unsigned long>(d));
    s.gap = s.asymptotic - directed_real(return_probability(n, d));
    s.bound = s.asymptotic * directed_real(make_rational(2L * d, 15L * static_cast<long>(n)));
    return s;
}

big_rational epsilon_partial(series_kind kind, int d, unsigned long N)
{
    check_dimension(d);
    return pick(partial_sums(d, N), kind);
}

rw_entry epsilon_upper(series_kind kind, int d, unsigned long N)
{
    check_dimension(d);
    if (N == 0) {
        throw std::invalid_argument("epsilon_upper needs N >= 1");
    }
    if (d < convergence_threshold(kind)) {
        return rw_entry::divergent();
    }
    return make_entry(kind, d, N, epsilon_partial(kind, d, N));
}

const rw_entry &rw_quantities::get(series_kind kind) const
{
    switch (kind) {
        case series_kind::loop:
            return eps1;
        case series_kind::bubble:
            return eps2;
        case series_kind::triangle:
            return eps3;
        case series_kind::bubble_prime:
            break;
    }
    return eps2_prime;
}

rw_quantities rw_bundle(int d, unsigned long N)
{
    if (d <= 2) {
        throw divergence_error("the loop series diverges for d <= 2");
    }
    if (N == 0) {
        throw std::invalid_argument("rw_bundle needs N >= 1");
    }
    const partials s = partial_sums(d, N);
    rw_quantities q;
    q.d = d;
    q.N = N;
    q.eps1 = make_entry(series_kind::loop, d, N, s.loop);
    q.eps2 = make_entry(series_kind::bubble, d, N, s.bubble);
    q.eps3 = make_entry(series_kind::triangle, d, N, s.triangle);
    q.eps2_prime = make_entry(series_kind::bubble_prime, d, N, s.bubble_prime);
    q.bubble_sup = combine({{2, &q.eps1}, {1, &q.eps2}});
    q.triangle_sup = combine({{3, &q.eps1}, {2, &q.eps2}, {1, &q.eps3}});
    return q;
}

} // namespace lacegate::rw
