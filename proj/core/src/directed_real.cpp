#include <lacegate/directed_real.hpp>

#include <stdexcept>

#include <lacegate/errors.hpp>

namespace lacegate
{

namespace
{

bool is_dyadic_within(const big_rational &q, long bits)
{
    const auto den = q.get_den_mpz_t();
    const auto den_bits = mpz_sizeinbase(den, 2);
    if (mpz_scan1(den, 0) != den_bits - 1) {
        return false;
    }
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) <= bits;
}

// Exponent s such that q * 2^s has roughly `bits` bits in its integer part.
long scale_for(const big_rational &q, long bits)
{
    const long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2))
                   - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    return bits - e;
}

big_rational round_dir(const big_rational &q, long bits, bool up)
{
    if (q == 0 || is_dyadic_within(q, bits)) {
        return q;
    }
    const long s = scale_for(q, bits);
    const big_rational scaled = q * pow2(s);
    const big_int n = up ? ceil_of(scaled) : floor_of(scaled);
    return big_rational(n) * pow2(-s);
}

directed_real rounded(const big_rational &lo, const big_rational &hi)
{
    return directed_real(round_down(lo), round_up(hi));
}

} // namespace

big_rational round_down(const big_rational &q, long bits)
{
    return round_dir(q, bits, false);
}

big_rational round_up(const big_rational &q, long bits)
{
    return round_dir(q, bits, true);
}

directed_real::directed_real(long value) : m_lo(value), m_hi(value) {}

directed_real::directed_real(const big_rational &value) : m_lo(value), m_hi(value) {}

directed_real::directed_real(const big_rational &lo, const big_rational &hi) : m_lo(lo), m_hi(hi)
{
    if (lo > hi) {
        throw std::invalid_argument("directed_real with lo > hi");
    }
}

directed_real &directed_real::operator+=(const directed_real &b)
{
    return *this = rounded(m_lo + b.m_lo, m_hi + b.m_hi);
}

directed_real &directed_real::operator-=(const directed_real &b)
{
    return *this = rounded(m_lo - b.m_hi, m_hi - b.m_lo);
}

directed_real &directed_real::operator*=(const directed_real &b)
{
    if (m_lo >= 0 && b.m_lo >= 0) {
        return *this = rounded(m_lo * b.m_lo, m_hi * b.m_hi);
    }
    const big_rational p[4] = {m_lo * b.m_lo, m_lo * b.m_hi, m_hi * b.m_lo, m_hi * b.m_hi};
    big_rational lo = p[0], hi = p[0];
    for (const auto &v : p) {
        if (v < lo) {
            lo = v;
        }
        if (v > hi) {
            hi = v;
        }
    }
    return *this = rounded(lo, hi);
}

directed_real &directed_real::operator/=(const directed_real &b)
{
    if (b.contains_zero()) {
        throw singularity_error("division by an enclosure containing zero");
    }
    const directed_real reciprocal(1 / b.m_hi, 1 / b.m_lo);
    return *this *= reciprocal;
}

directed_real operator-(const directed_real &a)
{
    return directed_real(-a.hi(), -a.lo());
}

directed_real pow(const directed_real &x, unsigned long n)
{
    if (n == 0) {
        return directed_real(1);
    }
    const big_rational a = pow(x.lo(), n);
    const big_rational b = pow(x.hi(), n);
    if (n % 2 == 1 || x.lo() >= 0) {
        return directed_real(round_down(a), round_up(b));
    }
    if (x.hi() <= 0) {
        return directed_real(round_down(b), round_up(a));
    }
    return directed_real(0, round_up(a > b ? a : b));
}

namespace
{

big_int isqrt(const big_int &v)
{
    big_int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

big_rational sqrt_bound(const big_rational &q, bool up)
{
    if (q == 0) {
        return q;
    }
    const long s = scale_for(q, 2 * directed_real::working_bits) / 2;
    const big_rational scaled = q * pow2(2 * s);
    if (up) {
        const big_int t = ceil_of(scaled);
        big_int r = isqrt(t);
        if (r * r < t) {
            r += 1;
        }
        return big_rational(r) * pow2(-s);
    }
    return big_rational(isqrt(floor_of(scaled))) * pow2(-s);
}

} // namespace

directed_real sqrt(const directed_real &x)
{
    if (x.lo() < 0) {
        throw std::domain_error("square root of an enclosure with negative points");
    }
    return directed_real(sqrt_bound(x.lo(), false), sqrt_bound(x.hi(), true));
}

directed_real max(const directed_real &a, const directed_real &b)
{
    return directed_real(a.lo() > b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

directed_real min(const directed_real &a, const directed_real &b)
{
    return directed_real(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() < b.hi() ? a.hi() : b.hi());
}

directed_real hull(const directed_real &a, const directed_real &b)
{
    return directed_real(a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi());
}

std::ostream &operator<<(std::ostream &os, const directed_real &x)
{
    return os << '[' << to_decimal(x.lo(), 12, rounding::down) << ", "
              << to_decimal(x.hi(), 12, rounding::up) << ']';
}

} // namespace lacegate
