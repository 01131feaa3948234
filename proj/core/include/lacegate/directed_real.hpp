#ifndef LACEGATE_DIRECTED_REAL_HPP
#define LACEGATE_DIRECTED_REAL_HPP

#include <ostream>

#include <lacegate/number.hpp>

namespace lacegate
{

// Closed interval [lo, hi] with rational endpoints. Every arithmetic result
// is rounded outward to a dyadic rational with working_bits significant bits,
// so the exact result of an operation on members is always a member.
class directed_real
{
public:
    static constexpr long working_bits = 192;

    directed_real() = default;
    directed_real(long value);
    directed_real(const big_rational &value);
    directed_real(const big_rational &lo, const big_rational &hi);

    const big_rational &lo() const noexcept
    {
        return m_lo;
    }
    const big_rational &hi() const noexcept
    {
        return m_hi;
    }
    big_rational width() const
    {
        return m_hi - m_lo;
    }

    bool contains(const big_rational &q) const
    {
        return m_lo <= q && q <= m_hi;
    }
    bool contains(const directed_real &other) const
    {
        return m_lo <= other.m_lo && other.m_hi <= m_hi;
    }
    bool contains_zero() const
    {
        return m_lo <= 0 && m_hi >= 0;
    }
    bool is_point() const
    {
        return m_lo == m_hi;
    }

    directed_real &operator+=(const directed_real &);
    directed_real &operator-=(const directed_real &);
    directed_real &operator*=(const directed_real &);
    directed_real &operator/=(const directed_real &);

    friend directed_real operator+(directed_real a, const directed_real &b)
    {
        return a += b;
    }
    friend directed_real operator-(directed_real a, const directed_real &b)
    {
        return a -= b;
    }
    friend directed_real operator*(directed_real a, const directed_real &b)
    {
        return a *= b;
    }
    friend directed_real operator/(directed_real a, const directed_real &b)
    {
        return a /= b;
    }
    friend directed_real operator-(const directed_real &a);

private:
    big_rational m_lo;
    big_rational m_hi;
};

big_rational round_down(const big_rational &q, long bits = directed_real::working_bits);
big_rational round_up(const big_rational &q, long bits = directed_real::working_bits);

directed_real pow(const directed_real &x, unsigned long n);
directed_real sqrt(const directed_real &x);
directed_real max(const directed_real &a, const directed_real &b);
directed_real min(const directed_real &a, const directed_real &b);
// Convex hull of the two enclosures.
directed_real hull(const directed_real &a, const directed_real &b);

std::ostream &operator<<(std::ostream &os, const directed_real &x);

} // namespace lacegate

#endif
