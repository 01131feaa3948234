#ifndef LACEGATE_NUMBER_HPP
#define LACEGATE_NUMBER_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lacegate
{

using big_int = mpz_class;

// Exact rational, always kept in lowest terms with a positive denominator.
using big_rational = mpq_class;

big_rational make_rational(const big_int &num, const big_int &den);
big_rational make_rational(long num, long den = 1);

// Accepts "a/b", "-a/b", integers and plain decimals such as "1.03" or "-.5".
big_rational parse_rational(std::string_view text);

big_int binomial(unsigned long n, unsigned long k);

// 2^e for any integer e.
big_rational pow2(long e);

big_rational pow(const big_rational &base, unsigned long exponent);

big_int floor_of(const big_rational &q);
big_int ceil_of(const big_rational &q);

enum class rounding { down, up, nearest };

// Fixed-point rendering with the given number of fraction digits. With
// rounding::up the printed number is >= q, with rounding::down it is <= q.
std::string to_decimal(const big_rational &q, int digits, rounding mode = rounding::nearest);

} // namespace lacegate

#endif
