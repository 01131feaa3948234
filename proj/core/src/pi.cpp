#include <lacegate/pi.hpp>

#include <stdexcept>

namespace lacegate
{

namespace
{

// Enclosure of arctan(1/x) from the alternating Taylor series, stopping once
// the next term drops below 2^-bits.
directed_real arctan_inverse(long x, long bits)
{
    const big_rational eps = pow2(-bits);
    const big_rational x2 = big_rational(x * x);
    big_rational power = big_rational(1, x); // x^-(2k+1)
    big_rational sum = 0;
    for (long k = 0;; ++k) {
        const big_rational term = power / (2 * k + 1);
        if (term < eps) {
            return directed_real(sum - term, sum + term);
        }
        sum += (k % 2 == 0) ? term : big_rational(-term);
        power /= x2;
    }
}

} // namespace

directed_real pi_enclosure(long precision_bits)
{
    if (precision_bits < 1) {
        throw std::invalid_argument("pi_enclosure needs a positive precision");
    }
    const long bits = precision_bits + 8;
    const directed_real a = arctan_inverse(5, bits);
    const directed_real b = arctan_inverse(239, bits);
    const big_rational lo = 16 * a.lo() - 4 * b.hi();
    const big_rational hi = 16 * a.hi() - 4 * b.lo();
    return directed_real(round_down(lo, bits + 4), round_up(hi, bits + 4));
}

} // namespace lacegate
