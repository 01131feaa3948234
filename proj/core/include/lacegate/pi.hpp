#ifndef LACEGATE_PI_HPP
#define LACEGATE_PI_HPP

#include <lacegate/directed_real.hpp>

namespace lacegate
{

// Rigorous enclosure of pi of width at most 2^-precision_bits.
directed_real pi_enclosure(long precision_bits = directed_real::working_bits);

} // namespace lacegate

#endif
