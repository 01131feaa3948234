#ifndef LACEGATE_CHAIN_COMMON_HPP
#define LACEGATE_CHAIN_COMMON_HPP

#include <lacegate/certified_upper.hpp>
#include <lacegate/number.hpp>

namespace lacegate
{

// initial: p = 1 with all K_i = 1. bootstrap: p inside (1, p_c) under the
// assumption g_i(p) <= K_i.
enum class stage { initial, bootstrap };

// Strict inequality lhs < threshold evaluated on the certified upper value.
struct sufficiency_witness {
    certified_upper lhs;
    big_rational threshold = 1;
    bool pass = false;
};

struct g_bounds {
    certified_upper g1;
    certified_upper g2;
    certified_upper g3;
};

// Which terms of a lace-expansion series a term bound refers to: the
// coefficients themselves, or their weighted second differences.
enum class term_mode { sum, delta };

} // namespace lacegate

#endif
