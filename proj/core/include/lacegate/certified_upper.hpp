#ifndef LACEGATE_CERTIFIED_UPPER_HPP
#define LACEGATE_CERTIFIED_UPPER_HPP

#include <lacegate/directed_real.hpp>
#include <lacegate/number.hpp>

namespace lacegate
{

// Certified upper bound split into the part obtained from finitely many
// exactly computed terms and the part that controls everything else.
//
// For a truncated series the exact part is a lower bound as well, so
// enclosure() brackets the true value. For quantities derived through a bound
// chain the split records how much of the bound the tails account for:
// exact_part is the chain evaluated at truncated inputs, value() the chain at
// full inputs.
class certified_upper
{
public:
    certified_upper() = default;

    static certified_upper exact(const big_rational &q);
    // Throws std::invalid_argument when the tail is negative.
    static certified_upper from_parts(const big_rational &exact_part, const big_rational &tail_part);
    // truncated and full are enclosures of one chain evaluated at the exact
    // parts and at the full values of its inputs respectively.
    static certified_upper from_routes(const directed_real &truncated, const directed_real &full);

    const big_rational &exact_part() const noexcept
    {
        return m_exact;
    }
    const big_rational &tail_part() const noexcept
    {
        return m_tail;
    }
    big_rational value() const
    {
        return m_exact + m_tail;
    }
    directed_real enclosure() const
    {
        return directed_real(m_lower, value());
    }

    certified_upper &operator+=(const certified_upper &other);
    friend certified_upper operator+(certified_upper a, const certified_upper &b)
    {
        return a += b;
    }
    // Scaling by a non-negative rational.
    certified_upper scaled(const big_rational &factor) const;

private:
    big_rational m_exact;
    big_rational m_tail;
    big_rational m_lower;
};

} // namespace lacegate

#endif
