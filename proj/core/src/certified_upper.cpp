#include <lacegate/certified_upper.hpp>

#include <stdexcept>

namespace lacegate
{

certified_upper certified_upper::exact(const big_rational &q)
{
    return from_parts(q, 0);
}

certified_upper certified_upper::from_parts(const big_rational &exact_part, const big_rational &tail_part)
{
    if (tail_part < 0) {
        throw std::invalid_argument("certified_upper with a negative tail part");
    }
    certified_upper c;
    c.m_exact = exact_part;
    c.m_tail = tail_part;
    c.m_lower = exact_part;
    return c;
}

certified_upper certified_upper::from_routes(const directed_real &truncated, const directed_real &full)
{
    certified_upper c;
    c.m_exact = truncated.hi() < full.hi() ? truncated.hi() : full.hi();
    c.m_tail = full.hi() - c.m_exact;
    c.m_lower = full.lo();
    return c;
}

certified_upper &certified_upper::operator+=(const certified_upper &other)
{
    m_exact += other.m_exact;
    m_tail += other.m_tail;
    m_lower += other.m_lower;
    return *this;
}

certified_upper certified_upper::scaled(const big_rational &factor) const
{
    if (factor < 0) {
        throw std::invalid_argument("certified_upper scaled by a negative factor");
    }
    certified_upper c;
    c.m_exact = m_exact * factor;
    c.m_tail = m_tail * factor;
    c.m_lower = m_lower * factor;
    return c;
}

} // namespace lacegate
