#ifndef LACEGATE_SRC_ROUTE_HPP
#define LACEGATE_SRC_ROUTE_HPP

#include <lacegate/certified_upper.hpp>
#include <lacegate/directed_real.hpp>
#include <lacegate/errors.hpp>

namespace lacegate::detail
{

// A bound chain is evaluated twice: once on the exact parts of its inputs and
// once on their full certified values.
enum class route { truncated, full };

inline directed_real at(const certified_upper &c, route r)
{
    return directed_real(r == route::truncated ? c.exact_part() : c.value());
}

template <typename F>
certified_upper certify(F &&formula)
{
    return certified_upper::from_routes(formula(route::truncated), formula(route::full));
}

// Throws bound_chain_failure unless the enclosure is strictly positive.
inline const directed_real &require_positive(const directed_real &x, const char *constraint)
{
    if (!(x.lo() > 0)) {
        throw bound_chain_failure(constraint, std::string("non-positive denominator: ") + constraint);
    }
    return x;
}

inline void require_below_one(const certified_upper &x, const char *constraint, const char *what)
{
    if (!(x.value() < 1)) {
        throw bound_chain_failure(constraint, std::string(what) + " is not below 1");
    }
}

} // namespace lacegate::detail

#endif
