#ifndef LACEGATE_ERRORS_HPP
#define LACEGATE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace lacegate
{

// Division by an enclosure that contains zero.
class singularity_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Requested a random-walk quantity that is infinite in this dimension.
class divergence_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A denominator or ratio condition of a bound chain does not hold, so the
// chain produces no finite bound. The constraint name identifies the check.
class bound_chain_failure : public std::runtime_error
{
public:
    bound_chain_failure(std::string constraint, const std::string &what)
        : std::runtime_error(what), m_constraint(std::move(constraint))
    {
    }

    const std::string &constraint() const noexcept
    {
        return m_constraint;
    }

private:
    std::string m_constraint;
};

// An exhaustive oracle was asked for more work than its budget allows.
class scale_error : public std::length_error
{
public:
    using std::length_error::length_error;
};

// An oracle input lies outside the class of instances the oracle handles.
class unsupported_instance : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lacegate

#endif
