#ifndef LACEGATE_EXPR_HPP
#define LACEGATE_EXPR_HPP

#include <memory>

#include <lacegate/directed_real.hpp>
#include <lacegate/number.hpp>

namespace lacegate
{

// Immutable arithmetic expression over rational constants and enclosures.
class expr
{
public:
    enum class op { leaf, add, sub, mul, div, neg, pow, sqrt };

    expr(long value);
    expr(const big_rational &value);
    expr(const directed_real &value);

    friend expr operator+(const expr &a, const expr &b);
    friend expr operator-(const expr &a, const expr &b);
    friend expr operator*(const expr &a, const expr &b);
    friend expr operator/(const expr &a, const expr &b);
    friend expr operator-(const expr &a);
    friend expr pow(const expr &base, unsigned long n);
    friend expr sqrt(const expr &a);

    friend directed_real directed_eval(const expr &e);

private:
    struct node;
    explicit expr(std::shared_ptr<const node> n);
    static directed_real eval(const node &n);

    std::shared_ptr<const node> m_node;
};

// Evaluates with outward rounding. Throws singularity_error when a divisor
// enclosure contains zero and std::domain_error for a square root of an
// enclosure with negative points.
directed_real directed_eval(const expr &e);

} // namespace lacegate

#endif
