#include <lacegate/expr.hpp>

#include <utility>

namespace lacegate
{

struct expr::node {
    op kind = op::leaf;
    directed_real value;
    unsigned long exponent = 0;
    std::shared_ptr<const node> lhs;
    std::shared_ptr<const node> rhs;
};

expr::expr(long value) : expr(directed_real(value)) {}

expr::expr(const big_rational &value) : expr(directed_real(value)) {}

expr::expr(const directed_real &value)
{
    auto n = std::make_shared<node>();
    n->value = value;
    m_node = std::move(n);
}

expr::expr(std::shared_ptr<const node> n) : m_node(std::move(n)) {}

namespace
{

template <typename Node>
std::shared_ptr<const Node> make_node(expr::op kind, std::shared_ptr<const Node> lhs,
                                      std::shared_ptr<const Node> rhs = nullptr, unsigned long exponent = 0)
{
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->exponent = exponent;
    return n;
}

} // namespace

expr operator+(const expr &a, const expr &b)
{
    return expr(make_node(expr::op::add, a.m_node, b.m_node));
}

expr operator-(const expr &a, const expr &b)
{
    return expr(make_node(expr::op::sub, a.m_node, b.m_node));
}

expr operator*(const expr &a, const expr &b)
{
    return expr(make_node(expr::op::mul, a.m_node, b.m_node));
}

expr operator/(const expr &a, const expr &b)
{
    return expr(make_node(expr::op::div, a.m_node, b.m_node));
}

expr operator-(const expr &a)
{
    return expr(make_node(expr::op::neg, a.m_node));
}

expr pow(const expr &base, unsigned long n)
{
    return expr(make_node(expr::op::pow, base.m_node, {}, n));
}

expr sqrt(const expr &a)
{
    return expr(make_node(expr::op::sqrt, a.m_node));
}

directed_real expr::eval(const node &n)
{
    switch (n.kind) {
        case op::leaf:
            return n.value;
        case op::add:
            return eval(*n.lhs) + eval(*n.rhs);
        case op::sub:
            return eval(*n.lhs) - eval(*n.rhs);
        case op::mul:
            return eval(*n.lhs) * eval(*n.rhs);
        case op::div:
            return eval(*n.lhs) / eval(*n.rhs);
        case op::neg:
            return -eval(*n.lhs);
        case op::pow:
            return lacegate::pow(eval(*n.lhs), n.exponent);
        case op::sqrt:
            return lacegate::sqrt(eval(*n.lhs));
    }
    return n.value;
}

directed_real directed_eval(const expr &e)
{
    return expr::eval(*e.m_node);
}

} // namespace lacegate
