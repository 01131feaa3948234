#include <lacegate/number.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace lacegate
{

big_rational make_rational(const big_int &num, const big_int &den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    big_rational q(num, den);
    q.canonicalize();
    return q;
}

big_rational make_rational(long num, long den)
{
    return make_rational(big_int(num), big_int(den));
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

big_int parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    big_int v(std::string(s), 10);
    return negative ? big_int(-v) : v;
}

} // namespace

big_rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = text.substr(slash + 1);
        if (!all_digits(den)) {
            throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
        }
        return make_rational(parse_integer(text.substr(0, slash)), big_int(std::string(den), 10));
    }

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto dot = body.find('.');
    if (dot == std::string_view::npos) {
        return big_rational(parse_integer(text));
    }
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
        || (!frac.empty() && !all_digits(frac))) {
        throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    big_int num(digits.empty() ? std::string("0") : digits, 10);
    big_int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    auto q = make_rational(num, den);
    return negative ? big_rational(-q) : q;
}

big_int binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        throw std::domain_error("binomial coefficient with k > n");
    }
    big_int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

big_rational pow2(long e)
{
    big_int p = 1;
    const unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), a);
    return e < 0 ? make_rational(big_int(1), p) : big_rational(p);
}

big_rational pow(const big_rational &base, unsigned long exponent)
{
    big_int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // base is canonical, so the powers are coprime as well.
    big_rational r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return r;
}

big_int floor_of(const big_rational &q)
{
    big_int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

big_int ceil_of(const big_rational &q)
{
    big_int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_decimal(const big_rational &q, int digits, rounding mode)
{
    if (digits < 0) {
        throw std::invalid_argument("negative digit count");
    }
    big_int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const big_rational scaled = q * scale;
    big_int n;
    switch (mode) {
        case rounding::down:
            n = floor_of(scaled);
            break;
        case rounding::up:
            n = ceil_of(scaled);
            break;
        case rounding::nearest:
            n = floor_of(scaled + big_rational(1, 2));
            break;
    }
    const bool negative = n < 0;
    if (negative) {
        n = -n;
    }
    std::string s = n.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) {
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

} // namespace lacegate
