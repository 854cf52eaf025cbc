#include "plab/rational.hpp"

#include <stdexcept>

namespace plab {

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("malformed rational literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("malformed rational literal");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational literal: " + std::string(s));
        return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned e) const
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rational(num, den);
}

mpz_class factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_ui();
}

} // namespace plab
