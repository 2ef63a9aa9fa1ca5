#include "polyg/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace polyg {

namespace {

bool valid_integer_token(std::string_view s)
{
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q)
{
    if (mpz_sgn(q.get_den().get_mpz_t()) == 0)
        throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
}

Rational Rational::parse(std::string_view s)
{
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    // mpz_set_str understands a leading '-' but not '+'.
    if (num.front() == '+')
        num.remove_prefix(1);
    if (den.front() == '+')
        den.remove_prefix(1);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (mpz_sgn(d.get_mpz_t()) == 0)
        throw std::domain_error("Rational: zero denominator in '" + std::string(s) + "'");
    return from_mpq(mpq_class(n, d));
}

std::string Rational::wire() const
{
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

Rational pow(const Rational& q, long e)
{
    if (e == 0)
        return Rational(1);
    if (q.is_zero()) {
        if (e < 0)
            throw std::domain_error("pow: zero base with negative exponent");
        return Rational(0);
    }
    unsigned long ue = e > 0 ? static_cast<unsigned long>(e)
                             : static_cast<unsigned long>(-(e + 1)) + 1;
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.numerator().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q.denominator().get_mpz_t(), ue);
    if (e < 0)
        std::swap(n, d);
    return Rational::from_mpq(mpq_class(n, d));
}

Rational minus_one_pow(long e)
{
    return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

Rational factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational::from_mpq(mpq_class(z));
}

Rational binomial(long n, long k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational::from_mpq(mpq_class(z));
}

} // namespace polyg
