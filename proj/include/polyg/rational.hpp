#ifndef POLYG_RATIONAL_HPP
#define POLYG_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace polyg {

// Exact rational scalar, the base coefficient type of everything here.
// Canonical form holds after every operation: gcd(|num|, den) = 1,
// den >= 1, zero stored as 0/1. Backed by GMP.
class Rational
{
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    // den == 0 is a rejected input.
    Rational(long num, long den);

    // Accepts "num" or "num/den" with optional sign on either part.
    static Rational parse(std::string_view s);
    static Rational from_mpq(mpq_class q);

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // Human form: "7", "-3/2".
    std::string str() const { return v_.get_str(); }
    // Wire form, always with the denominator: "7/1", "-3/2".
    std::string wire() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // division by zero rejected

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0;
    }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// q^e for any integer e; e < 0 requires q != 0.
Rational pow(const Rational& q, long e);
// (-1)^e, defined by parity so negative e is legal.
Rational minus_one_pow(long e);
Rational factorial(long n);
// 0 outside 0 <= k <= n.
Rational binomial(long n, long k);

} // namespace polyg

#endif
