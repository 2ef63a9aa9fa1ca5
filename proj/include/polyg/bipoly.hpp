#ifndef POLYG_BIPOLY_HPP
#define POLYG_BIPOLY_HPP

#include "polyg/rational.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace polyg {

// Dense-by-map bivariate polynomial in x and lambda over Rational.
// No zero coefficient is ever stored, so operator== is exact structural
// equality. Values are immutable in spirit: every operation returns a
// fresh normalized polynomial.
class BiPoly
{
  public:
    struct Key
    {
        int xdeg;
        int ldeg;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    using TermMap = std::map<Key, Rational>;

    BiPoly() = default; // zero

    static BiPoly constant(const Rational& c);
    static BiPoly var_x() { return monomial(1, 0, Rational(1)); }
    static BiPoly var_lambda() { return monomial(0, 1, Rational(1)); }
    static BiPoly monomial(int xdeg, int ldeg, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (rejects anything with x or lambda).
    Rational constant_value() const;

    int degree_x() const;      // -1 for the zero polynomial
    int degree_lambda() const; // -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }
    // Coefficient of x^xdeg * lambda^ldeg (zero if absent).
    Rational coeff(int xdeg, int ldeg) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { a *= c; return a; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { a *= c; return a; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    // Partial evaluation; std::nullopt keeps that variable symbolic.
    BiPoly substitute(const std::optional<Rational>& x_val,
                      const std::optional<Rational>& l_val) const;
    // Ring substitution x -> x_image, lambda -> l_image.
    BiPoly compose(const BiPoly& x_image, const BiPoly& l_image) const;

    // Human form, descending x-degree: "x^2 - x - x*lambda + 1/2*lambda".
    std::string str() const;

  private:
    void add_term(const Key& key, const Rational& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// lambda-falling factorial (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda),
// with (x)_{0,lambda} = 1. Reduces to x^n at lambda = 0.
BiPoly lambda_falling_factorial(int n);

} // namespace polyg

#endif
