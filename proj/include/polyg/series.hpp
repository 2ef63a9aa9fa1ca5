#ifndef POLYG_SERIES_HPP
#define POLYG_SERIES_HPP

#include "polyg/bipoly.hpp"

#include <vector>

namespace polyg {

// Truncated formal power series of fixed order N (inclusive) over BiPoly.
//
// Coefficients are stored in ordinary form: coeff(n) is the t^n
// coefficient. The polynomial families are EGF coefficients, extracted at
// the edge via egf_coeff(n) = n! * coeff(n); keeping the factorials out of
// the ring operations gives one conversion point. Binary operations on
// mixed orders truncate to the shorter order.
class Series
{
  public:
    explicit Series(int order);
    Series(int order, std::vector<BiPoly> coeffs);
    static Series constant(const BiPoly& c, int order);
    static Series constant(const Rational& c, int order);
    // t^k truncated to the given order (zero series if k > order).
    static Series t_power(int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BiPoly& coeff(int n) const;
    // n! * coeff(n); n must be <= order.
    BiPoly egf_coeff(int n) const;

    Series truncated(int new_order) const; // new_order <= order

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Rational& c) const;
    Series scaled(const BiPoly& c) const;

    // Multiplicative inverse up to the order. The constant term must be a
    // nonzero Rational constant (a unit of the coefficient ring).
    Series invert() const;
    // Horner-form composition; inner must have zero constant term.
    Series compose(const Series& inner) const;
    // Exact division by t^r; coeffs 0..r-1 must vanish. Result order N-r.
    Series shift_div(int r) const;

    friend bool operator==(const Series&, const Series&) = default;

  private:
    std::vector<BiPoly> coeffs_;
};

// e^{xt}: coeff(n) = x^n / n!.
Series exp_xt(int order);
// e^{ct} for rational c: coeff(n) = c^n / n!.
Series exp_ct(const Rational& c, int order);
// 1 - e^{-t}; zero constant term, unit t-coefficient.
Series one_minus_exp_neg_t(int order);
// Degenerate exponential (1 + lambda t)^{x/lambda}: coeff(n) = (x)_{n,lambda}/n!.
Series degenerate_exp(int order);
// The x = 1 specialization (1 + lambda t)^{1/lambda}.
Series degenerate_exp_at_one(int order);
// log(1+t) and -log(1-t).
Series log1p_t(int order);
Series neg_log1m_t(int order);

} // namespace polyg

#endif
