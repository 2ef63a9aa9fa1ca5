#include "polyg/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polyg {

Series::Series(int order)
{
    if (order < 0)
        throw std::invalid_argument("Series: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

Series::Series(int order, std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("Series: coefficient count does not match order");
}

Series Series::constant(const BiPoly& c, int order)
{
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::constant(const Rational& c, int order)
{
    return constant(BiPoly::constant(c), order);
}

Series Series::t_power(int k, int order)
{
    if (k < 0)
        throw std::invalid_argument("Series: negative power of t");
    Series s(order);
    if (k <= order)
        s.coeffs_[static_cast<size_t>(k)] = BiPoly::constant(Rational(1));
    return s;
}

const BiPoly& Series::coeff(int n) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("Series: coefficient index beyond order");
    return coeffs_[static_cast<size_t>(n)];
}

BiPoly Series::egf_coeff(int n) const
{
    return coeff(n) * factorial(n);
}

Series Series::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::out_of_range("Series: truncation beyond order");
    return Series(new_order,
                  std::vector<BiPoly>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series Series::operator-() const
{
    Series r(order());
    for (int n = 0; n <= order(); ++n)
        r.coeffs_[n] = -coeffs_[n];
    return r;
}

Series operator+(const Series& a, const Series& b)
{
    const int n_out = std::min(a.order(), b.order());
    Series r(n_out);
    for (int n = 0; n <= n_out; ++n)
        r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
}

Series operator-(const Series& a, const Series& b)
{
    const int n_out = std::min(a.order(), b.order());
    Series r(n_out);
    for (int n = 0; n <= n_out; ++n)
        r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
}

Series operator*(const Series& a, const Series& b)
{
    const int n_out = std::min(a.order(), b.order());
    Series r(n_out);
    for (int i = 0; i <= n_out; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (int j = 0; i + j <= n_out; ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series Series::scaled(const Rational& c) const
{
    Series r(order());
    for (int n = 0; n <= order(); ++n)
        r.coeffs_[n] = coeffs_[n] * c;
    return r;
}

Series Series::scaled(const BiPoly& c) const
{
    Series r(order());
    for (int n = 0; n <= order(); ++n)
        r.coeffs_[n] = coeffs_[n] * c;
    return r;
}

Series Series::invert() const
{
    if (!coeffs_[0].is_constant() || coeffs_[0].is_zero())
        throw std::domain_error("Series: constant term is not a unit, cannot invert");
    const Rational c0_inv = Rational(1) / coeffs_[0].constant_value();
    Series r(order());
    r.coeffs_[0] = BiPoly::constant(c0_inv);
    for (int n = 1; n <= order(); ++n) {
        BiPoly acc;
        for (int i = 1; i <= n; ++i)
            acc += coeffs_[i] * r.coeffs_[n - i];
        r.coeffs_[n] = acc * (-c0_inv);
    }
    return r;
}

Series Series::compose(const Series& inner) const
{
    if (!inner.coeffs_[0].is_zero())
        throw std::domain_error("Series: composition requires zero inner constant term");
    // Outer coefficients beyond the output order cannot contribute because
    // inner^j vanishes below t^j; start the Horner descent at n_out.
    const int n_out = std::min(order(), inner.order());
    const Series inner_t = inner.truncated(n_out);
    Series acc = Series::constant(coeffs_[static_cast<size_t>(n_out)], n_out);
    for (int j = n_out - 1; j >= 0; --j) {
        acc = acc * inner_t;
        acc.coeffs_[0] += coeffs_[static_cast<size_t>(j)];
    }
    return acc;
}

Series Series::shift_div(int r) const
{
    if (r < 0 || r > order())
        throw std::invalid_argument("Series: shift_div power out of range");
    for (int n = 0; n < r; ++n)
        if (!coeffs_[n].is_zero())
            throw std::domain_error("Series: shift_div on series with nonvanishing low-order term");
    return Series(order() - r, std::vector<BiPoly>(coeffs_.begin() + r, coeffs_.end()));
}

Series exp_xt(int order)
{
    std::vector<BiPoly> coeffs;
    Rational inv_fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            inv_fact /= Rational(n);
        coeffs.push_back(BiPoly::monomial(n, 0, inv_fact));
    }
    return Series(order, std::move(coeffs));
}

Series exp_ct(const Rational& c, int order)
{
    std::vector<BiPoly> coeffs;
    Rational v(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            v = v * c / Rational(n);
        coeffs.push_back(BiPoly::constant(v));
    }
    return Series(order, std::move(coeffs));
}

Series one_minus_exp_neg_t(int order)
{
    return Series::constant(Rational(1), order) - exp_ct(Rational(-1), order);
}

Series degenerate_exp(int order)
{
    std::vector<BiPoly> coeffs;
    BiPoly ff = BiPoly::constant(Rational(1)); // (x)_{n,lambda}
    Rational inv_fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            ff = ff * (BiPoly::var_x() - BiPoly::monomial(0, 1, Rational(n - 1)));
            inv_fact /= Rational(n);
        }
        coeffs.push_back(ff * inv_fact);
    }
    return Series(order, std::move(coeffs));
}

Series degenerate_exp_at_one(int order)
{
    std::vector<BiPoly> coeffs;
    BiPoly ff = BiPoly::constant(Rational(1)); // (1)_{n,lambda}
    Rational inv_fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            ff = ff * (BiPoly::constant(Rational(1)) - BiPoly::monomial(0, 1, Rational(n - 1)));
            inv_fact /= Rational(n);
        }
        coeffs.push_back(ff * inv_fact);
    }
    return Series(order, std::move(coeffs));
}

Series log1p_t(int order)
{
    std::vector<BiPoly> coeffs(1);
    for (int n = 1; n <= order; ++n)
        coeffs.push_back(BiPoly::constant(minus_one_pow(n + 1) / Rational(n)));
    return Series(order, std::move(coeffs));
}

Series neg_log1m_t(int order)
{
    std::vector<BiPoly> coeffs(1);
    for (int n = 1; n <= order; ++n)
        coeffs.push_back(BiPoly::constant(Rational(1, n)));
    return Series(order, std::move(coeffs));
}

} // namespace polyg
