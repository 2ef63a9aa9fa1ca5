#include "polyg/series.hpp"

#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

using polyg::BiPoly;
using polyg::Rational;
using polyg::Series;

namespace {

// e^t + 1 built locally so the invert test does not share code with the
// family builders.
Series exp_plus_one(int order)
{
    return polyg::exp_ct(Rational(1), order) + Series::constant(Rational(1), order);
}

} // namespace

TEST_CASE("truncated ring arithmetic")
{
    const int n = 2;
    const Series one_plus_t = Series::constant(Rational(1), n) + Series::t_power(1, n);
    const Series one_minus_t = Series::constant(Rational(1), n) - Series::t_power(1, n);
    const Series prod = one_plus_t * one_minus_t;
    CHECK(prod.coeff(0) == BiPoly::constant(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == BiPoly::constant(Rational(-1)));

    const Series e = polyg::exp_ct(Rational(1), 6);
    CHECK((e - e) == Series(6));

    // Orders of vanishing add under multiplication.
    const Series t = Series::t_power(1, 4);
    const Series sq = t * (t + Series::t_power(3, 4));
    CHECK(sq.coeff(0).is_zero());
    CHECK(sq.coeff(1).is_zero());
    CHECK(sq.coeff(2) == BiPoly::constant(1));
}

TEST_CASE("binary operations truncate to the shorter order")
{
    const Series a = polyg::exp_ct(Rational(1), 5);
    const Series b = polyg::exp_ct(Rational(-1), 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    // e^t * e^{-t} = 1.
    CHECK(a * b == Series::constant(Rational(1), 3));
}

TEST_CASE("invert solves the triangular system")
{
    // Independent check: solve c_0 d_0 = 1, sum c_i d_{n-i} = 0 directly.
    const int order = 6;
    const Series c = exp_plus_one(order);
    std::vector<Rational> d(order + 1);
    d[0] = Rational(1) / c.coeff(0).constant_value();
    for (int n = 1; n <= order; ++n) {
        Rational acc;
        for (int i = 1; i <= n; ++i)
            acc += c.coeff(i).constant_value() * d[n - i];
        d[n] = -acc * d[0];
    }
    const Series inv = c.invert();
    for (int n = 0; n <= order; ++n)
        CHECK(inv.coeff(n) == BiPoly::constant(d[n]));

    // Frozen low-order values of 1/(e^t+1): 1/2, -1/4, 0.
    CHECK(inv.coeff(0) == BiPoly::constant(Rational(1, 2)));
    CHECK(inv.coeff(1) == BiPoly::constant(Rational(-1, 4)));
    CHECK(inv.coeff(2).is_zero());

    CHECK(Series::constant(Rational(1), 4).invert() == Series::constant(Rational(1), 4));
    CHECK(c.invert().invert() == c);
    CHECK(c * inv == Series::constant(Rational(1), order));

    CHECK_THROWS_AS(Series::t_power(1, 3).invert(), std::domain_error);
    // A non-constant term in degree 0 is not a unit of the coefficient ring.
    CHECK_THROWS_AS(Series::constant(BiPoly::var_x(), 3).invert(), std::domain_error);
}

TEST_CASE("compose is exact Horner composition")
{
    const int order = 10;
    // -log(1-u) composed with u = 1-e^{-t} gives exactly t.
    const Series composed = polyg::neg_log1m_t(order).compose(polyg::one_minus_exp_neg_t(order));
    CHECK(composed == Series::t_power(1, order));

    const Series u = exp_plus_one(4);
    CHECK(u.compose(Series(4)) == Series::constant(u.coeff(0), 4));
    CHECK(u.compose(Series::t_power(1, 4)) == u);
    CHECK_THROWS_AS(u.compose(Series::constant(Rational(1), 4)), std::domain_error);
}

TEST_CASE("shift_div divides by powers of t")
{
    CHECK(Series::t_power(2, 5).shift_div(2) == Series::constant(Rational(1), 3));
    const Series bad = Series::t_power(1, 5) + Series::t_power(2, 5);
    CHECK_THROWS_AS(bad.shift_div(2), std::domain_error);
    CHECK_THROWS_AS(Series::t_power(1, 3).shift_div(5), std::invalid_argument);
    const Series a = exp_plus_one(8);
    CHECK((Series::t_power(3, 8) * a).shift_div(3) == a.truncated(5));
}

TEST_CASE("exp_xt and EGF extraction")
{
    const Series e = polyg::exp_xt(4);
    CHECK(e.coeff(0) == BiPoly::constant(1));
    CHECK(e.coeff(1) == BiPoly::var_x());
    CHECK(e.coeff(2) == BiPoly::monomial(2, 0, Rational(1, 2)));
    CHECK(e.egf_coeff(3) == BiPoly::monomial(3, 0, 1));
    CHECK(Series::constant(Rational(1), 2).egf_coeff(0) == BiPoly::constant(1));
    CHECK_THROWS_AS(e.egf_coeff(5), std::out_of_range);

    bool all_one_at_zero = true;
    for (int n = 0; n <= 4; ++n)
        if (e.coeff(n).substitute(Rational(0), std::nullopt) !=
            (n == 0 ? BiPoly::constant(1) : BiPoly()))
            all_one_at_zero = false;
    CHECK(all_one_at_zero);

    // E_1(x) = x - 1/2 from 2/(e^t+1) e^{xt}, assembled here by hand.
    const Series euler_gf = exp_plus_one(3).invert().scaled(Rational(2)) * polyg::exp_xt(3);
    CHECK(euler_gf.egf_coeff(1) == BiPoly::var_x() - BiPoly::constant(Rational(1, 2)));
}

TEST_CASE("product of exponentials matches the binomial theorem")
{
    const int order = 4;
    // e^{xt} * e^{lambda t}: the lambda exponential stands in for a second
    // symbol y; coefficients must be (x+lambda)^n / n!.
    std::vector<BiPoly> lam_coeffs;
    Rational inv_fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            inv_fact /= Rational(n);
        lam_coeffs.push_back(BiPoly::monomial(0, n, inv_fact));
    }
    const Series exp_lt(order, std::move(lam_coeffs));
    const Series prod = polyg::exp_xt(order) * exp_lt;
    for (int n = 0; n <= order; ++n) {
        BiPoly expect;
        for (int j = 0; j <= n; ++j)
            expect += BiPoly::monomial(j, n - j,
                                       polyg::binomial(n, j) / polyg::factorial(n));
        CHECK(prod.coeff(n) == expect);
    }
}

TEST_CASE("degenerate exponential")
{
    const Series de = polyg::degenerate_exp(5);
    CHECK(de.coeff(2) ==
          BiPoly::monomial(2, 0, Rational(1, 2)) - BiPoly::monomial(1, 1, Rational(1, 2)));
    for (int n = 0; n <= 5; ++n) {
        CHECK(de.coeff(n).substitute(std::nullopt, Rational(0)) == polyg::exp_xt(5).coeff(n));
        CHECK(de.coeff(n) * polyg::factorial(n) == polyg::lambda_falling_factorial(n));
    }
    // x = lambda = 1 telescopes to 1 + t.
    for (int n = 0; n <= 5; ++n) {
        const BiPoly v = de.coeff(n).substitute(Rational(1), Rational(1));
        if (n <= 1)
            CHECK(v == BiPoly::constant(1));
        else
            CHECK(v.is_zero());
    }
    // The x = 1 builder agrees with substituting x = 1.
    const Series d1 = polyg::degenerate_exp_at_one(5);
    for (int n = 0; n <= 5; ++n)
        CHECK(d1.coeff(n) == de.coeff(n).substitute(Rational(1), std::nullopt));
}

TEST_CASE("log builders")
{
    const int order = 8;
    // exp(log(1+t)) - 1 = t.
    const Series lg = polyg::log1p_t(order);
    const Series expm1 =
        polyg::exp_ct(Rational(1), order) - Series::constant(Rational(1), order);
    CHECK(expm1.compose(lg) == Series::t_power(1, order));
    CHECK(polyg::neg_log1m_t(order).coeff(5) == BiPoly::constant(Rational(1, 5)));
}
