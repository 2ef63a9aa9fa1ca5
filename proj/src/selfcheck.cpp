#include "polyg/selfcheck.hpp"

#include "polyg/families.hpp"
#include "polyg/identities.hpp"

#include <random>

namespace polyg {

namespace {

// Uniform draw from [lo, hi] via the raw engine stream; std::uniform_int_
// distribution is implementation-defined, which would break byte-identical
// selftest output across standard libraries.
int draw(std::mt19937& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

Rational draw_rational(std::mt19937& rng)
{
    return Rational(draw(rng, -9, 9), draw(rng, 1, 9));
}

BiPoly draw_bipoly(std::mt19937& rng)
{
    BiPoly p;
    const int terms = draw(rng, 0, 5);
    for (int i = 0; i < terms; ++i)
        p += BiPoly::monomial(draw(rng, 0, 4), draw(rng, 0, 4), draw_rational(rng));
    return p;
}

Series draw_unit_series(std::mt19937& rng, int order)
{
    std::vector<BiPoly> coeffs;
    Rational c0 = draw_rational(rng);
    if (c0.is_zero())
        c0 = Rational(1);
    coeffs.push_back(BiPoly::constant(c0));
    for (int n = 1; n <= order; ++n)
        coeffs.push_back(BiPoly::monomial(0, draw(rng, 0, 2), draw_rational(rng)));
    return Series(order, std::move(coeffs));
}

Series draw_nilpotent_series(std::mt19937& rng, int order)
{
    std::vector<BiPoly> coeffs(1); // zero constant term
    for (int n = 1; n <= order; ++n)
        coeffs.push_back(BiPoly::constant(draw_rational(rng)));
    return Series(order, std::move(coeffs));
}

} // namespace

std::vector<MultiIndex> sample_multi_indices(unsigned seed, int count, int r_min, int r_max,
                                             int lo, int hi)
{
    std::mt19937 rng(seed);
    std::vector<MultiIndex> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int r = draw(rng, r_min, r_max);
        std::vector<int> e(static_cast<size_t>(r));
        for (int& v : e)
            v = draw(rng, lo, hi);
        out.emplace_back(std::move(e));
    }
    return out;
}

CheckSummary check_ring_axioms(unsigned seed, int trials)
{
    CheckSummary s{"ring-axioms"};
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const BiPoly a = draw_bipoly(rng), b = draw_bipoly(rng), c = draw_bipoly(rng);
        s.check((a + b) + c == a + (b + c), "add associativity, trial " + std::to_string(i));
        s.check((a * b) * c == a * (b * c), "mul associativity, trial " + std::to_string(i));
        s.check(a * (b + c) == a * b + a * c, "distributivity, trial " + std::to_string(i));
        s.check(a * b == b * a, "mul commutativity, trial " + std::to_string(i));
        s.check((a + b) - b == a, "add/sub cancellation, trial " + std::to_string(i));
        s.check((a + (-a)).is_zero(), "additive inverse, trial " + std::to_string(i));
    }
    // Rational arithmetic restricted to denominator 1 agrees with integers.
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
            s.check(Rational(x) + Rational(y) == Rational(x + y), "int add");
            s.check(Rational(x) * Rational(y) == Rational(x * y), "int mul");
        }
    return s;
}

CheckSummary check_substitution(unsigned seed, int trials)
{
    CheckSummary s{"substitution"};
    std::mt19937 rng(seed);
    for (int i = 0; i < trials; ++i) {
        const BiPoly p = draw_bipoly(rng);
        const Rational a = draw_rational(rng), b = draw_rational(rng);
        const BiPoly two_step = p.substitute(a, std::nullopt).substitute(std::nullopt, b);
        const BiPoly one_step = p.substitute(a, b);
        s.check(two_step == one_step, "substitution order, trial " + std::to_string(i));
        s.check(one_step.is_constant(), "full substitution constant, trial " + std::to_string(i));
    }
    return s;
}

CheckSummary check_series_ops(unsigned seed)
{
    CheckSummary s{"series-ops"};
    std::mt19937 rng(seed);
    const int order = 10;
    for (int i = 0; i < 12; ++i) {
        const Series a = draw_unit_series(rng, order);
        const Series one = Series::constant(Rational(1), order);
        s.check(a * a.invert() == one, "a * invert(a) = 1, trial " + std::to_string(i));
        s.check(a.invert().invert() == a, "invert involution, trial " + std::to_string(i));
    }
    for (int i = 0; i < 6; ++i) {
        const Series f = draw_nilpotent_series(rng, 8);
        const Series g = draw_nilpotent_series(rng, 8);
        const Series h = draw_nilpotent_series(rng, 8);
        s.check(f.compose(g).compose(h) == f.compose(g.compose(h)),
                "compose associativity, trial " + std::to_string(i));
    }
    for (int r = 0; r <= 3; ++r) {
        const Series a = draw_unit_series(rng, order);
        const Series shifted = (Series::t_power(r, order) * a).shift_div(r);
        s.check(shifted == a.truncated(order - r), "shift_div round trip, r=" + std::to_string(r));
    }
    // Degenerate exponential collapses to e^{xt} at lambda = 0, and
    // telescopes to 1 + t at x = lambda = 1.
    const Series de = degenerate_exp(order);
    bool collapse = true, telescope = true;
    for (int n = 0; n <= order; ++n) {
        if (de.coeff(n).substitute(std::nullopt, Rational(0)) != exp_xt(order).coeff(n))
            collapse = false;
        const BiPoly at11 = de.coeff(n).substitute(Rational(1), Rational(1));
        if (n <= 1 ? at11 != BiPoly::constant(Rational(1)) : !at11.is_zero())
            telescope = false;
    }
    s.check(collapse, "degenerate_exp at lambda=0");
    s.check(telescope, "degenerate_exp at x=lambda=1");
    return s;
}

CheckSummary check_stirling_vs_series(int n_max)
{
    CheckSummary s{"stirling-tables"};
    StirlingTables st(n_max);
    // Powers of the defining series, accumulated once per k.
    const Series logs = log1p_t(n_max);
    const Series expm1 = exp_ct(Rational(1), n_max) - Series::constant(Rational(1), n_max);
    Series lpow = Series::constant(Rational(1), n_max);
    Series epow = Series::constant(Rational(1), n_max);
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) {
            lpow = lpow * logs;
            epow = epow * expm1;
        }
        const Rational inv_kfact = Rational(1) / factorial(k);
        for (int n = k; n <= n_max; ++n) {
            const Rational s1_series =
                (lpow.egf_coeff(n) * inv_kfact).constant_value();
            const Rational s2_series =
                (epow.egf_coeff(n) * inv_kfact).constant_value();
            s.check(st.s1(n, k) == s1_series,
                    "S1(" + std::to_string(n) + "," + std::to_string(k) + ") vs series");
            s.check(st.s2(n, k) == s2_series,
                    "S2(" + std::to_string(n) + "," + std::to_string(k) + ") vs series");
        }
    }
    return s;
}

CheckSummary check_stirling_inversion(int n_max)
{
    CheckSummary s{"stirling-inversion"};
    StirlingTables st(n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n_max; ++m) {
            Rational sum;
            for (int k = 0; k <= n_max; ++k)
                sum += st.s1(n, k) * st.s2(k, m);
            s.check(sum == (n == m ? Rational(1) : Rational(0)),
                    "inversion at n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    return s;
}

CheckSummary check_li_routes(const std::vector<MultiIndex>& ks, int order)
{
    CheckSummary s{"li-two-routes"};
    StirlingTables st(order);
    const Series inner = one_minus_exp_neg_t(order);
    for (const MultiIndex& k : ks) {
        const Series dp = multiple_log_coeffs(k, order);
        const Series via_series = multiple_log_coeffs_by_series(k, order);
        s.check(dp == via_series, "chain DP vs series route, k=" + k.str());

        // Horner composition into 1-e^{-t} against the S1/S2 expansion.
        const int r = k.depth();
        const Series composed = dp.compose(inner);
        const std::vector<Rational> msl = multi_stirling1_row(k, order);
        bool ok = true;
        for (int n = 0; n <= order; ++n) {
            Rational expect;
            for (int kk = r; kk <= n; ++kk)
                expect += msl[static_cast<size_t>(kk)] * minus_one_pow(n - kk) * st.s2(n, kk);
            if (composed.egf_coeff(n) != BiPoly::constant(expect))
                ok = false;
        }
        s.check(ok, "compose vs S1/S2 expansion, k=" + k.str());
    }
    return s;
}

CheckSummary check_li_derivative(const std::vector<MultiIndex>& ks, int order)
{
    CheckSummary s{"li-derivative-identity"};
    for (const MultiIndex& k : ks) {
        if (k.depth() == 0)
            continue;
        MultiIndex lowered = k;
        lowered.entries.back() -= 1;
        const Series a = multiple_log_coeffs(k, order);
        const Series b = multiple_log_coeffs(lowered, order);
        for (int n = 0; n <= order; ++n)
            s.check(a.coeff(n) * Rational(n) == b.coeff(n),
                    "derivative identity, k=" + k.str() + " n=" + std::to_string(n));
    }
    return s;
}

CheckSummary check_li_all_ones(int order, int n_max)
{
    CheckSummary s{"li-all-ones"};
    Series pw = Series::constant(Rational(1), order);
    const Series base = neg_log1m_t(order);
    for (int r = 0; r <= 4; ++r) {
        if (r > 0)
            pw = pw * base;
        s.check(multiple_log_coeffs(MultiIndex::ones(r), order) ==
                    pw.scaled(Rational(1) / factorial(r)),
                "Li all-ones vs log power, r=" + std::to_string(r));
    }
    StirlingTables st(n_max);
    for (int r = 0; r <= n_max; ++r) {
        const std::vector<Rational> msl = multi_stirling1_row(MultiIndex::ones(r), n_max);
        for (int n = 0; n <= n_max; ++n)
            s.check(msl[static_cast<size_t>(n)] == minus_one_pow(n - r) * st.s1(n, r),
                    "all-ones multi-Stirling vs signed S1, n=" + std::to_string(n) +
                        " r=" + std::to_string(r));
    }
    return s;
}

namespace {

bool lambda_zero_matches(const FamilyTable& degen, const FamilyTable& classical)
{
    for (int n = 0; n <= degen.n_max(); ++n)
        if (degen.row(n).substitute(std::nullopt, Rational(0)) != classical.row(n))
            return false;
    return true;
}

} // namespace

CheckSummary check_degeneration(const std::vector<MultiIndex>& ks, int n_max)
{
    CheckSummary s{"family-degeneration"};
    const int order = n_max;
    s.check(lambda_zero_matches(build_family({FamilyKind::degen_euler}, n_max, order),
                                build_family({FamilyKind::euler}, n_max, order)),
            "degen-euler -> euler");
    s.check(lambda_zero_matches(build_family({FamilyKind::degen_genocchi}, n_max, order),
                                build_family({FamilyKind::genocchi}, n_max, order)),
            "degen-genocchi -> genocchi");
    for (int r = 0; r <= 3; ++r)
        s.check(lambda_zero_matches(build_family({FamilyKind::gen_degen_eg, r}, n_max, order),
                                    build_family({FamilyKind::gen_eg, r}, n_max, order)),
                "gen-degen-eg -> gen-eg, r=" + std::to_string(r));
    for (const MultiIndex& k : ks) {
        s.check(lambda_zero_matches(
                    build_family({FamilyKind::degen_multi_eg, 0, k}, n_max, order),
                    build_family({FamilyKind::multi_eg, 0, k}, n_max, order)),
                "degen-multi-eg -> multi-eg, k=" + k.str());
        FamilyId printed{FamilyKind::multi_bernoulli, 0, k, false};
        FamilyId classical{FamilyKind::multi_bernoulli, 0, k, true};
        s.check(lambda_zero_matches(build_family(printed, n_max, order),
                                    build_family(classical, n_max, order)),
                "multi-bernoulli printed at lambda=0 -> classical denominator, k=" + k.str());
    }
    return s;
}

CheckSummary check_vanishing_degree(const std::vector<MultiIndex>& ks, int n_max)
{
    CheckSummary s{"family-vanishing-degree"};
    for (const MultiIndex& k : ks) {
        const int r = k.depth();
        const FamilyTable t = build_family({FamilyKind::multi_eg, 0, k}, n_max, n_max);
        for (int n = 0; n <= n_max; ++n) {
            if (n < r)
                s.check(t.row(n).is_zero(),
                        "row vanishes below r, k=" + k.str() + " n=" + std::to_string(n));
            else
                s.check(t.row(n).degree_x() == n - r,
                        "x-degree is n-r, k=" + k.str() + " n=" + std::to_string(n));
        }
    }
    return s;
}

CheckSummary check_genocchi_integrality(int n_max)
{
    CheckSummary s{"genocchi-integrality"};
    const FamilyTable g = build_family({FamilyKind::genocchi}, n_max, n_max);
    for (int n = 0; n <= n_max; ++n)
        s.check(g.row(n).substitute(Rational(0), std::nullopt).constant_value().is_integer(),
                "G_" + std::to_string(n) + " integral");
    return s;
}

CheckSummary check_translation(const std::vector<MultiIndex>& ks, int n_max)
{
    CheckSummary s{"family-translation"};
    // Classical multi rows are lambda-free, so lambda is free to act as the
    // translation variable y.
    const BiPoly x_plus_y = BiPoly::var_x() + BiPoly::var_lambda();
    for (const MultiIndex& k : ks) {
        const FamilyTable t = build_family({FamilyKind::multi_eg, 0, k}, n_max, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const BiPoly lhs = t.row(n).compose(x_plus_y, BiPoly::var_lambda());
            BiPoly rhs;
            for (int j = 0; j <= n; ++j)
                rhs += binomial(n, j) *
                       (t.row(j) * BiPoly::monomial(0, n - j, Rational(1)));
            s.check(lhs == rhs, "translation, k=" + k.str() + " n=" + std::to_string(n));
        }
    }
    return s;
}

CheckSummary check_gen_eg_specials(int n_max)
{
    CheckSummary s{"gen-eg-specials"};
    const int order = n_max;
    s.check(build_family({FamilyKind::gen_eg, 0}, n_max, order).rows() ==
                build_family({FamilyKind::euler}, n_max, order).rows(),
            "gen-eg(0) = euler");
    s.check(build_family({FamilyKind::gen_eg, 1}, n_max, order).rows() ==
                build_family({FamilyKind::genocchi}, n_max, order).rows(),
            "gen-eg(1) = genocchi");
    s.check(build_family({FamilyKind::gen_degen_eg, 0}, n_max, order).rows() ==
                build_family({FamilyKind::degen_euler}, n_max, order).rows(),
            "gen-degen-eg(0) = degen-euler");
    s.check(build_family({FamilyKind::gen_degen_eg, 1}, n_max, order).rows() ==
                build_family({FamilyKind::degen_genocchi}, n_max, order).rows(),
            "gen-degen-eg(1) = degen-genocchi");
    return s;
}

CheckSummary check_reductions(int r_max, int n_max, int order)
{
    CheckSummary s{"reductions"};
    for (int r = 0; r <= r_max; ++r) {
        const CheckReport report = reduction_all_ones(r, n_max, order);
        s.check(report.all_pass(), "all-ones reduction, r=" + std::to_string(r));
    }
    return s;
}

} // namespace polyg
