#include "polyg/families.hpp"

#include <stdexcept>
#include <utility>

namespace polyg {

int FamilyId::depth() const
{
    switch (kind) {
    case FamilyKind::euler:
    case FamilyKind::degen_euler:
        return 0;
    case FamilyKind::genocchi:
    case FamilyKind::degen_genocchi:
        return 1;
    case FamilyKind::gen_eg:
    case FamilyKind::gen_degen_eg:
        return r;
    case FamilyKind::multi_eg:
    case FamilyKind::degen_multi_eg:
    case FamilyKind::multi_bernoulli:
        return k.depth();
    }
    return 0;
}

bool FamilyId::is_degenerate() const
{
    switch (kind) {
    case FamilyKind::degen_euler:
    case FamilyKind::degen_genocchi:
    case FamilyKind::gen_degen_eg:
    case FamilyKind::degen_multi_eg:
        return true;
    case FamilyKind::multi_bernoulli:
        return !classical_denominator;
    default:
        return false;
    }
}

std::string FamilyId::tag() const
{
    switch (kind) {
    case FamilyKind::euler: return "euler";
    case FamilyKind::genocchi: return "genocchi";
    case FamilyKind::gen_eg: return "gen-eg";
    case FamilyKind::degen_euler: return "degen-euler";
    case FamilyKind::degen_genocchi: return "degen-genocchi";
    case FamilyKind::gen_degen_eg: return "gen-degen-eg";
    case FamilyKind::multi_eg: return "multi-eg";
    case FamilyKind::degen_multi_eg: return "degen-multi-eg";
    case FamilyKind::multi_bernoulli: return "multi-bernoulli";
    }
    return "?";
}

std::string FamilyId::str() const
{
    std::string out = tag();
    if (kind == FamilyKind::gen_eg || kind == FamilyKind::gen_degen_eg)
        out += "(" + std::to_string(r) + ")";
    else if (is_multi())
        out += k.str();
    if (kind == FamilyKind::multi_bernoulli && classical_denominator)
        out += "[classical-denom]";
    return out;
}

FamilyKind FamilyId::kind_from_tag(std::string_view tag)
{
    if (tag == "euler") return FamilyKind::euler;
    if (tag == "genocchi") return FamilyKind::genocchi;
    if (tag == "gen-eg") return FamilyKind::gen_eg;
    if (tag == "degen-euler") return FamilyKind::degen_euler;
    if (tag == "degen-genocchi") return FamilyKind::degen_genocchi;
    if (tag == "gen-degen-eg") return FamilyKind::gen_degen_eg;
    if (tag == "multi-eg") return FamilyKind::multi_eg;
    if (tag == "degen-multi-eg") return FamilyKind::degen_multi_eg;
    if (tag == "multi-bernoulli") return FamilyKind::multi_bernoulli;
    throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
}

FamilyTable::FamilyTable(FamilyId id, std::vector<BiPoly> rows)
    : id_(std::move(id)), rows_(std::move(rows))
{
    if (rows_.empty())
        throw std::invalid_argument("FamilyTable: empty row set");
}

const BiPoly& FamilyTable::row(int n) const
{
    if (n < 0 || n > n_max())
        throw std::out_of_range("FamilyTable: row beyond n_max");
    return rows_[static_cast<size_t>(n)];
}

namespace {

Series two_over_exp_plus_one(int order)
{
    return (exp_ct(Rational(1), order) + Series::constant(Rational(1), order))
        .invert()
        .scaled(Rational(2));
}

Series two_over_degen_exp_plus_one(int order)
{
    return (degenerate_exp_at_one(order) + Series::constant(Rational(1), order))
        .invert()
        .scaled(Rational(2));
}

Series composed_multiple_log(const MultiIndex& k, int order)
{
    return multiple_log_coeffs(k, order).compose(one_minus_exp_neg_t(order));
}

// r! Li_k(1-e^{-t}) / D^r with D = e_l(t)-1 (as printed) or e^t-1
// (classical variant). Both numerator and denominator vanish to order r;
// the quotient is formed by dividing t^r out of each side exactly.
Series multi_bernoulli_gf(const FamilyId& id, int order)
{
    const int r = id.k.depth();
    if (r == 0)
        return Series::constant(Rational(1), order);
    const int padded = order + r;
    const Series num = composed_multiple_log(id.k, padded).scaled(factorial(r));
    const Series den_base = id.classical_denominator
        ? exp_ct(Rational(1), padded) - Series::constant(Rational(1), padded)
        : degenerate_exp_at_one(padded) - Series::constant(Rational(1), padded);
    const Series unit = den_base.shift_div(1); // constant term 1
    Series unit_pow = Series::constant(Rational(1), padded - 1);
    for (int i = 0; i < r; ++i)
        unit_pow = unit_pow * unit;
    return num.shift_div(r) * unit_pow.invert();
}

Series family_gf(const FamilyId& id, int order)
{
    switch (id.kind) {
    case FamilyKind::euler:
        return two_over_exp_plus_one(order) * exp_xt(order);
    case FamilyKind::genocchi:
        return Series::t_power(1, order) * two_over_exp_plus_one(order) * exp_xt(order);
    case FamilyKind::gen_eg:
        return Series::t_power(id.r, order) * two_over_exp_plus_one(order) * exp_xt(order);
    case FamilyKind::degen_euler:
        return two_over_degen_exp_plus_one(order) * degenerate_exp(order);
    case FamilyKind::degen_genocchi:
        return Series::t_power(1, order) * two_over_degen_exp_plus_one(order) *
               degenerate_exp(order);
    case FamilyKind::gen_degen_eg:
        return Series::t_power(id.r, order) * two_over_degen_exp_plus_one(order) *
               degenerate_exp(order);
    case FamilyKind::multi_eg:
        return two_over_exp_plus_one(order)
            .scaled(factorial(id.k.depth()))
            * composed_multiple_log(id.k, order) * exp_xt(order);
    case FamilyKind::degen_multi_eg:
        return two_over_degen_exp_plus_one(order)
            .scaled(factorial(id.k.depth()))
            * composed_multiple_log(id.k, order) * degenerate_exp(order);
    case FamilyKind::multi_bernoulli:
        return multi_bernoulli_gf(id, order);
    }
    throw std::logic_error("family_gf: unhandled kind");
}

} // namespace

FamilyTable build_family(const FamilyId& id, int n_max, int order)
{
    if (n_max < 0)
        throw std::invalid_argument("build_family: negative n_max");
    if (order < n_max)
        throw std::invalid_argument("build_family: order smaller than n_max");
    if ((id.kind == FamilyKind::gen_eg || id.kind == FamilyKind::gen_degen_eg) && id.r < 0)
        throw std::invalid_argument("build_family: negative r");
    const Series gf = family_gf(id, order);
    std::vector<BiPoly> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        rows.push_back(gf.egf_coeff(n));
    return FamilyTable(id, std::move(rows));
}

BiPoly family_value_at(const FamilyTable& table, int n,
                       const std::optional<Rational>& x_val,
                       const std::optional<Rational>& l_val)
{
    return table.row(n).substitute(x_val, l_val);
}

CheckReport reduction_all_ones(int r, int n_max, int order)
{
    const MultiIndex ones = MultiIndex::ones(r);
    const FamilyTable multi = build_family({FamilyKind::multi_eg, 0, ones}, n_max, order);
    const FamilyTable gen = build_family({FamilyKind::gen_eg, r}, n_max, order);
    const FamilyTable dmulti =
        build_family({FamilyKind::degen_multi_eg, 0, ones}, n_max, order);
    const FamilyTable dgen = build_family({FamilyKind::gen_degen_eg, r}, n_max, order);

    CheckReport report;
    report.name = "reductions";
    report.r = r;
    report.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        if (multi.row(n) != gen.row(n))
            report.record(n, multi.row(n), gen.row(n));
        else
            report.record(n, dmulti.row(n), dgen.row(n));
    }
    return report;
}

} // namespace polyg
