#ifndef POLYG_FAMILIES_HPP
#define POLYG_FAMILIES_HPP

#include "polyg/bipoly.hpp"
#include "polyg/report.hpp"
#include "polyg/series.hpp"
#include "polyg/stirling.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyg {

enum class FamilyKind
{
    euler,           // 2/(e^t+1) e^{xt}
    genocchi,        // 2t/(e^t+1) e^{xt}
    gen_eg,          // 2t^r/(e^t+1) e^{xt}
    degen_euler,     // 2/(e_l(t)+1) e_l^x(t)
    degen_genocchi,  // 2t/(e_l(t)+1) e_l^x(t)
    gen_degen_eg,    // 2t^r/(e_l(t)+1) e_l^x(t)
    multi_eg,        // 2 r!/(e^t+1) Li_k(1-e^{-t}) e^{xt}
    degen_multi_eg,  // 2 r!/(e_l(t)+1) Li_k(1-e^{-t}) e_l^x(t)
    multi_bernoulli, // r! Li_k(1-e^{-t}) / (e_l(t)-1)^r
};

// Family selector. r parameterizes gen_eg / gen_degen_eg; k the multi
// families. multi_bernoulli pairs a degenerate denominator with a
// classical numerator; the variant flag swaps in the all-classical
// (e^t-1)^r denominator instead.
struct FamilyId
{
    FamilyKind kind = FamilyKind::euler;
    int r = 0;
    MultiIndex k;
    bool classical_denominator = false;

    FamilyId() = default;
    FamilyId(FamilyKind kind_, int r_ = 0, MultiIndex k_ = {}, bool classical = false)
        : kind(kind_), r(r_), k(std::move(k_)), classical_denominator(classical)
    {
    }

    // t^r order of the family: |k| for multi families, r for gen families,
    // 1 for the Genocchi pair, 0 otherwise.
    int depth() const;
    bool is_degenerate() const;
    bool is_multi() const { return kind == FamilyKind::multi_eg ||
                                   kind == FamilyKind::degen_multi_eg ||
                                   kind == FamilyKind::multi_bernoulli; }

    std::string tag() const;      // CLI tag, e.g. "degen-multi-eg"
    std::string str() const;      // tag with parameters, e.g. "multi-eg(1,2)"
    static FamilyKind kind_from_tag(std::string_view tag);

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Rows 0..n_max of one family; rows[n] is the n-th polynomial as an exact
// BiPoly (x-free for number families). Immutable after construction.
class FamilyTable
{
  public:
    FamilyTable(FamilyId id, std::vector<BiPoly> rows);

    const FamilyId& id() const { return id_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const BiPoly& row(int n) const;
    const std::vector<BiPoly>& rows() const { return rows_; }

    friend bool operator==(const FamilyTable&, const FamilyTable&) = default;

  private:
    FamilyId id_;
    std::vector<BiPoly> rows_;
};

// Builds rows 0..n_max from the family's generating function expanded at
// truncation order `order` (order >= n_max; extraction needs no lookahead,
// so order = n_max is sufficient and larger orders only cost time).
FamilyTable build_family(const FamilyId& id, int n_max, int order);

// bipoly_substitute applied to rows[n]; nullopt keeps a variable symbolic.
BiPoly family_value_at(const FamilyTable& table, int n,
                       const std::optional<Rational>& x_val,
                       const std::optional<Rational>& l_val);

// Verifies the all-ones reductions: multi-eg((1,..,1)) = gen-eg(r) and
// degen-multi-eg((1,..,1)) = gen-degen-eg(r), rows 0..n_max, exact equality.
CheckReport reduction_all_ones(int r, int n_max, int order);

} // namespace polyg

#endif
