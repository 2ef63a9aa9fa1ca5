#ifndef POLYG_IDENTITIES_HPP
#define POLYG_IDENTITIES_HPP

#include "polyg/families.hpp"
#include "polyg/report.hpp"
#include "polyg/stirling.hpp"

#include <map>
#include <utility>
#include <vector>

namespace polyg {

// Mechanical verifier for the six closed-form theorems: each right-hand
// side is evaluated from Stirling / multi-Stirling data and the r-indexed
// families, then compared exactly against the generating-function rows.
// Series expansion is the declared ground truth; a mismatch is reported
// with both sides, never auto-corrected.
//
// One instance caches the pieces that do not depend on the multi-index
// (Stirling triangles, the gen-eg / gen-degen-eg tables, the substituted
// rows used by the distribution formula), so sweeping a large k-grid stays
// cheap. Instances are not safe for concurrent use; run one per thread.
class IdentityChecker
{
  public:
    IdentityChecker(int n_max, int order);

    int n_max() const { return n_max_; }
    int order() const { return order_; }

    // Value at 1 from multi-Stirling and second-kind Stirling numbers.
    CheckReport thm_2_1(const MultiIndex& k);
    // Expansion in the generalized Euler-Genocchi polynomials.
    CheckReport thm_2_2(const MultiIndex& k);
    // A_n(1) + A_n(0) as a single Stirling sum.
    CheckReport thm_2_3(const MultiIndex& k);
    // Degenerate expansion (Thm 2.2's degenerate counterpart).
    CheckReport thm_2_4(const MultiIndex& k);
    // Binomial convolution with lambda-falling factorials.
    CheckReport thm_2_5(const MultiIndex& k);
    // Distribution formula; m must be odd and positive.
    CheckReport thm_2_6(const MultiIndex& k, int m);

    // The all-ones reduction identities for this checker's n_max/order.
    CheckReport reductions(int r);

    // All six theorems for one multi-index (2.6 once per m), reductions
    // excluded: 5 + |ms| reports.
    std::vector<CheckReport> run_theorems(const MultiIndex& k, const std::vector<int>& ms);

    // Theorem reports over the whole grid in deterministic order. Entries
    // of depth 0 are skipped (the theorems require r >= 1; reductions cover
    // the empty multi-index).
    std::vector<CheckReport> run_suite(const std::vector<MultiIndex>& ks,
                                       const std::vector<int>& ms);

  private:
    const FamilyTable& gen_eg(int r);
    const FamilyTable& gen_degen_eg(int r);
    // m^{i-r} * sum_l (-1)^l A_{i,lambda/m}^{(r)}((l+x)/m) for i = 0..n_max.
    const std::vector<BiPoly>& distribution_rows(int r, int m);
    std::vector<Rational> multi_stirling(const MultiIndex& k, int up_to);
    FamilyTable build_lhs(FamilyKind kind, const MultiIndex& k);
    static void require_nonempty(const MultiIndex& k);

    int n_max_;
    int order_;
    StirlingTables st_;
    std::map<int, FamilyTable> gen_eg_;
    std::map<int, FamilyTable> gen_degen_eg_;
    std::map<std::pair<int, int>, std::vector<BiPoly>> dist_rows_;
};

// Every k in the closed box {lo..hi}^r for r = 1..r_max, depth-major then
// lexicographic: the deterministic full verification grid.
std::vector<MultiIndex> multi_index_grid(int r_max, int lo, int hi);

// run_suite over a worker pool, one IdentityChecker per thread (tables are
// immutable once built, so workers share nothing). Reports are aggregated
// by grid position: the result is identical to the serial run no matter
// the completion order. threads = 0 picks the hardware concurrency.
std::vector<CheckReport> run_suite_parallel(const std::vector<MultiIndex>& ks,
                                            const std::vector<int>& ms, int n_max, int order,
                                            unsigned threads = 0);

} // namespace polyg

#endif
