#ifndef POLYG_SELFCHECK_HPP
#define POLYG_SELFCHECK_HPP

#include "polyg/stirling.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyg {

// Outcome of one invariant suite. `cases` counts individual checked
// instances; failures carry a short deterministic description.
struct CheckSummary
{
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> notes;

    CheckSummary() = default;
    explicit CheckSummary(std::string n) : name(std::move(n)) {}

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

// Seeded sampling helpers. All draws go through the mt19937 output stream
// directly (no distribution objects), so results are identical across
// platforms and runs.
std::vector<MultiIndex> sample_multi_indices(unsigned seed, int count, int r_min, int r_max,
                                             int lo, int hi);

// exact: ring axioms on random BiPoly triples, additive inverse,
// rational/integer agreement.
CheckSummary check_ring_axioms(unsigned seed, int trials);
// exact: two-step substitution equals one-step; full substitution is
// constant.
CheckSummary check_substitution(unsigned seed, int trials);
// series: invert/compose/shift_div invariants plus the degenerate
// exponential collapse at lambda = 0.
CheckSummary check_series_ops(unsigned seed);
// stirling: recurrence values against series extraction of the defining
// generating functions, n <= n_max.
CheckSummary check_stirling_vs_series(int n_max);
// stirling: sum_k S1(n,k) S2(k,m) = delta_{n,m} for n, m <= n_max.
CheckSummary check_stirling_inversion(int n_max);
// stirling: chain DP vs the series-operations route, plus Horner
// composition of Li into 1-e^{-t} against the S1/S2 expansion.
CheckSummary check_li_routes(const std::vector<MultiIndex>& ks, int order);
// stirling: n [t^n] Li_k = [t^n] Li_{k with k_r - 1}, n <= order.
CheckSummary check_li_derivative(const std::vector<MultiIndex>& ks, int order);
// stirling: all-ones Li equals (-log(1-t))^r/r!, and the printed relation
// S1^{(1,..,1)}(n,r) = (-1)^{n-r} S1(n,r).
CheckSummary check_li_all_ones(int order, int n_max);
// families: lambda = 0 substitution reproduces the classical counterpart
// for every degenerate family (multi families over the given sample).
CheckSummary check_degeneration(const std::vector<MultiIndex>& ks, int n_max);
// families: rows vanish below depth r and have x-degree exactly n - r above.
CheckSummary check_vanishing_degree(const std::vector<MultiIndex>& ks, int n_max);
// families: G_n(0) is an integer for n <= n_max.
CheckSummary check_genocchi_integrality(int n_max);
// families: A_n(x+y) = sum_j binom(n,j) A_j(x) y^{n-j} as an exact BiPoly
// identity (lambda plays the role of y on the lambda-free families).
CheckSummary check_translation(const std::vector<MultiIndex>& ks, int n_max);
// families: gen-eg(0) = euler, gen-eg(1) = genocchi and the degenerate
// counterparts.
CheckSummary check_gen_eg_specials(int n_max);
// families: all-ones reductions for r = 0..r_max.
CheckSummary check_reductions(int r_max, int n_max, int order);

} // namespace polyg

#endif
