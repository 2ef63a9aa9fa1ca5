#ifndef POLYG_STIRLING_HPP
#define POLYG_STIRLING_HPP

#include "polyg/rational.hpp"
#include "polyg/series.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace polyg {

// Ordered multi-index (k_1, ..., k_r). Entries may be negative or zero;
// r = 0 is the empty multi-index, for which Li_{()} is the constant 1 (the
// convention that makes the r = 0 family collapse to the Euler family).
struct MultiIndex
{
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
    static MultiIndex ones(int r);
    // "1,2,-1" (no empty components); "()" denotes the empty multi-index.
    static MultiIndex parse(std::string_view s);

    int depth() const { return static_cast<int>(entries.size()); }
    bool all_ones() const;
    std::string str() const; // "(1,2,-1)", "()"

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

// Triangular tables of both Stirling kinds, built row by row. Entries are
// integers; stored as Rational to match the coefficient scalar. Outside
// the closed triangle (k < 0 or k > n) the value is 0.
class StirlingTables
{
  public:
    explicit StirlingTables(int n_max);
    void ensure(int n_max); // grow, never shrink
    int n_max() const { return static_cast<int>(s1_.size()) - 1; }

    // Signed first kind: S1(n+1,k) = S1(n,k-1) - n*S1(n,k), S1(0,0) = 1.
    Rational s1(int n, int k) const;
    // Second kind: S2(n+1,k) = k*S2(n,k) + S2(n,k-1), S2(0,0) = 1.
    Rational s2(int n, int k) const;

  private:
    std::vector<std::vector<Rational>> s1_, s2_;
};

// Multiple logarithm Li_{k}(t) truncated at `order`, ordinary coefficients
// computed by the chain DP over strictly increasing index chains
// 0 < n_1 < ... < n_r (f_1(m) = m^{-k_1}, f_j(m) = m^{-k_j} * sum_{i<m} f_{j-1}(i)).
// This is the canonical path.
Series multiple_log_coeffs(const MultiIndex& k, int order);

// The same series built from ring operations only: r-fold alternation of
// multiplication by t/(1-t) (strict prefix sums) with n^{-k_j} coefficient
// weighting. Independent of the chain DP; exists for cross-validation.
Series multiple_log_coeffs_by_series(const MultiIndex& k, int order);

// Multi-Stirling number of the first kind S1^{(k)}(n, r) = n! [t^n] Li_k(t);
// zero for n < r. r_check must equal k.depth().
Rational multi_stirling1(const MultiIndex& k, int n, int r_check);

// S1^{(k)}(n, r) for n = 0..n_max from one chain-DP run.
std::vector<Rational> multi_stirling1_row(const MultiIndex& k, int n_max);

} // namespace polyg

#endif
