#include "polyg/identities.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace polyg {

IdentityChecker::IdentityChecker(int n_max, int order)
    : n_max_(n_max), order_(order), st_(n_max + 4)
{
    if (n_max < 0)
        throw std::invalid_argument("IdentityChecker: negative n_max");
    if (order < n_max)
        throw std::invalid_argument("IdentityChecker: order smaller than n_max");
}

void IdentityChecker::require_nonempty(const MultiIndex& k)
{
    if (k.depth() < 1)
        throw std::invalid_argument("theorem checks require a nonempty multi-index");
}

const FamilyTable& IdentityChecker::gen_eg(int r)
{
    auto it = gen_eg_.find(r);
    if (it == gen_eg_.end())
        it = gen_eg_.emplace(r, build_family({FamilyKind::gen_eg, r}, n_max_, order_)).first;
    return it->second;
}

const FamilyTable& IdentityChecker::gen_degen_eg(int r)
{
    auto it = gen_degen_eg_.find(r);
    if (it == gen_degen_eg_.end())
        it = gen_degen_eg_
                 .emplace(r, build_family({FamilyKind::gen_degen_eg, r}, n_max_, order_))
                 .first;
    return it->second;
}

std::vector<Rational> IdentityChecker::multi_stirling(const MultiIndex& k, int up_to)
{
    st_.ensure(up_to);
    return multi_stirling1_row(k, up_to);
}

FamilyTable IdentityChecker::build_lhs(FamilyKind kind, const MultiIndex& k)
{
    return build_family({kind, 0, k}, n_max_, order_);
}

const std::vector<BiPoly>& IdentityChecker::distribution_rows(int r, int m)
{
    auto key = std::make_pair(r, m);
    auto it = dist_rows_.find(key);
    if (it != dist_rows_.end())
        return it->second;

    const FamilyTable& base = gen_degen_eg(r);
    const Rational inv_m(1, m);
    const BiPoly lambda_over_m = BiPoly::monomial(0, 1, inv_m);
    std::vector<BiPoly> rows;
    rows.reserve(static_cast<size_t>(n_max_) + 1);
    for (int i = 0; i <= n_max_; ++i) {
        BiPoly acc;
        for (int l = 0; l < m; ++l) {
            // x -> (l+x)/m, lambda -> lambda/m on the symbolic row.
            const BiPoly x_image =
                BiPoly::monomial(1, 0, inv_m) + BiPoly::constant(Rational(l, m));
            acc += minus_one_pow(l) * base.row(i).compose(x_image, lambda_over_m);
        }
        rows.push_back(acc * pow(Rational(m), i - r));
    }
    return dist_rows_.emplace(key, std::move(rows)).first->second;
}

CheckReport IdentityChecker::thm_2_1(const MultiIndex& k)
{
    require_nonempty(k);
    const int r = k.depth();
    const FamilyTable lhs_table = build_lhs(FamilyKind::multi_eg, k);
    const std::vector<Rational> msl = multi_stirling(k, n_max_);
    st_.ensure(n_max_);

    CheckReport report;
    report.name = "2.1";
    report.k = k;
    report.n_max = n_max_;
    for (int n = 0; n <= n_max_; ++n) {
        const BiPoly lhs = lhs_table.row(n).substitute(Rational(1), std::nullopt);
        Rational rhs;
        if (n >= r) {
            for (int kk = r; kk <= n; ++kk)
                for (int mm = r; mm <= kk; ++mm)
                    rhs += pow(Rational(1, 2), kk - mm) * minus_one_pow(n - kk) *
                           (factorial(kk) / factorial(mm)) * msl[static_cast<size_t>(mm)] *
                           st_.s2(n, kk);
            rhs *= factorial(r);
        }
        report.record(n, lhs, BiPoly::constant(rhs));
    }
    return report;
}

CheckReport IdentityChecker::thm_2_2(const MultiIndex& k)
{
    require_nonempty(k);
    const int r = k.depth();
    const FamilyTable lhs_table = build_lhs(FamilyKind::multi_eg, k);
    const std::vector<Rational> msl = multi_stirling(k, n_max_ + r);
    const FamilyTable& base = gen_eg(r);

    CheckReport report;
    report.name = "2.2";
    report.k = k;
    report.n_max = n_max_;
    std::vector<Rational> c(static_cast<size_t>(n_max_) + 1);
    for (int m = 0; m <= n_max_; ++m) {
        Rational sum;
        for (int l = r; l <= m + r; ++l)
            sum += msl[static_cast<size_t>(l)] * st_.s2(m + r, l) * minus_one_pow(m + r - l);
        c[static_cast<size_t>(m)] = sum / binomial(m + r, r);
    }
    for (int n = 0; n <= n_max_; ++n) {
        BiPoly rhs;
        for (int m = 0; m <= n; ++m)
            rhs += (binomial(n, m) * c[static_cast<size_t>(m)]) * base.row(n - m);
        report.record(n, lhs_table.row(n), rhs);
    }
    return report;
}

CheckReport IdentityChecker::thm_2_3(const MultiIndex& k)
{
    require_nonempty(k);
    const int r = k.depth();
    const FamilyTable lhs_table = build_lhs(FamilyKind::multi_eg, k);
    const std::vector<Rational> msl = multi_stirling(k, n_max_);
    st_.ensure(n_max_);

    CheckReport report;
    report.name = "2.3";
    report.k = k;
    report.n_max = n_max_;
    for (int n = 0; n <= n_max_; ++n) {
        const BiPoly lhs = lhs_table.row(n).substitute(Rational(1), std::nullopt) +
                           lhs_table.row(n).substitute(Rational(0), std::nullopt);
        Rational rhs;
        if (n >= r) {
            for (int kk = r; kk <= n; ++kk)
                rhs += msl[static_cast<size_t>(kk)] * minus_one_pow(n - kk) * st_.s2(n, kk);
            rhs *= Rational(2) * factorial(r);
        }
        report.record(n, lhs, BiPoly::constant(rhs));
    }
    return report;
}

CheckReport IdentityChecker::thm_2_4(const MultiIndex& k)
{
    require_nonempty(k);
    const int r = k.depth();
    const FamilyTable lhs_table = build_lhs(FamilyKind::degen_multi_eg, k);
    const std::vector<Rational> msl = multi_stirling(k, n_max_ + r);
    const FamilyTable& base = gen_degen_eg(r);

    CheckReport report;
    report.name = "2.4";
    report.k = k;
    report.n_max = n_max_;
    std::vector<Rational> d(static_cast<size_t>(n_max_) + 1);
    for (int l = 0; l <= n_max_; ++l) {
        Rational sum;
        for (int m = r; m <= l + r; ++m)
            // l - m - r can be negative; (-1)^e is parity-defined.
            sum += st_.s2(l + r, m) * minus_one_pow(l - m - r) * msl[static_cast<size_t>(m)];
        d[static_cast<size_t>(l)] = sum / binomial(l + r, r);
    }
    for (int n = 0; n <= n_max_; ++n) {
        BiPoly rhs;
        for (int l = 0; l <= n; ++l)
            rhs += (binomial(n, l) * d[static_cast<size_t>(l)]) * base.row(n - l);
        report.record(n, lhs_table.row(n), rhs);
    }
    return report;
}

CheckReport IdentityChecker::thm_2_5(const MultiIndex& k)
{
    require_nonempty(k);
    const FamilyTable lhs_table = build_lhs(FamilyKind::degen_multi_eg, k);

    std::vector<BiPoly> numbers; // A_{k,lambda}^{(k-vec)} = rows at x = 0
    std::vector<BiPoly> ff;      // (x)_{j,lambda}
    for (int n = 0; n <= n_max_; ++n) {
        numbers.push_back(lhs_table.row(n).substitute(Rational(0), std::nullopt));
        ff.push_back(lambda_falling_factorial(n));
    }

    CheckReport report;
    report.name = "2.5";
    report.k = k;
    report.n_max = n_max_;
    for (int n = 0; n <= n_max_; ++n) {
        BiPoly rhs;
        for (int kk = 0; kk <= n; ++kk)
            rhs += binomial(n, kk) *
                   (numbers[static_cast<size_t>(kk)] * ff[static_cast<size_t>(n - kk)]);
        report.record(n, lhs_table.row(n), rhs);
    }
    return report;
}

CheckReport IdentityChecker::thm_2_6(const MultiIndex& k, int m)
{
    require_nonempty(k);
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("theorem 2.6 requires odd positive m");
    const int r = k.depth();
    const FamilyTable lhs_table = build_lhs(FamilyKind::degen_multi_eg, k);
    const std::vector<Rational> msl = multi_stirling(k, n_max_ + r);
    const std::vector<BiPoly>& dist = distribution_rows(r, m);

    CheckReport report;
    report.name = "2.6";
    report.k = k;
    report.n_max = n_max_;
    report.m = m;
    std::vector<Rational> c(static_cast<size_t>(n_max_) + 1);
    for (int j = 0; j <= n_max_; ++j) {
        Rational sum;
        for (int kk = r; kk <= j + r; ++kk)
            sum += msl[static_cast<size_t>(kk)] * minus_one_pow(j + r - kk) * st_.s2(j + r, kk);
        c[static_cast<size_t>(j)] = sum / binomial(j + r, r);
    }
    for (int n = 0; n <= n_max_; ++n) {
        BiPoly rhs;
        for (int j = 0; j <= n; ++j)
            rhs += (binomial(n, j) * c[static_cast<size_t>(j)]) *
                   dist[static_cast<size_t>(n - j)];
        report.record(n, lhs_table.row(n), rhs);
    }
    return report;
}

CheckReport IdentityChecker::reductions(int r)
{
    return reduction_all_ones(r, n_max_, order_);
}

std::vector<CheckReport> IdentityChecker::run_theorems(const MultiIndex& k,
                                                       const std::vector<int>& ms)
{
    std::vector<CheckReport> reports;
    reports.push_back(thm_2_1(k));
    reports.push_back(thm_2_2(k));
    reports.push_back(thm_2_3(k));
    reports.push_back(thm_2_4(k));
    reports.push_back(thm_2_5(k));
    for (int m : ms)
        reports.push_back(thm_2_6(k, m));
    return reports;
}

std::vector<CheckReport> IdentityChecker::run_suite(const std::vector<MultiIndex>& ks,
                                                    const std::vector<int>& ms)
{
    std::vector<CheckReport> reports;
    for (const MultiIndex& k : ks) {
        if (k.depth() == 0)
            continue;
        std::vector<CheckReport> rs = run_theorems(k, ms);
        for (CheckReport& r : rs)
            reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CheckReport> run_suite_parallel(const std::vector<MultiIndex>& ks,
                                            const std::vector<int>& ms, int n_max, int order,
                                            unsigned threads)
{
    if (threads == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? hw : 1;
    }
    threads = static_cast<unsigned>(
        std::min<size_t>(threads, std::max<size_t>(ks.size(), 1)));
    if (threads <= 1) {
        IdentityChecker checker(n_max, order);
        return checker.run_suite(ks, ms);
    }

    std::vector<std::vector<CheckReport>> slots(ks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        IdentityChecker checker(n_max, order);
        for (size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1)) {
            if (ks[i].depth() == 0)
                continue;
            slots[i] = checker.run_theorems(ks[i], ms);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (std::thread& th : pool)
        th.join();

    std::vector<CheckReport> out;
    for (std::vector<CheckReport>& slot : slots)
        for (CheckReport& r : slot)
            out.push_back(std::move(r));
    return out;
}

std::vector<MultiIndex> multi_index_grid(int r_max, int lo, int hi)
{
    if (lo > hi)
        throw std::invalid_argument("multi_index_grid: empty entry range");
    std::vector<MultiIndex> out;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<int> e(static_cast<size_t>(r), lo);
        while (true) {
            out.emplace_back(e);
            int pos = r - 1;
            while (pos >= 0 && e[static_cast<size_t>(pos)] == hi) {
                e[static_cast<size_t>(pos)] = lo;
                --pos;
            }
            if (pos < 0)
                break;
            ++e[static_cast<size_t>(pos)];
        }
    }
    return out;
}

} // namespace polyg
