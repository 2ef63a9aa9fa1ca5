#ifndef POLYG_REPORT_HPP
#define POLYG_REPORT_HPP

#include "polyg/bipoly.hpp"
#include "polyg/stirling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyg {

// One per-n comparison outcome. Both sides are carried verbatim on
// mismatch so a failing identity can be inspected; on pass they stay empty.
struct CheckRecord
{
    int n = 0;
    bool pass = true;
    BiPoly lhs;
    BiPoly rhs;
};

struct CheckReport
{
    std::string name; // "2.1" .. "2.6", "reductions"
    std::optional<MultiIndex> k;
    int n_max = 0;
    std::optional<int> m; // theorem 2.6 only
    std::optional<int> r; // reductions only
    std::vector<CheckRecord> results; // exactly one record per n in 0..n_max

    bool all_pass() const
    {
        for (const CheckRecord& rec : results)
            if (!rec.pass)
                return false;
        return true;
    }

    int failure_count() const
    {
        int c = 0;
        for (const CheckRecord& rec : results)
            c += rec.pass ? 0 : 1;
        return c;
    }

    void record(int n, const BiPoly& lhs, const BiPoly& rhs)
    {
        CheckRecord rec;
        rec.n = n;
        rec.pass = (lhs == rhs);
        if (!rec.pass) {
            rec.lhs = lhs;
            rec.rhs = rhs;
        }
        results.push_back(std::move(rec));
    }
};

} // namespace polyg

#endif
