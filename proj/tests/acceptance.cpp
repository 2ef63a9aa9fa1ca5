// Acceptance suite: runs the full verification grid and prints one
// PASS/FAIL line per criterion. Exit status is nonzero iff any criterion
// fails. The CLI binary path is passed with --cli so the end-to-end
// checks (subprocess invocation, selftest determinism) drive the real
// executable.

#include "polyg/families.hpp"
#include "polyg/identities.hpp"
#include "polyg/selfcheck.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace polyg;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << index << " " << name;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!ok)
        ++g_failures;
}

struct RunResult
{
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& cmd)
{
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        res.exit_code = WEXITSTATUS(status);
    return res;
}

std::string summarize(const CheckSummary& s)
{
    std::string out = std::to_string(s.cases) + " cases, " + std::to_string(s.failures) +
                      " failures";
    if (!s.notes.empty())
        out += "; first: " + s.notes.front();
    return out;
}

void criterion_theorem_grid(int order)
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<MultiIndex> grid = multi_index_grid(3, -2, 3);
    const std::vector<CheckReport> reports =
        run_suite_parallel(grid, {1, 3, 5}, 12, order);
    long records = 0, failures = 0;
    for (const CheckReport& r : reports) {
        records += static_cast<long>(r.results.size());
        failures += r.failure_count();
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    report(1, "theorem-checks-full-grid", failures == 0,
           std::to_string(grid.size()) + " multi-indices, " + std::to_string(reports.size()) +
               " reports, " + std::to_string(records) + " rows, " + std::to_string(failures) +
               " failures, order " + std::to_string(order) + ", " + std::to_string(secs) + "s");
}

void criterion_cli_spot(const std::string& cli)
{
    const RunResult all =
        run_command("\"" + cli + "\" check --theorem all --k 1,-2,3 --n-max 8 --m 3");
    const bool count_ok = [&] {
        // 7 reports with a single m: 6 theorems + reductions.
        size_t lines = 0;
        for (char c : all.output)
            if (c == '\n')
                ++lines;
        return lines == 7;
    }();
    report(1, "cli-check-all", all.exit_code == 0 && count_ok,
           "exit " + std::to_string(all.exit_code) + ", " + std::to_string(count_ok ? 7 : -1) +
               " reports");
}

void criterion_reductions()
{
    const CheckSummary s = check_reductions(3, 12, 12);
    report(2, "all-ones-reductions", s.failures == 0, summarize(s));
}

void criterion_multi_stirling_cross(const std::vector<MultiIndex>& ks)
{
    CheckSummary routes = check_li_routes(ks, 16);
    const CheckSummary ones = check_li_all_ones(16, 10);
    report(3, "multi-stirling-cross-validation", routes.failures + ones.failures == 0,
           summarize(routes) + " + all-ones " + summarize(ones));
}

void criterion_derivative(const std::vector<MultiIndex>& ks)
{
    const CheckSummary s = check_li_derivative(ks, 16);
    report(4, "li-derivative-identity", s.failures == 0, summarize(s));
}

void criterion_degeneration()
{
    const std::vector<MultiIndex> ks = sample_multi_indices(0, 20, 1, 3, -2, 3);
    const CheckSummary s = check_degeneration(ks, 12);
    report(5, "lambda-zero-degeneration", s.failures == 0, summarize(s));
}

void criterion_vanishing_degree()
{
    const CheckSummary s = check_vanishing_degree(multi_index_grid(3, -2, 3), 12);
    report(6, "vanishing-and-degree-law", s.failures == 0, summarize(s));
}

void criterion_genocchi()
{
    const CheckSummary s = check_genocchi_integrality(20);
    report(7, "genocchi-integrality", s.failures == 0, summarize(s));
}

void criterion_stirling_inversion()
{
    const CheckSummary s = check_stirling_inversion(12);
    report(8, "stirling-inversion", s.failures == 0, summarize(s));
}

void criterion_selftest_determinism(const std::string& cli)
{
    std::string detail;
    bool ok = true;
    for (int seed : {0, 7}) {
        const std::string cmd =
            "\"" + cli + "\" selftest --seed " + std::to_string(seed);
        const RunResult a = run_command(cmd);
        const RunResult b = run_command(cmd);
        const bool same = a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() &&
                          a.output == b.output;
        ok = ok && same;
        if (!detail.empty())
            detail += "; ";
        detail += "seed " + std::to_string(seed) + ": exit " +
                  std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code) + ", " +
                  std::to_string(a.output.size()) + " bytes" +
                  (same ? ", identical" : ", DIFFER");
    }
    report(9, "selftest-determinism", ok, detail);
}

} // namespace

int main(int argc, char** argv)
{
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            cli = argv[i + 1];
    if (cli.empty()) {
        std::cerr << "usage: acceptance --cli <path-to-polyg-binary>\n";
        return 2;
    }

    const std::vector<MultiIndex> random_ks = sample_multi_indices(0, 20, 1, 3, -3, 3);

    criterion_theorem_grid(24);
    criterion_cli_spot(cli);
    criterion_reductions();
    criterion_multi_stirling_cross(random_ks);
    criterion_derivative(random_ks);
    criterion_degeneration();
    criterion_vanishing_degree();
    criterion_genocchi();
    criterion_stirling_inversion();
    criterion_selftest_determinism(cli);

    if (g_failures) {
        std::cout << g_failures << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
