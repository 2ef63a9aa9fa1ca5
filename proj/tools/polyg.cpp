#include "polyg/families.hpp"
#include "polyg/identities.hpp"
#include "polyg/render.hpp"
#include "polyg/selfcheck.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace polyg;

constexpr int kDefaultOrder = 24;

struct TableOpts
{
    std::string family;
    std::string k;
    int r = -1;
    bool classical = false;
    int n_max = 0;
    int order = -1;
    std::string x = "symbolic";
    std::string lambda = "symbolic";
    std::string format = "text";
    std::string out;
};

struct CheckOpts
{
    std::string theorem;
    std::string k;
    int r = -1;
    int m = 1;
    int n_max = 12;
    int order = -1;
    std::string format = "text";
    std::string out;
};

struct SelftestOpts
{
    unsigned seed = 0;
    int n_max = 12;
    int order = -1;
};

int resolve_order(int explicit_order, int n_max)
{
    if (explicit_order >= 0) {
        if (explicit_order < n_max)
            throw std::invalid_argument("--order must be at least n_max");
        return explicit_order;
    }
    if (const char* env = std::getenv("POLYG_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0)
            throw std::invalid_argument("POLYG_ORDER is not a nonnegative integer");
        if (v < n_max)
            throw std::invalid_argument("POLYG_ORDER is smaller than n_max");
        return static_cast<int>(v);
    }
    return std::max(kDefaultOrder, n_max);
}

std::optional<Rational> parse_value_mode(const std::string& s, const char* flag)
{
    if (s == "symbolic")
        return std::nullopt;
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(flag) + " expects 'symbolic' or a rational");
    }
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw std::invalid_argument("cannot open output file '" + out_path + "'");
    os << text;
}

FamilyId family_id_from(const TableOpts& o)
{
    FamilyId id;
    id.kind = FamilyId::kind_from_tag(o.family);
    if (id.kind == FamilyKind::gen_eg || id.kind == FamilyKind::gen_degen_eg) {
        if (o.r < 0)
            throw std::invalid_argument("--r (nonnegative) is required for " + o.family);
        id.r = o.r;
    }
    if (id.is_multi()) {
        if (o.k.empty())
            throw std::invalid_argument("--k is required for " + o.family +
                                        " ('()' for the empty multi-index)");
        id.k = MultiIndex::parse(o.k);
    }
    if (o.classical) {
        if (id.kind != FamilyKind::multi_bernoulli)
            throw std::invalid_argument("--classical-denom only applies to multi-bernoulli");
        id.classical_denominator = true;
    }
    return id;
}

int run_table(const TableOpts& o)
{
    if (o.n_max < 0)
        throw std::invalid_argument("--n-max must be nonnegative");
    const int order = resolve_order(o.order, o.n_max);
    const std::optional<Rational> x_val = parse_value_mode(o.x, "--x");
    const std::optional<Rational> l_val = parse_value_mode(o.lambda, "--lambda");

    const FamilyId id = family_id_from(o);
    FamilyTable table = build_family(id, o.n_max, order);
    if (x_val || l_val) {
        std::vector<BiPoly> rows;
        rows.reserve(static_cast<size_t>(table.n_max()) + 1);
        for (int n = 0; n <= table.n_max(); ++n)
            rows.push_back(family_value_at(table, n, x_val, l_val));
        table = FamilyTable(id, std::move(rows));
    }

    if (o.format == "text") {
        emit(render_table_text(table), o.out);
    } else if (o.format == "csv") {
        emit(render_table_csv(table), o.out);
    } else if (o.format == "json") {
        nlohmann::json j = to_json(table);
        if (x_val)
            j["x"] = x_val->wire();
        if (l_val)
            j["lambda"] = l_val->wire();
        emit(j.dump(2) + "\n", o.out);
    } else {
        throw std::invalid_argument("--format must be text, csv or json");
    }
    return 0;
}

int run_check(const CheckOpts& o)
{
    static const std::set<std::string> selectors{"2.1", "2.2", "2.3", "2.4",
                                                 "2.5", "2.6", "reductions", "all"};
    if (!selectors.count(o.theorem))
        throw std::invalid_argument("--theorem must be one of 2.1..2.6, reductions, all");
    if (o.n_max < 0)
        throw std::invalid_argument("--n-max must be nonnegative");
    const int order = resolve_order(o.order, o.n_max);

    std::optional<MultiIndex> k;
    if (!o.k.empty())
        k = MultiIndex::parse(o.k);

    const bool uses_m = (o.theorem == "2.6" || o.theorem == "all");
    if (uses_m && (o.m < 1 || o.m % 2 == 0))
        throw std::invalid_argument("--m must be an odd positive integer");

    IdentityChecker checker(o.n_max, order);
    std::vector<CheckReport> reports;
    if (o.theorem == "reductions") {
        int r = o.r;
        if (r < 0 && k)
            r = k->depth();
        if (r < 0)
            throw std::invalid_argument("reductions needs --r (or --k to take its depth)");
        reports.push_back(checker.reductions(r));
    } else {
        if (!k)
            throw std::invalid_argument("--k is required for theorem checks");
        if (o.theorem == "all") {
            reports = checker.run_theorems(*k, {o.m});
            reports.push_back(checker.reductions(k->depth()));
        } else if (o.theorem == "2.1") {
            reports.push_back(checker.thm_2_1(*k));
        } else if (o.theorem == "2.2") {
            reports.push_back(checker.thm_2_2(*k));
        } else if (o.theorem == "2.3") {
            reports.push_back(checker.thm_2_3(*k));
        } else if (o.theorem == "2.4") {
            reports.push_back(checker.thm_2_4(*k));
        } else if (o.theorem == "2.5") {
            reports.push_back(checker.thm_2_5(*k));
        } else {
            reports.push_back(checker.thm_2_6(*k, o.m));
        }
    }

    if (o.format == "text")
        emit(render_reports_text(reports), o.out);
    else if (o.format == "csv")
        emit(render_reports_csv(reports), o.out);
    else if (o.format == "json")
        emit(to_json(reports).dump(2) + "\n", o.out);
    else
        throw std::invalid_argument("--format must be text, csv or json");

    for (const CheckReport& r : reports)
        if (!r.all_pass())
            return 1;
    return 0;
}

int run_selftest(const SelftestOpts& o)
{
    if (o.n_max < 0)
        throw std::invalid_argument("--n-max must be nonnegative");
    const int order = resolve_order(o.order, o.n_max);
    const unsigned seed = o.seed;

    // The suite grid: every r = 1 index, plus seeded samples at r = 2, 3,
    // deduplicated into a sorted deterministic set.
    std::set<MultiIndex> grid;
    for (int v = -2; v <= 3; ++v)
        grid.insert(MultiIndex({v}));
    for (const MultiIndex& k : sample_multi_indices(seed, 12, 2, 2, -2, 3))
        grid.insert(k);
    for (const MultiIndex& k : sample_multi_indices(seed + 1, 12, 3, 3, -2, 3))
        grid.insert(k);
    const std::vector<MultiIndex> suite_ks(grid.begin(), grid.end());

    std::ostringstream os;
    os << "polyg selftest: seed=" << seed << " n_max=" << o.n_max << " order=" << order
       << " suite-k=" << suite_ks.size() << " m={1,3,5}\n";

    std::vector<CheckSummary> sums;
    sums.push_back(check_ring_axioms(seed, 16));
    sums.push_back(check_substitution(seed + 1, 16));
    sums.push_back(check_series_ops(seed + 2));
    sums.push_back(check_stirling_vs_series(14));
    sums.push_back(check_stirling_inversion(12));
    const std::vector<MultiIndex> li_ks = sample_multi_indices(seed + 3, 20, 1, 3, -3, 3);
    sums.push_back(check_li_routes(li_ks, 16));
    sums.push_back(check_li_derivative(li_ks, 16));
    sums.push_back(check_li_all_ones(16, 10));
    sums.push_back(check_degeneration(sample_multi_indices(seed + 4, 12, 1, 3, -2, 3),
                                      std::min(o.n_max, 12)));
    sums.push_back(check_vanishing_degree(suite_ks, o.n_max));
    sums.push_back(check_genocchi_integrality(20));
    sums.push_back(check_translation(sample_multi_indices(seed + 5, 6, 1, 3, -2, 3),
                                     std::min(o.n_max, 10)));
    sums.push_back(check_gen_eg_specials(12));
    sums.push_back(check_reductions(3, o.n_max, order));

    const std::vector<CheckReport> reports =
        run_suite_parallel(suite_ks, {1, 3, 5}, o.n_max, order);
    CheckSummary suite{"theorem-suite"};
    for (const CheckReport& report : reports)
        for (const CheckRecord& rec : report.results)
            suite.check(rec.pass, "thm " + report.name +
                                      (report.k ? " k=" + report.k->str() : "") +
                                      " n=" + std::to_string(rec.n));
    sums.push_back(std::move(suite));

    long total = 0;
    for (const CheckSummary& s : sums) {
        os << std::left << std::setw(26) << s.name << std::right << std::setw(7) << s.cases
           << " cases " << std::setw(3) << s.failures << " failures\n";
        size_t shown = 0;
        for (const std::string& note : s.notes) {
            if (shown++ == 5) {
                os << "    ...\n";
                break;
            }
            os << "    " << note << "\n";
        }
        total += s.failures;
    }
    os << "total: " << total << " failures\n";
    std::cout << os.str();
    return total == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"polyg: exact tables and identity checks for Euler-Genocchi-type families"};
    app.require_subcommand(1);

    TableOpts t;
    CLI::App* table = app.add_subcommand("table", "Print rows 0..n_max of a family");
    table->add_option("--family", t.family,
                      "euler|genocchi|gen-eg|degen-euler|degen-genocchi|gen-degen-eg|"
                      "multi-eg|degen-multi-eg|multi-bernoulli")
        ->required();
    table->add_option("--k", t.k, "multi-index, e.g. 1,2,-1 ('()' for empty)");
    table->add_option("--r", t.r, "order for gen-eg / gen-degen-eg");
    table->add_flag("--classical-denom", t.classical,
                    "multi-bernoulli variant with (e^t-1)^r denominator");
    table->add_option("--n-max", t.n_max, "highest row")->required();
    table->add_option("--order,-N", t.order, "series truncation order (default 24)");
    table->add_option("--x", t.x, "'symbolic' or a rational value");
    table->add_option("--lambda", t.lambda, "'symbolic' or a rational value");
    table->add_option("--format", t.format, "text|csv|json");
    table->add_option("--out", t.out, "output path (default stdout)");

    CheckOpts c;
    CLI::App* check = app.add_subcommand("check", "Verify a theorem identity exactly");
    check->add_option("--theorem", c.theorem, "2.1|2.2|2.3|2.4|2.5|2.6|reductions|all")
        ->required();
    check->add_option("--k", c.k, "multi-index");
    check->add_option("--r", c.r, "reduction order (reductions only)");
    check->add_option("--m", c.m, "odd modulus for theorem 2.6");
    check->add_option("--n-max", c.n_max, "highest row to verify");
    check->add_option("--order,-N", c.order, "series truncation order (default 24)");
    check->add_option("--format", c.format, "text|csv|json");
    check->add_option("--out", c.out, "output path (default stdout)");

    SelftestOpts s;
    CLI::App* selftest =
        app.add_subcommand("selftest", "Run the default verification grid and invariants");
    selftest->add_option("--seed", s.seed, "sampling seed");
    selftest->add_option("--n-max", s.n_max, "highest row for the suite");
    selftest->add_option("--order,-N", s.order, "series truncation order (default 24)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(table))
            return run_table(t);
        if (app.got_subcommand(check))
            return run_check(c);
        return run_selftest(s);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
