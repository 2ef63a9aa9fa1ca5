#include "polyg/render.hpp"

#include <sstream>
#include <stdexcept>

namespace polyg {

using nlohmann::json;

json to_json(const BiPoly& p)
{
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        terms.push_back({{"xdeg", key.xdeg}, {"ldeg", key.ldeg}, {"coef", c.wire()}});
    }
    return terms;
}

BiPoly bipoly_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("bipoly_from_json: expected an array of terms");
    BiPoly p;
    for (const json& term : j) {
        p += BiPoly::monomial(term.at("xdeg").get<int>(), term.at("ldeg").get<int>(),
                              Rational::parse(term.at("coef").get<std::string>()));
    }
    return p;
}

namespace {

json id_to_json(const FamilyId& id)
{
    json j;
    j["family"] = id.tag();
    if (id.kind == FamilyKind::gen_eg || id.kind == FamilyKind::gen_degen_eg)
        j["r"] = id.r;
    if (id.is_multi())
        j["k"] = id.k.entries;
    if (id.kind == FamilyKind::multi_bernoulli)
        j["classical_denominator"] = id.classical_denominator;
    return j;
}

FamilyId id_from_json(const json& j)
{
    FamilyId id;
    id.kind = FamilyId::kind_from_tag(j.at("family").get<std::string>());
    if (j.contains("r"))
        id.r = j.at("r").get<int>();
    if (j.contains("k"))
        id.k = MultiIndex(j.at("k").get<std::vector<int>>());
    if (j.contains("classical_denominator"))
        id.classical_denominator = j.at("classical_denominator").get<bool>();
    return id;
}

} // namespace

json to_json(const FamilyTable& table)
{
    json j = id_to_json(table.id());
    j["n_max"] = table.n_max();
    json rows = json::array();
    for (int n = 0; n <= table.n_max(); ++n)
        rows.push_back(to_json(table.row(n)));
    j["rows"] = std::move(rows);
    return j;
}

FamilyTable table_from_json(const json& j)
{
    const FamilyId id = id_from_json(j);
    std::vector<BiPoly> rows;
    for (const json& row : j.at("rows"))
        rows.push_back(bipoly_from_json(row));
    FamilyTable table(id, std::move(rows));
    if (j.contains("n_max") && j.at("n_max").get<int>() != table.n_max())
        throw std::invalid_argument("table_from_json: n_max does not match row count");
    return table;
}

json to_json(const CheckReport& report)
{
    json j;
    j["theorem"] = report.name;
    if (report.k)
        j["k"] = report.k->entries;
    if (report.m)
        j["m"] = *report.m;
    if (report.r)
        j["r"] = *report.r;
    j["n_max"] = report.n_max;
    json results = json::array();
    for (const CheckRecord& rec : report.results) {
        json entry{{"n", rec.n}, {"status", rec.pass ? "pass" : "fail"}};
        if (!rec.pass) {
            entry["lhs"] = to_json(rec.lhs);
            entry["rhs"] = to_json(rec.rhs);
        }
        results.push_back(std::move(entry));
    }
    j["results"] = std::move(results);
    return j;
}

json to_json(const std::vector<CheckReport>& reports)
{
    json arr = json::array();
    for (const CheckReport& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

std::string render_table_text(const FamilyTable& table)
{
    std::ostringstream os;
    for (int n = 0; n <= table.n_max(); ++n)
        os << table.row(n).str() << "\n";
    return os.str();
}

std::string render_table_csv(const FamilyTable& table)
{
    std::ostringstream os;
    os << "n,value\n";
    for (int n = 0; n <= table.n_max(); ++n)
        os << n << "," << table.row(n).str() << "\n";
    return os.str();
}

namespace {

std::string report_heading(const CheckReport& report)
{
    std::string out;
    if (report.name == "reductions")
        out = "reductions";
    else
        out = "thm " + report.name;
    if (report.k)
        out += " k=" + report.k->str();
    if (report.r)
        out += " r=" + std::to_string(*report.r);
    if (report.m)
        out += " m=" + std::to_string(*report.m);
    out += " n_max=" + std::to_string(report.n_max);
    return out;
}

} // namespace

std::string render_reports_text(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    for (const CheckReport& report : reports) {
        os << report_heading(report) << ": ";
        if (report.all_pass()) {
            os << "PASS (" << report.results.size() << "/" << report.results.size() << ")\n";
            continue;
        }
        os << "FAIL (" << report.failure_count() << " of " << report.results.size() << ")\n";
        for (const CheckRecord& rec : report.results)
            if (!rec.pass)
                os << "  n=" << rec.n << ": lhs = " << rec.lhs.str()
                   << " ; rhs = " << rec.rhs.str() << "\n";
    }
    return os.str();
}

std::string render_reports_csv(const std::vector<CheckReport>& reports)
{
    std::ostringstream os;
    os << "theorem,k,r,m,n,status,lhs,rhs\n";
    for (const CheckReport& report : reports) {
        for (const CheckRecord& rec : report.results) {
            os << report.name << "," << (report.k ? report.k->str() : "") << ","
               << (report.r ? std::to_string(*report.r) : "") << ","
               << (report.m ? std::to_string(*report.m) : "") << "," << rec.n << ","
               << (rec.pass ? "pass" : "fail") << ",";
            if (!rec.pass)
                os << rec.lhs.str() << "," << rec.rhs.str();
            else
                os << ",";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace polyg
