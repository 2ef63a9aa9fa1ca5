#ifndef POLYG_RENDER_HPP
#define POLYG_RENDER_HPP

#include "polyg/families.hpp"
#include "polyg/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polyg {

// Wire form of a BiPoly: term list sorted ascending by (xdeg, ldeg), each
// term {"xdeg": int, "ldeg": int, "coef": "num/den"}.
nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilyTable& table);
FamilyTable table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const std::vector<CheckReport>& reports);

// Text tables are one polynomial per line, descending x-degree; CSV keeps
// one row per n with the polynomial string in the second cell.
std::string render_table_text(const FamilyTable& table);
std::string render_table_csv(const FamilyTable& table);
std::string render_reports_text(const std::vector<CheckReport>& reports);
std::string render_reports_csv(const std::vector<CheckReport>& reports);

} // namespace polyg

#endif
