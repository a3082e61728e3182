#pragma once

// JSON and text renderings shared by the command-line tool and the tests.
//
// Diagram records look like
//   {"genus": 3, "matching": [[0,1],[2,7],[3,4],[5,6]], "puncture_gap": 0}
// with pairs a < b sorted by a. Unknown fields are rejected.

#include <string>

#include "json.hpp"

#include "ppcd/counting.hpp"
#include "ppcd/diagram.hpp"
#include "ppcd/dual_tree.hpp"
#include "ppcd/enumeration.hpp"
#include "ppcd/superposition.hpp"
#include "ppcd/tubing.hpp"

namespace ppcd {

nlohmann::json to_json(const Diagram& d);

// Throws Error with code Schema for shape problems and the validation codes
// for diagrams that parse but are not valid.
Diagram diagram_from_json(const nlohmann::json& j);
Diagram parse_diagram(const std::string& text);

nlohmann::json to_json(const DualTree& t);
nlohmann::json to_json(const TubingDescription& t);
nlohmann::json to_json(const EnumerationReport& r);

nlohmann::json face_report_json(const SuperimposedDiagram& s);

// [{"g": 2, "count": 12}, ...]
nlohmann::ordered_json count_rows_json(const CountReport& r);
std::string count_table(const CountReport& r);

// c_k next to the published a_{k+1}.
nlohmann::json gf_json(const std::vector<std::int64_t>& coefficients);
std::string gf_table(const std::vector<std::int64_t>& coefficients);

}  // namespace ppcd
