#include "ppcd/io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace ppcd {

using nlohmann::json;

namespace {

json pair_json(Chord c) { return json::array({c.a, c.b}); }

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::Schema, what); }

int integer_field(const json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) schema(std::string("missing field '") + name + "'");
    if (!it->is_number_integer()) schema(std::string("field '") + name + "' must be an integer");
    return it->get<int>();
}

}  // namespace

json to_json(const Diagram& d) {
    json matching = json::array();
    for (Chord c : d.chords()) matching.push_back(pair_json(c));
    return json{{"genus", d.genus().value()}, {"matching", std::move(matching)}, {"puncture_gap", d.puncture_gap()}};
}

Diagram diagram_from_json(const json& j) {
    if (!j.is_object()) schema("diagram must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "genus" && key != "matching" && key != "puncture_gap") schema("unknown field '" + key + "'");
    }
    const int genus = integer_field(j, "genus");
    const int gap = integer_field(j, "puncture_gap");
    const auto it = j.find("matching");
    if (it == j.end()) schema("missing field 'matching'");
    if (!it->is_array()) schema("field 'matching' must be an array");

    Matching chords;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& pair = (*it)[i];
        const std::string where = "matching[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
            schema(where + " must be a pair of integers");
        }
        const Chord c{pair[0].get<int>(), pair[1].get<int>()};
        if (c.a >= c.b) schema(where + " must satisfy a < b");
        if (!chords.empty() && chords.back().a >= c.a) schema(where + " is out of order; pairs must be sorted by a");
        chords.push_back(c);
    }
    return validate(Genus(genus), chords, gap);
}

Diagram parse_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        schema(e.what());
    }
    return diagram_from_json(j);
}

json to_json(const DualTree& t) {
    json vertices = json::array();
    for (FaceId v : t.vertices) vertices.push_back(v.id);
    json edges = json::array();
    for (const DualEdge& e : t.edges) {
        edges.push_back(json{{"chord", pair_json(e.chord)}, {"inner", e.inner.id}, {"outer", e.outer.id}});
    }
    return json{{"root", t.root.id}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const TubingDescription& t) {
    json tubes = json::array();
    for (const Tube& tube : t.tubes) {
        tubes.push_back(json{{"chord", pair_json(tube.chord)},
                             {"from", {{"sphere", tube.from.sphere}, {"arc", tube.from.arc}}},
                             {"to", {{"sphere", tube.to.sphere}, {"arc", tube.to.arc}}},
                             {"depth", tube.depth}});
    }
    return json{{"sc_choice", t.sc_choice}, {"spheres", t.spheres}, {"tubes", std::move(tubes)}};
}

json to_json(const EnumerationReport& r) {
    return json{{"genus", r.genus},
                {"total_matchings", r.total_matchings},
                {"candidates", r.candidates},
                {"wellformed", r.wellformed_count},
                {"connected", r.connected_count},
                {"admissible", r.admissible_count},
                {"structural", r.structural_count},
                {"structural_set_equal", r.structural_set_equal},
                {"witnesses", r.witnesses}};
}

json face_report_json(const SuperimposedDiagram& s) {
    json crossings = json::array();
    for (const CrossingPair& p : s.crossing_pairs()) crossings.push_back(json::array({pair_json(p.a), pair_json(p.b)}));

    json faces_out = json::array();
    std::map<std::string, int> summary;
    for (const ClassifiedFace& cf : face_report(s)) {
        json f{{"composition", cf.face.composition()}, {"puncture", cf.face.puncture}};
        if (cf.type) {
            const std::string kind(to_string(cf.type->kind));
            f["kind"] = kind;
            f["n"] = cf.type->n;
            ++summary[kind];
        } else {
            f["kind"] = nullptr;
            ++summary["unclassified"];
        }
        faces_out.push_back(std::move(f));
    }
    const EulerCounts e = euler_counts(s);
    return json{{"genus", s.genus.value()},
                {"boundary_points", s.boundary_points},
                {"crossings", std::move(crossings)},
                {"faces", std::move(faces_out)},
                {"summary", summary},
                {"type_iv_n_ge_2", has_type_iv_n_ge_2(s)},
                {"euler", {{"vertices", e.vertices}, {"edges", e.edges}, {"faces", e.faces}}}};
}

nlohmann::ordered_json count_rows_json(const CountReport& r) {
    auto out = nlohmann::ordered_json::array();
    for (const CountRow& row : r.rows) out.push_back(nlohmann::ordered_json{{"g", row.g}, {"count", row.closed_form}});
    return out;
}

namespace {

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string count_table(const CountReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "g" << std::setw(8) << "count" << std::setw(11) << "published" << std::setw(12)
       << "enumerated" << std::setw(8) << "B_M" << "match\n";
    for (const CountRow& row : r.rows) {
        const bool ok = row.published_match && row.enumerated_match;
        os << std::setw(4) << row.g << std::setw(8) << row.closed_form << std::setw(11) << cell(row.published)
           << std::setw(12) << cell(row.enumerated) << std::setw(8) << cell(row.bm_coefficient) << (ok ? "yes" : "no")
           << '\n';
    }
    return os.str();
}

json gf_json(const std::vector<std::int64_t>& coefficients) {
    json out = json::array();
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        json row{{"k", k}, {"c", coefficients[k]}};
        if (const auto a = published_count(static_cast<int>(k) + 1)) {
            row["a"] = *a;
            row["match"] = *a == coefficients[k];
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string gf_table(const std::vector<std::int64_t>& coefficients) {
    std::ostringstream os;
    std::ostringstream flags;
    os << std::left << std::setw(4) << "k" << std::setw(10) << "c_k" << std::setw(10) << "a_{k+1}" << "match\n";
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        const auto a = published_count(static_cast<int>(k) + 1);
        os << std::setw(4) << k << std::setw(10) << coefficients[k] << std::setw(10) << cell(a);
        if (a) {
            const char* verdict = *a == coefficients[k] ? "yes" : "no";
            os << verdict;
            flags << "match(c" << k << ")=" << verdict << '\n';
        } else {
            os << '-';
        }
        os << '\n';
    }
    return os.str() + flags.str();
}

}  // namespace ppcd
