#include "ppcd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ppcd/counting.hpp"
#include "ppcd/dual_tree.hpp"
#include "ppcd/enumeration.hpp"
#include "ppcd/io.hpp"
#include "ppcd/pairings.hpp"
#include "ppcd/structure.hpp"
#include "ppcd/superposition.hpp"
#include "ppcd/tubing.hpp"

namespace ppcd {

namespace {

struct Invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Invalid("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Diagram load(const std::string& path) {
    try {
        return parse_diagram(read_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(std::string(to_string(e.code())).size() + 2));
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    int lo = 0;
    int hi = 0;
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text, &used);
            if (used != text.size()) throw Invalid("");
        } else {
            const std::string left = text.substr(0, dots);
            const std::string right = text.substr(dots + 2);
            lo = std::stoi(left, &used);
            if (used != left.size()) throw Invalid("");
            hi = std::stoi(right, &used);
            if (used != right.size()) throw Invalid("");
        }
    } catch (const std::exception&) {
        throw Invalid("malformed genus range '" + text + "', expected A..B");
    }
    if (lo < 2 || hi < lo) throw Invalid("genus range " + text + " must satisfy 2 <= A <= B");
    return {lo, hi};
}

// Ways a connected diagram, g >= 3, breaks the expected chord structure.
std::vector<std::string> structure_violations(const Diagram& d) {
    std::vector<std::string> out;
    const Genus g = d.genus();
    int longest = 0;
    int unit = 0;
    for (Chord c : d.chords()) {
        const int len = chord_length(d, c);
        if (len == max_possible_length(g)) ++longest;
        if (len == 1) ++unit;
        if (len % 2 == 0) out.push_back("even chord length " + std::to_string(len));
    }
    if (longest != 1) out.push_back(std::to_string(longest) + " chords of maximal length");
    if (unit != 2) out.push_back(std::to_string(unit) + " chords of length 1");
    if (!find_landmarks(d)) out.push_back("length-1 chords misplaced");
    if (leaf_count(build_dual_tree(d)) != 3) out.push_back("dual tree does not have 3 leaves");
    return out;
}

class Verifier {
public:
    Verifier(std::ostream& out, int partitions) : out_(out), partitions_(partitions) {}

    void genus_two() {
        const auto wellformed = enumerate_wellformed(Genus(2), partitions_);
        const auto connected = enumerate_connected(Genus(2), partitions_);
        const std::int64_t surfaces = 2 * static_cast<std::int64_t>(connected.size());
        report(connected.size() == 6 && surfaces == surface_count(Genus(2)),
               "g=2 diagrams=" + std::to_string(wellformed.size()) + " connected=" + std::to_string(connected.size()) +
                   " expected=6 surfaces=" + std::to_string(surfaces));
    }

    void genus(int gv) {
        const Genus g(gv);
        const EnumerationReport r = crosscheck_structural(g, partitions_);
        const std::int64_t expected = 4 * euler_totient(gv - 1);
        std::ostringstream line;
        line << "g=" << gv << " candidates=" << r.candidates << " wellformed=" << r.wellformed_count
             << " connected=" << r.connected_count << " structural=" << r.structural_count << " expected=" << expected
             << " set-equal=" << (r.structural_set_equal ? "yes" : "no");
        report(r.structural_set_equal && static_cast<std::int64_t>(r.connected_count) == expected, line.str());
        for (const std::string& w : r.witnesses) out_ << "  witness " << w << '\n';

        std::size_t bad = 0;
        for (const Diagram& d : enumerate_connected(g, partitions_)) {
            const auto v = structure_violations(d);
            if (v.empty()) continue;
            ++bad;
            out_ << "  witness " << canonical_key(d) << ": " << v.front() << '\n';
        }
        report(bad == 0, "g=" + std::to_string(gv) + " structure invariants violations=" + std::to_string(bad));

        const std::int64_t surfaces = 2 * static_cast<std::int64_t>(r.connected_count);
        report(surfaces == surface_count(g), "g=" + std::to_string(gv) + " surfaces=" + std::to_string(surfaces) +
                                                 " closed-form=" + std::to_string(surface_count(g)));
    }

    void superposition(int gv) {
        const Genus g(gv);
        std::vector<Diagram> diagrams;
        for (const StructuralLocus& locus : valid_loci(g, true)) diagrams.push_back(build_structural(locus));
        int pairs = 0;
        int unclassified = 0;
        int single_type_i = 0;
        int type_iv = 0;
        for (const Diagram& d1 : diagrams) {
            for (const Diagram& d2 : diagrams) {
                const auto m1 = find_landmarks(d1);
                const auto m2 = find_landmarks(d2);
                if (m1->region == m2->region) continue;
                ++pairs;
                const SuperimposedDiagram s = reduce_bigons(superimpose(d1, d2));
                int type_i = 0;
                for (const ClassifiedFace& cf : face_report(s)) {
                    if (!cf.type) {
                        ++unclassified;
                        out_ << "  witness " << canonical_key(d1) << " + " << canonical_key(d2) << ": face "
                             << cf.face.composition() << '\n';
                    } else if (cf.type->kind == FaceKind::I) {
                        ++type_i;
                    }
                }
                if (type_i == 1) ++single_type_i;
                if (has_type_iv_n_ge_2(s)) ++type_iv;
            }
        }
        const std::string prefix = "g=" + std::to_string(gv) + " superposition pairs=" + std::to_string(pairs);
        report(unclassified == 0, prefix + " unclassified faces=" + std::to_string(unclassified));
        report(single_type_i == pairs, prefix + " exactly one type I face in " + std::to_string(single_type_i));
        report(type_iv == pairs, prefix + " type IV with n>=2 in " + std::to_string(type_iv));
    }

    bool passed() const noexcept { return passed_; }

private:
    void report(bool ok, const std::string& line) {
        out_ << (ok ? "ok       " : "MISMATCH ") << line << '\n';
        passed_ = passed_ && ok;
    }

    std::ostream& out_;
    int partitions_;
    bool passed_ = true;
};

std::string diagram_lines(const std::vector<Diagram>& diagrams) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        out += "  " + to_json(diagrams[i]).dump();
        out += i + 1 < diagrams.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chord diagram census for closed essential surfaces in Montesinos knot complements", "ppcd"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "closed-form surface counts for a genus range");
    std::string range;
    std::string format = "table";
    count->add_option("--genus", range, "A..B or a single genus")->required();
    count->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* verify = app.add_subcommand("verify", "brute force against the closed forms");
    int max_genus = 0;
    int partitions = 1;
    bool with_superposition = false;
    bool force = false;
    verify->add_option("--max-genus", max_genus)->required();
    verify->add_option("--partitions", partitions)->check(CLI::PositiveNumber);
    verify->add_flag("--with-superposition", with_superposition);
    verify->add_flag("--force", force, "allow a genus beyond the default budget");

    auto* construct = app.add_subcommand("construct", "structural diagram for a longest-chord location");
    int genus = 0;
    int region = 0;
    int offset = 0;
    construct->add_option("--genus", genus)->required();
    construct->add_option("--region", region)->required();
    construct->add_option("--offset", offset)->required();

    auto* enumerate = app.add_subcommand("enumerate", "every valid diagram of a genus");
    bool connected_only = false;
    enumerate->add_option("--genus", genus)->required();
    enumerate->add_flag("--connected-only", connected_only);
    enumerate->add_option("--partitions", partitions)->check(CLI::PositiveNumber);

    auto* dual = app.add_subcommand("dual-tree", "dual tree of a diagram");
    std::string input;
    bool dot = false;
    dual->add_option("--input", input)->required();
    dual->add_flag("--dot", dot, "Graphviz instead of JSON");

    auto* tubing = app.add_subcommand("tubing", "tubing description of a diagram");
    int sc = 0;
    tubing->add_option("--input", input)->required();
    tubing->add_option("--sc", sc)->required()->check(CLI::IsMember({0, 1}));

    auto* superpose = app.add_subcommand("superpose", "overlay two diagrams and classify the faces");
    std::string first;
    std::string second;
    superpose->add_option("--a", first)->required();
    superpose->add_option("--b", second)->required();

    auto* gf = app.add_subcommand("gf", "coefficients of B_M next to the published counts");
    int terms = 0;
    gf->add_option("--terms", terms)->required()->check(CLI::PositiveNumber);
    gf->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*count) {
            const auto [lo, hi] = parse_range(range);
            const CountReport report = sequence_report(hi, 0, lo);
            if (format == "json") {
                out << count_rows_json(report).dump() << '\n';
            } else {
                out << count_table(report);
            }
        } else if (*verify) {
            if (max_genus < 2) throw Invalid("--max-genus must be at least 2");
            if (max_genus > kVerifyBudget && !force) {
                throw Invalid("--max-genus " + std::to_string(max_genus) + " exceeds the budget of " +
                              std::to_string(kVerifyBudget) + "; pass --force to run it anyway");
            }
            Verifier v(out, partitions);
            v.genus_two();
            for (int g = 3; g <= max_genus; ++g) v.genus(g);
            if (with_superposition) {
                for (int g = 3; g <= std::min(max_genus, 4); ++g) v.superposition(g);
            }
            return v.passed() ? kExitOk : kExitMismatch;
        } else if (*construct) {
            out << to_json(build_structural(Genus(genus), region, offset)).dump() << '\n';
        } else if (*enumerate) {
            const Genus g(genus);
            out << diagram_lines(connected_only ? enumerate_connected(g, partitions) : enumerate_wellformed(g, partitions));
        } else if (*dual) {
            const DualTree t = build_dual_tree(load(input));
            out << (dot ? to_dot(t) : to_json(t).dump(2) + "\n");
        } else if (*tubing) {
            out << to_json(build_tubing(load(input), sc)).dump(2) << '\n';
        } else if (*superpose) {
            out << face_report_json(reduce_bigons(superimpose(load(first), load(second)))).dump(2) << '\n';
        } else if (*gf) {
            const auto coefficients = gf_expand(bm_generating_function(), terms);
            out << (format == "json" ? gf_json(coefficients).dump(2) + "\n" : gf_table(coefficients));
        }
    } catch (const Invalid& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace ppcd
