#include "ppcd/enumeration.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <utility>

#include "ppcd/pairings.hpp"
#include "ppcd/structure.hpp"

namespace ppcd {

std::uint64_t catalan(int m) {
    if (m < 0) throw Error(Errc::RangeViolation, "catalan index must be non-negative");
    std::uint64_t c = 1;
    for (int k = 0; k < m; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
    return c;
}

namespace {

class MatchingGenerator {
public:
    MatchingGenerator(int points, const MatchingVisitor& visit)
        : partner_(static_cast<std::size_t>(points), -1), visit_(visit) {}

    void run_all() {
        pending_.emplace_back(0, static_cast<int>(partner_.size()));
        step();
    }

    void run_first(int first_partner) {
        const int n = static_cast<int>(partner_.size());
        join(0, first_partner);
        pending_.emplace_back(first_partner + 1, n);
        pending_.emplace_back(1, first_partner);
        step();
    }

private:
    void join(int x, int y) {
        partner_[static_cast<std::size_t>(x)] = y;
        partner_[static_cast<std::size_t>(y)] = x;
    }

    // pending_ holds half-open intervals still to be matched; the last one is
    // filled first.
    void step() {
        if (pending_.empty()) {
            visit_(partner_);
            return;
        }
        const auto [lo, hi] = pending_.back();
        pending_.pop_back();
        if (lo == hi) {
            step();
        } else {
            for (int k = lo + 1; k < hi; k += 2) {
                join(lo, k);
                pending_.emplace_back(k + 1, hi);
                pending_.emplace_back(lo + 1, k);
                step();
                pending_.pop_back();
                pending_.pop_back();
            }
        }
        pending_.emplace_back(lo, hi);
    }

    std::vector<int> partner_;
    std::vector<std::pair<int, int>> pending_;
    const MatchingVisitor& visit_;
};

void require_positive(int m) {
    if (m < 1) throw Error(Errc::RangeViolation, "matchings need m >= 1");
}

}  // namespace

void for_each_noncrossing_matching(int m, const MatchingVisitor& visit) {
    require_positive(m);
    MatchingGenerator gen(2 * m, visit);
    gen.run_all();
}

void for_each_noncrossing_matching(int m, int first_partner, const MatchingVisitor& visit) {
    require_positive(m);
    if (first_partner < 1 || first_partner >= 2 * m || first_partner % 2 == 0) {
        throw Error(Errc::RangeViolation, "point 0 can only be joined to an odd point below " + std::to_string(2 * m));
    }
    MatchingGenerator gen(2 * m, visit);
    gen.run_first(first_partner);
}

std::vector<Matching> noncrossing_matchings(int m) {
    std::vector<Matching> out;
    for_each_noncrossing_matching(m, [&](std::span<const int> partner) {
        Matching chords;
        for (int x = 0; x < static_cast<int>(partner.size()); ++x) {
            const int y = partner[static_cast<std::size_t>(x)];
            if (y > x) chords.push_back(Chord{x, y});
        }
        out.push_back(std::move(chords));
    });
    return out;
}

namespace {

using Keyed = std::vector<std::pair<std::string, Diagram>>;

void collect_partition(Genus g, int first_partner, Keyed& out) {
    const int n = g.points();
    Matching chords;
    chords.reserve(static_cast<std::size_t>(g.chords()));
    for_each_noncrossing_matching(g.chords(), first_partner, [&](std::span<const int> partner) {
        chords.clear();
        for (int x = 0; x < n; ++x) {
            const int y = partner[static_cast<std::size_t>(x)];
            if (y > x) chords.push_back(Chord{x, y});
        }
        // One representative gap per face: each chord's first endpoint plus
        // the partner of point 0 for the outer face.
        auto try_face = [&](int gap) {
            for (Chord c : chords) {
                if (is_intra_region_isotopic(g, c, gap)) return;
            }
            Diagram d = validate(g, chords, gap);
            out.emplace_back(canonical_key(d), std::move(d));
        };
        for (Chord c : chords) try_face(c.a);
        try_face(partner[0]);
    });
}

}  // namespace

std::vector<Diagram> enumerate_wellformed(Genus g, int partitions) {
    const int n = g.points();
    std::vector<int> firsts;
    for (int k = 1; k < n; k += 2) firsts.push_back(k);
    const int workers = std::clamp(partitions, 1, static_cast<int>(firsts.size()));

    std::vector<Keyed> parts(static_cast<std::size_t>(workers));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t j = static_cast<std::size_t>(w); j < firsts.size(); j += static_cast<std::size_t>(workers)) {
                    collect_partition(g, firsts[j], parts[static_cast<std::size_t>(w)]);
                }
            });
        }
    }

    Keyed merged;
    for (auto& part : parts) {
        for (auto& item : part) merged.push_back(std::move(item));
    }
    std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Diagram> out;
    out.reserve(merged.size());
    for (auto& item : merged) out.push_back(std::move(item.second));
    return out;
}

std::vector<Diagram> enumerate_connected(Genus g, int partitions) {
    std::vector<Diagram> all = enumerate_wellformed(g, partitions);
    std::vector<Diagram> out;
    for (auto& d : all) {
        if (is_connected(d)) out.push_back(std::move(d));
    }
    return out;
}

EnumerationReport crosscheck_structural(Genus g, int partitions) {
    EnumerationReport report;
    report.genus = g.value();
    report.total_matchings = catalan(g.chords());
    report.candidates = report.total_matchings * static_cast<std::uint64_t>(g.chords() + 1);

    const std::vector<Diagram> wellformed = enumerate_wellformed(g, partitions);
    report.wellformed_count = wellformed.size();

    std::set<std::string> enumerated;
    for (const Diagram& d : wellformed) {
        if (!is_connected(d)) continue;
        ++report.connected_count;
        if (g.value() >= 3 && is_admissible(d)) ++report.admissible_count;
        enumerated.insert(canonical_key(d));
    }

    std::set<std::string> structural;
    for (const StructuralLocus& locus : valid_loci(g, true)) structural.insert(canonical_key(build_structural(locus)));
    report.structural_count = structural.size();

    for (const std::string& key : enumerated) {
        if (!structural.contains(key)) report.witnesses.push_back("enumerated-only " + key);
    }
    for (const std::string& key : structural) {
        if (!enumerated.contains(key)) report.witnesses.push_back("structural-only " + key);
    }
    report.structural_set_equal = report.witnesses.empty();
    return report;
}

}  // namespace ppcd
