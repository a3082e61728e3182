#pragma once

// Exhaustive generation of non-crossing perfect matchings and of every valid
// diagram built on them. This is the brute-force side of the structural
// cross-check, so it shares nothing with structure.cpp beyond the validity
// predicates in diagram.hpp.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

std::uint64_t catalan(int m);

// Visits matchings on 2m points as partner arrays (partner[x] is the point x
// is joined to). Point 0 is matched first, to 1, 3, 5, ... in that order, and
// the two enclosed/remaining intervals are filled recursively.
using MatchingVisitor = std::function<void(std::span<const int> partner)>;

void for_each_noncrossing_matching(int m, const MatchingVisitor& visit);

// Only the matchings in which point 0 is joined to `first_partner`. The
// partitions for first_partner = 1, 3, ..., 2m-1 are disjoint and together
// cover the full stream.
void for_each_noncrossing_matching(int m, int first_partner, const MatchingVisitor& visit);

std::vector<Matching> noncrossing_matchings(int m);

// Every (matching, puncture face) pair passing validate, each isotopy class
// once, sorted by canonical key. `partitions` spreads the first-partner
// sub-streams over worker threads; the result does not depend on it.
std::vector<Diagram> enumerate_wellformed(Genus g, int partitions = 1);
std::vector<Diagram> enumerate_connected(Genus g, int partitions = 1);

struct EnumerationReport {
    int genus = 0;
    std::uint64_t total_matchings = 0;
    std::uint64_t candidates = 0;  // matchings times faces per matching
    std::uint64_t wellformed_count = 0;
    std::uint64_t connected_count = 0;
    std::uint64_t admissible_count = 0;
    std::uint64_t structural_count = 0;
    bool structural_set_equal = false;
    std::vector<std::string> witnesses;  // keys present on one side only
};

EnumerationReport crosscheck_structural(Genus g, int partitions = 1);

}  // namespace ppcd
