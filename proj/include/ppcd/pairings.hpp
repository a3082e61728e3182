#pragma once

// Interval pairings on [1, n] and the orbits of the pseudogroup they
// generate. Orbits decide how many components the surface described by a
// diagram has.

#include <span>
#include <vector>

#include "ppcd/diagram.hpp"

namespace ppcd {

enum class Orientation { Preserving, Reversing };

struct Interval {
    int lo = 1;
    int hi = 1;

    int size() const noexcept { return hi - lo + 1; }
    bool contains(int x) const noexcept { return lo <= x && x <= hi; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// A bijection between two integer intervals of equal length that is either
// increasing or decreasing.
class Pairing {
public:
    Pairing(Interval domain, Interval codomain, Orientation orientation);

    Interval domain() const noexcept { return domain_; }
    Interval codomain() const noexcept { return codomain_; }
    Orientation orientation() const noexcept { return orientation_; }

    int operator()(int x) const;
    Pairing inverse() const;

private:
    Interval domain_;
    Interval codomain_;
    Orientation orientation_;
};

class DisjointSets {
public:
    explicit DisjointSets(int size);

    int find(int x);
    bool unite(int x, int y);
    int size() const noexcept { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

// Partition of [1, n]; classes are sorted internally and ordered by their
// smallest element.
struct OrbitPartition {
    int n = 0;
    std::vector<std::vector<int>> classes;

    std::size_t count() const noexcept { return classes.size(); }
    friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

OrbitPartition orbits(std::span<const Pairing> pairings, int n);

// The three orientation-reversing pairings behind the gcd criterion, on
// two rows of n = u + v base points: [1, n] and [n+1, 2n]. One sends
// [1, n] onto the second row, the other two send [1, u] and [u+1, n] onto
// its first u and last v points. Orbits on [1, 2n]: gcd(u, v).
std::vector<Pairing> reflection_pairings(int u, int v);

// Components of the described surface as a partition of the sphere indices
// [1, g-1]: each chord identifies the spheres of its two endpoints.
OrbitPartition sc_components(const Diagram& d);
bool is_connected(const Diagram& d);

// With v = p+1 and u = g-2-p, the surface built at offset p is connected
// exactly when gcd(u, v) = 1.
bool gcd_connected(Genus g, int offset);

}  // namespace ppcd
