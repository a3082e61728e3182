#pragma once

// Closed-form surface counts, the small arithmetic behind them, and power
// series expansion of rational generating functions.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ppcd/diagram.hpp"

namespace ppcd {

// A Montesinos knot given by its tangle slopes p/q.
struct KnotSpec {
    std::vector<std::pair<int, int>> slopes;

    int tangles() const noexcept { return static_cast<int>(slopes.size()); }
};

// Surfaces of genus g in the complement of a knot with four tangles, all
// q_i >= 3: 12 for g = 2 and 8 phi(g-1) after that.
std::int64_t surface_count(Genus g);
std::int64_t surface_count(const KnotSpec& knot, Genus g);

std::int64_t euler_totient(std::int64_t n);

// Incompressible 4-punctured spheres for k rational tangles.
std::int64_t sc_curve_count(int k);

int spheres_for_genus(Genus g);
int euler_char(int spheres);

// Coefficients in ascending powers of x.
struct RationalGF {
    std::vector<std::int64_t> numerator;
    std::vector<std::int64_t> denominator;
};

// Long division. The integer version needs a denominator starting with +-1.
std::vector<std::int64_t> gf_expand(const RationalGF& f, int terms);
std::vector<boost::rational<std::int64_t>> gf_expand_rational(const RationalGF& f, int terms);

// (-2x^4 + 8x^3 - 10x^2 + 12x) / (1 - x)^4
RationalGF bm_generating_function();

// Published counts for g = 2..21 of the (4,3,3,3) pretzel knot.
const std::vector<std::int64_t>& published_counts();
std::optional<std::int64_t> published_count(int g);

struct CountRow {
    int g = 0;
    std::int64_t closed_form = 0;
    std::optional<std::int64_t> published;
    std::optional<std::int64_t> enumerated;  // twice the connected diagram count
    std::optional<std::int64_t> bm_coefficient;  // c_{g-1}
    bool published_match = true;
    bool enumerated_match = true;
    bool bm_match = false;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountReport {
    int min_genus = 2;
    std::vector<CountRow> rows;

    // Closed form against the published and enumerated columns; the
    // generating-function column is reported but never part of this verdict.
    bool consistent() const;
};

// Rows for g in [min_g, max_g]. Enumeration runs for g <= enumerate_through
// (0 disables it); the B_M column is filled for every row.
CountReport sequence_report(int max_g, int enumerate_through = 0, int min_g = 2);

}  // namespace ppcd
