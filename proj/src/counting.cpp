#include "ppcd/counting.hpp"

#include <cstdlib>

#include "ppcd/enumeration.hpp"

namespace ppcd {

std::int64_t euler_totient(std::int64_t n) {
    if (n < 1) throw Error(Errc::NonPositive, "totient of " + std::to_string(n));
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::int64_t surface_count(Genus g) {
    if (g.value() == 2) return 12;
    return 8 * euler_totient(g.value() - 1);
}

std::int64_t surface_count(const KnotSpec& knot, Genus g) {
    if (knot.tangles() != 4) {
        throw Error(Errc::RangeViolation, "closed form holds for 4 tangles, got " + std::to_string(knot.tangles()));
    }
    for (auto [p, q] : knot.slopes) {
        if (std::abs(q) < 3) {
            throw Error(Errc::RangeViolation, "tangle " + std::to_string(p) + "/" + std::to_string(q) + " has |q| < 3");
        }
    }
    return surface_count(g);
}

std::int64_t sc_curve_count(int k) {
    if (k <= 3) throw Error(Errc::TooFewTangles, "need more than 3 tangles, got " + std::to_string(k));
    return static_cast<std::int64_t>(k) * (k - 3) / 2;
}

int spheres_for_genus(Genus g) { return g.value() - 1; }

int euler_char(int spheres) { return -2 * spheres; }

namespace {

void require_den(const RationalGF& f) {
    if (f.denominator.empty() || f.denominator.front() == 0) {
        throw Error(Errc::NotExpandable, "denominator has zero constant term");
    }
}

std::int64_t coeff(const std::vector<std::int64_t>& v, int k) {
    return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0;
}

}  // namespace

std::vector<std::int64_t> gf_expand(const RationalGF& f, int terms) {
    require_den(f);
    const std::int64_t d0 = f.denominator.front();
    if (d0 != 1 && d0 != -1) {
        throw Error(Errc::NotExpandable, "denominator constant term " + std::to_string(d0) + " is not a unit");
    }
    std::vector<std::int64_t> c;
    for (int k = 0; k < terms; ++k) {
        std::int64_t acc = coeff(f.numerator, k);
        for (int j = 1; j <= k; ++j) acc -= coeff(f.denominator, j) * c[static_cast<std::size_t>(k - j)];
        c.push_back(acc * d0);
    }
    return c;
}

std::vector<boost::rational<std::int64_t>> gf_expand_rational(const RationalGF& f, int terms) {
    require_den(f);
    using Q = boost::rational<std::int64_t>;
    std::vector<Q> c;
    for (int k = 0; k < terms; ++k) {
        Q acc = coeff(f.numerator, k);
        for (int j = 1; j <= k; ++j) acc -= Q(coeff(f.denominator, j)) * c[static_cast<std::size_t>(k - j)];
        c.push_back(acc / f.denominator.front());
    }
    return c;
}

RationalGF bm_generating_function() { return RationalGF{{0, 12, -10, 8, -2}, {1, -4, 6, -4, 1}}; }

const std::vector<std::int64_t>& published_counts() {
    static const std::vector<std::int64_t> counts{12, 8,  16, 16, 32, 16, 48, 32,  48, 32,
                                                  80, 32, 96, 48, 64, 64, 128, 48, 144, 64};
    return counts;
}

std::optional<std::int64_t> published_count(int g) {
    const auto& counts = published_counts();
    if (g < 2 || g - 2 >= static_cast<int>(counts.size())) return std::nullopt;
    return counts[static_cast<std::size_t>(g - 2)];
}

bool CountReport::consistent() const {
    for (const CountRow& row : rows) {
        if (!row.published_match || !row.enumerated_match) return false;
    }
    return true;
}

CountReport sequence_report(int max_g, int enumerate_through, int min_g) {
    if (min_g < 2 || max_g < min_g) {
        throw Error(Errc::GenusTooSmall, "report range must satisfy 2 <= min <= max");
    }
    const std::vector<std::int64_t> bm = gf_expand(bm_generating_function(), max_g);
    CountReport report;
    report.min_genus = min_g;
    for (int g = min_g; g <= max_g; ++g) {
        CountRow row;
        row.g = g;
        row.closed_form = surface_count(Genus(g));
        row.published = published_count(g);
        if (row.published) row.published_match = *row.published == row.closed_form;
        if (g <= enumerate_through) {
            row.enumerated = 2 * static_cast<std::int64_t>(enumerate_connected(Genus(g)).size());
            row.enumerated_match = *row.enumerated == row.closed_form;
        }
        row.bm_coefficient = bm[static_cast<std::size_t>(g - 1)];
        row.bm_match = row.published && *row.published == *row.bm_coefficient;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace ppcd
