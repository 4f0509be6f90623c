#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "rational.hpp"

namespace cliqph {

enum class FiltrationKind { Cliqueness, Clique, Power };

inline std::string_view to_string(FiltrationKind k) {
    switch (k) {
        case FiltrationKind::Cliqueness: return "cliqueness";
        case FiltrationKind::Clique: return "clique";
        case FiltrationKind::Power: return "power";
    }
    return "?";
}

inline FiltrationKind parse_filtration_kind(std::string_view s) {
    if (s == "cliqueness") return FiltrationKind::Cliqueness;
    if (s == "clique") return FiltrationKind::Clique;
    if (s == "power") return FiltrationKind::Power;
    throw std::invalid_argument("unknown filtration kind '" + std::string(s) + "'");
}

inline Direction direction_of(FiltrationKind k) {
    return k == FiltrationKind::Cliqueness ? Direction::Descending : Direction::Ascending;
}

/// Sparse Z/2 boundary matrix: column j lists the order indices of the
/// facets of simplex j, sorted ascending.
struct BoundaryMatrix {
    std::vector<std::vector<std::uint32_t>> columns;
    std::vector<std::uint32_t> dims;

    explicit BoundaryMatrix(const FilteredComplex& fc) : columns(fc.size()), dims(fc.size()) {
        if (fc.size() > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("complex too large");
        for (std::size_t j = 0; j < fc.size(); ++j) {
            const auto& s = fc.simplex(j);
            dims[j] = static_cast<std::uint32_t>(s.dimension());
            auto& col = columns[j];
            for (const auto& f : s.facets()) {
                auto i = fc.index_of(f);
                if (!i) throw std::logic_error("boundary: complex not closed under faces");
                if (*i >= j) throw std::logic_error("boundary: face does not precede coface");
                col.push_back(static_cast<std::uint32_t>(*i));
            }
            std::sort(col.begin(), col.end());
        }
    }
};

struct PersistencePair {
    std::size_t birth;  // order index of the creating simplex
    std::size_t death;  // order index of the destroying simplex
};

/// Result of the column reduction. `dims[k]` is the dimension of the class
/// created by simplex k (the simplex dimension).
struct Pairing {
    std::vector<PersistencePair> pairs;
    std::vector<std::size_t> essential;
    std::vector<std::uint32_t> dims;
};

/// Standard column reduction over Z/2. Columns are processed by decreasing
/// dimension so that columns already known to be pivots can be cleared; the
/// pairing is identical to plain left-to-right reduction.
inline Pairing reduce_and_pair(const FilteredComplex& fc) {
    BoundaryMatrix m(fc);
    const std::size_t n = m.columns.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> pivot_owner(n, none);  // low row -> column
    std::vector<char> cleared(n, 0);
    std::uint32_t top = 0;
    for (auto d : m.dims) top = std::max(top, d);

    std::vector<std::uint32_t> scratch;
    for (std::int64_t dim = top; dim >= 0; --dim) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.dims[j] != static_cast<std::uint32_t>(dim)) continue;
            auto& col = m.columns[j];
            if (cleared[j]) {
                col.clear();
                continue;
            }
            while (!col.empty()) {
                const std::size_t owner = pivot_owner[col.back()];
                if (owner == none) break;
                const auto& other = m.columns[owner];
                scratch.clear();
                std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                              std::back_inserter(scratch));
                col.swap(scratch);
            }
            if (!col.empty()) {
                pivot_owner[col.back()] = j;
                cleared[col.back()] = 1;
            }
        }
    }

    Pairing out;
    out.dims = m.dims;
    for (std::size_t j = 0; j < n; ++j) {
        if (!m.columns[j].empty()) {
            out.pairs.push_back({m.columns[j].back(), j});
        } else if (pivot_owner[j] == none) {
            out.essential.push_back(j);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) { return a.birth < b.birth; });
    return out;
}

struct DiagramPoint {
    Coord birth;
    Coord death;
    std::size_t birth_index = 0;
    std::optional<std::size_t> death_index;

    [[nodiscard]] bool is_essential() const noexcept { return death.is_infinite(); }
    /// |birth - death| for finite points.
    [[nodiscard]] Rational persistence() const { return abs(birth.value() - death.value()); }
};

/// Points of one homology dimension. Coordinates are filtration values; under
/// the descending convention births are >= deaths.
struct PersistenceDiagram {
    std::size_t dimension = 0;
    FiltrationKind kind = FiltrationKind::Cliqueness;
    Direction direction = Direction::Descending;
    std::vector<DiagramPoint> points;

    /// (birth, death) pairs sorted, ignoring simplex bookkeeping.
    [[nodiscard]] std::vector<std::pair<Coord, Coord>> coordinates() const {
        std::vector<std::pair<Coord, Coord>> out;
        out.reserve(points.size());
        for (const auto& p : points) out.emplace_back(p.birth, p.death);
        std::sort(out.begin(), out.end());
        return out;
    }
    [[nodiscard]] std::size_t essential_count() const {
        return static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [](const DiagramPoint& p) { return p.is_essential(); }));
    }
    /// Same dimension, convention and point multiset.
    [[nodiscard]] bool same_points(const PersistenceDiagram& other) const {
        return dimension == other.dimension && direction == other.direction && coordinates() == other.coordinates();
    }
};

inline PersistenceDiagram diagram_from_pairing(const FilteredComplex& fc, const Pairing& pairing, std::size_t p,
                                               FiltrationKind kind) {
    PersistenceDiagram d;
    d.dimension = p;
    d.kind = kind;
    d.direction = fc.direction();
    for (const auto& pr : pairing.pairs)
        if (pairing.dims[pr.birth] == p)
            d.points.push_back({fc.value(pr.birth), fc.value(pr.death), pr.birth, pr.death});
    for (auto b : pairing.essential)
        if (pairing.dims[b] == p) d.points.push_back({fc.value(b), Coord::infinite(), b, std::nullopt});
    std::sort(d.points.begin(), d.points.end(),
              [](const DiagramPoint& a, const DiagramPoint& b) { return a.birth_index < b.birth_index; });
    return d;
}

/// Post-processing of raw diagrams. For the cliqueness kind every essential
/// point gets death 0, except in dimension 0 the essential point of largest
/// birth (earliest simplex on ties). Other kinds keep essential points. With
/// drop_zero, points with birth == death are removed.
inline PersistenceDiagram finalize_diagram(PersistenceDiagram d, FiltrationKind kind, bool drop_zero) {
    if (kind == FiltrationKind::Cliqueness) {
        std::optional<std::size_t> keep;
        if (d.dimension == 0) {
            for (std::size_t i = 0; i < d.points.size(); ++i) {
                const auto& pt = d.points[i];
                if (!pt.is_essential()) continue;
                if (!keep) { keep = i; continue; }
                const auto& best = d.points[*keep];
                if (pt.birth > best.birth || (pt.birth == best.birth && pt.birth_index < best.birth_index)) keep = i;
            }
        }
        for (std::size_t i = 0; i < d.points.size(); ++i)
            if (d.points[i].is_essential() && (!keep || i != *keep)) d.points[i].death = Coord(0);
    }
    if (drop_zero)
        std::erase_if(d.points, [](const DiagramPoint& p) { return p.death.is_finite() && p.birth == p.death; });
    return d;
}

/// Betti numbers of the whole complex for dimensions 0..up_to.
inline std::vector<std::size_t> betti_numbers(const FilteredComplex& fc, std::size_t up_to) {
    auto pairing = reduce_and_pair(fc);
    std::vector<std::size_t> betti(up_to + 1, 0);
    for (auto b : pairing.essential)
        if (pairing.dims[b] <= up_to) ++betti[pairing.dims[b]];
    return betti;
}

}  // namespace cliqph
