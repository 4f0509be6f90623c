#pragma once

#include <algorithm>
#include <vector>

#include "persistence.hpp"
#include "rational.hpp"

namespace cliqph {

/// Persistence of every finite point, sorted ascending.
inline std::vector<Rational> finite_persistences(const PersistenceDiagram& d) {
    std::vector<Rational> out;
    for (const auto& p : d.points)
        if (!p.is_essential()) out.push_back(p.persistence());
    std::sort(out.begin(), out.end());
    return out;
}

/// Median of the finite persistences (mean of the middle two for even counts).
inline Rational median_persistence(const PersistenceDiagram& d) {
    auto v = finite_persistences(d);
    if (v.empty()) return Rational(0);
    const auto m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / Rational(2);
}

/// Finite points whose persistence exceeds factor times the median.
inline std::size_t count_above_median(const PersistenceDiagram& d, const Rational& factor) {
    const Rational cut = median_persistence(d) * factor;
    auto v = finite_persistences(d);
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const Rational& x) { return x > cut; }));
}

/// Points with persistence at least the threshold; essential points always count.
inline std::size_t count_at_least(const PersistenceDiagram& d, const Rational& threshold) {
    return static_cast<std::size_t>(std::count_if(d.points.begin(), d.points.end(), [&](const auto& p) {
        return p.is_essential() || p.persistence() >= threshold;
    }));
}

}  // namespace cliqph
