#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "persistence.hpp"
#include "rational.hpp"

namespace cliqph {

/// One matched pair of a bottleneck matching. An empty side means the point
/// on the other side was sent to the diagonal.
struct MatchedPair {
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
    Coord cost;
};

struct BottleneckResult {
    Coord distance;
    std::vector<MatchedPair> matching;
};

namespace detail {

/// Maximum bipartite matching (Hopcroft-Karp) on an implicit graph.
class BipartiteMatcher {
public:
    template <typename Adjacent>
    BipartiteMatcher(std::size_t left, std::size_t right, Adjacent&& adjacent)
        : adj_(left), match_left_(left, none), match_right_(right, none), layer_(left) {
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < right; ++r)
                if (adjacent(l, r)) adj_[l].push_back(r);
    }

    std::size_t solve() {
        std::size_t size = 0;
        while (bfs())
            for (std::size_t l = 0; l < adj_.size(); ++l)
                if (match_left_[l] == none && dfs(l)) ++size;
        return size;
    }

    [[nodiscard]] std::size_t partner_of_left(std::size_t l) const { return match_left_[l]; }
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_, match_right_, layer_;

    bool bfs() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            layer_[l] = match_left_[l] == none ? 0 : none;
            if (layer_[l] == 0) q.push(l);
        }
        while (!q.empty()) {
            auto l = q.front();
            q.pop();
            for (auto r : adj_[l]) {
                auto next = match_right_[r];
                if (next == none) found = true;
                else if (layer_[next] == none) {
                    layer_[next] = layer_[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t l) {
        for (auto r : adj_[l]) {
            auto next = match_right_[r];
            if (next == none || (layer_[next] == layer_[l] + 1 && dfs(next))) {
                match_left_[l] = r;
                match_right_[r] = l;
                return true;
            }
        }
        layer_[l] = none;
        return false;
    }
};

inline Rational linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(abs(a.birth.value() - b.birth.value()), abs(a.death.value() - b.death.value()));
}

inline Rational diagonal_cost(const DiagramPoint& a) { return a.persistence() / Rational(2); }

}  // namespace detail

/// Bottleneck distance with diagonal augmentation. Essential points are
/// matched among themselves in sorted birth order; differing essential counts
/// give an infinite distance. The finite part is exact: binary search over the
/// candidate costs with a perfect-matching feasibility test.
inline BottleneckResult bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    if (d1.dimension != d2.dimension || d1.direction != d2.direction)
        throw std::domain_error("bottleneck_distance: diagrams differ in dimension or convention");

    std::vector<std::size_t> fin1, fin2, ess1, ess2;
    for (std::size_t i = 0; i < d1.points.size(); ++i) (d1.points[i].is_essential() ? ess1 : fin1).push_back(i);
    for (std::size_t i = 0; i < d2.points.size(); ++i) (d2.points[i].is_essential() ? ess2 : fin2).push_back(i);

    BottleneckResult result;
    if (ess1.size() != ess2.size()) {
        result.distance = Coord::infinite();
        return result;
    }
    auto by_birth = [](const PersistenceDiagram& d) {
        return [&d](std::size_t a, std::size_t b) { return d.points[a].birth < d.points[b].birth; };
    };
    std::sort(ess1.begin(), ess1.end(), by_birth(d1));
    std::sort(ess2.begin(), ess2.end(), by_birth(d2));
    Rational worst(0);
    for (std::size_t k = 0; k < ess1.size(); ++k) {
        Rational c = abs(d1.points[ess1[k]].birth.value() - d2.points[ess2[k]].birth.value());
        worst = std::max(worst, c);
        result.matching.push_back({ess1[k], ess2[k], c});
    }

    const std::size_t n = fin1.size(), m = fin2.size();
    auto pt1 = [&](std::size_t i) -> const DiagramPoint& { return d1.points[fin1[i]]; };
    auto pt2 = [&](std::size_t j) -> const DiagramPoint& { return d2.points[fin2[j]]; };

    // Left: n real points of d1, then m diagonal slots for d2.
    // Right: m real points of d2, then n diagonal slots for d1.
    auto adjacent_at = [&](const Rational& t) {
        return [&, t](std::size_t l, std::size_t r) {
            if (l < n && r < m) return detail::linf(pt1(l), pt2(r)) <= t;
            if (l < n) return r - m == l && detail::diagonal_cost(pt1(l)) <= t;
            if (r < m) return l - n == r && detail::diagonal_cost(pt2(r)) <= t;
            return true;
        };
    };
    auto feasible = [&](const Rational& t) {
        detail::BipartiteMatcher bm(n + m, n + m, adjacent_at(t));
        return bm.solve() == n + m;
    };

    if (n + m > 0) {
        std::vector<Rational> candidates{Rational(0)};
        for (std::size_t i = 0; i < n; ++i) {
            candidates.push_back(detail::diagonal_cost(pt1(i)));
            for (std::size_t j = 0; j < m; ++j) candidates.push_back(detail::linf(pt1(i), pt2(j)));
        }
        for (std::size_t j = 0; j < m; ++j) candidates.push_back(detail::diagonal_cost(pt2(j)));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::size_t lo = 0, hi = candidates.size() - 1;
        if (!feasible(candidates[hi])) throw std::logic_error("bottleneck: largest candidate infeasible");
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (feasible(candidates[mid])) hi = mid;
            else lo = mid + 1;
        }
        const Rational best = candidates[lo];
        if (lo > 0 && feasible(candidates[lo - 1]))
            throw std::logic_error("bottleneck: feasibility not monotone in the threshold");
        worst = std::max(worst, best);

        detail::BipartiteMatcher bm(n + m, n + m, adjacent_at(best));
        bm.solve();
        for (std::size_t l = 0; l < n + m; ++l) {
            const std::size_t r = bm.partner_of_left(l);
            if (l < n && r < m) result.matching.push_back({fin1[l], fin2[r], detail::linf(pt1(l), pt2(r))});
            else if (l < n) result.matching.push_back({fin1[l], std::nullopt, detail::diagonal_cost(pt1(l))});
            else if (r < m) result.matching.push_back({std::nullopt, fin2[r], detail::diagonal_cost(pt2(r))});
        }
    }
    result.distance = worst;
    return result;
}

}  // namespace cliqph
