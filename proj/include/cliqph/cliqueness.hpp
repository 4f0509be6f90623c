#pragma once

#include <algorithm>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace cliqph {

struct WeightedEdge {
    Vertex u;  // u < v
    Vertex v;
    Rational weight;
};

struct WeightedNeighbor {
    Vertex vertex;
    Rational weight;
};

/// Sparse view of a complete weighted graph: pairs that are not stored have
/// weight zero. Every stored weight lies in (0, 1].
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges) : adjacency_(n), edges_(std::move(edges)) {
        for (auto& e : edges_) {
            if (e.u == e.v || e.u >= n || e.v >= n) throw std::invalid_argument("invalid weighted edge");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.weight <= Rational(0) || e.weight > Rational(1))
                throw std::invalid_argument("weighted edge outside (0, 1]");
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const WeightedEdge& a, const WeightedEdge& b) { return Edge{a.u, a.v} < Edge{b.u, b.v}; });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw std::invalid_argument("duplicate weighted edge");
        for (const auto& e : edges_) {
            adjacency_[e.u].push_back({e.v, e.weight});
            adjacency_[e.v].push_back({e.u, e.weight});
        }
        for (auto& nbrs : adjacency_)
            std::sort(nbrs.begin(), nbrs.end(), [](auto& a, auto& b) { return a.vertex < b.vertex; });
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const WeightedNeighbor> neighbors(Vertex v) const {
        if (v >= adjacency_.size()) throw std::domain_error("unknown vertex id " + std::to_string(v));
        return adjacency_[v];
    }

    /// Weight of the pair, zero when it is not stored.
    [[nodiscard]] Rational weight(Vertex u, Vertex v) const {
        auto nbrs = neighbors(u);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                                   [](const WeightedNeighbor& n, Vertex x) { return n.vertex < x; });
        return (it != nbrs.end() && it->vertex == v) ? it->weight : Rational(0);
    }

private:
    std::vector<std::vector<WeightedNeighbor>> adjacency_;
    std::vector<WeightedEdge> edges_;
};

/// Jaccard index of the closed neighbourhoods of u and v.
inline Rational cliqueness_weight(const UnweightedGraph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::domain_error("cliqueness_weight requires two distinct vertices");
    auto nu = closed_neighborhood(g, u).members;
    auto nv = closed_neighborhood(g, v).members;
    std::size_t common = 0;
    for (auto a = nu.begin(), b = nv.begin(); a != nu.end() && b != nv.end();) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else { ++common; ++a; ++b; }
    }
    const auto total = nu.size() + nv.size() - common;
    return Rational(static_cast<std::int64_t>(common), static_cast<std::int64_t>(total));
}

/// Maps g to its cliqueness-weighted graph on the same vertex ids, keeping
/// only pairs with positive weight. Such pairs are at hop distance <= 2, so
/// candidates are found through neighbours of neighbours. Isolated vertices
/// have no positive pair and stay edgeless.
inline WeightedGraph cliqueness_map(const UnweightedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint32_t> common(n, 0);
    std::vector<Vertex> touched;
    std::vector<WeightedEdge> out;
    for (Vertex u = 0; u < n; ++u) {
        auto closed_u = closed_neighborhood(g, u).members;
        for (Vertex x : closed_u) {
            // w ranges over the closed neighbourhood of x; x in N[u] ∩ N[w].
            auto count = [&](Vertex w) {
                if (w <= u) return;
                if (common[w]++ == 0) touched.push_back(w);
            };
            count(x);
            for (Vertex w : g.neighbors(x)) count(w);
        }
        std::sort(touched.begin(), touched.end());
        for (Vertex w : touched) {
            const auto c = static_cast<std::int64_t>(common[w]);
            const auto total = static_cast<std::int64_t>(closed_u.size() + g.degree(w) + 1) - c;
            out.push_back({u, w, Rational(c, total)});
            common[w] = 0;
        }
        touched.clear();
    }
    return WeightedGraph(n, std::move(out));
}

/// Max over all vertex pairs of the absolute weight difference; unstored
/// pairs count as weight zero.
inline Rational distance_weighted(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.num_vertices() != b.num_vertices())
        throw std::domain_error("distance_weighted: graphs have different vertex sets");
    Rational best(0);
    const auto& ea = a.edges();
    const auto& eb = b.edges();
    auto key = [](const WeightedEdge& e) { return Edge{e.u, e.v}; };
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        Rational diff;
        if (j == eb.size() || (i < ea.size() && key(ea[i]) < key(eb[j]))) diff = ea[i++].weight;
        else if (i == ea.size() || key(eb[j]) < key(ea[i])) diff = eb[j++].weight;
        else diff = abs(ea[i++].weight - eb[j++].weight);
        best = std::max(best, diff);
    }
    return best;
}

/// CSV rows `u,v,numerator,denominator,weight`.
inline void write_weights_csv(std::ostream& out, const WeightedGraph& w, const UnweightedGraph* labels = nullptr) {
    out << "u,v,numerator,denominator,weight\n";
    for (const auto& e : w.edges()) {
        if (labels) out << labels->label(e.u) << ',' << labels->label(e.v);
        else out << e.u << ',' << e.v;
        out << ',' << e.weight.num() << ',' << e.weight.den() << ',' << e.weight.to_double() << '\n';
    }
}

}  // namespace cliqph
