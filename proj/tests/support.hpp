#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <cliqph/cliqph.hpp>

namespace support {

/// Erdos-Renyi style graph with n drawn from [n_min, n_max] and a random density.
inline cliqph::UnweightedGraph random_graph(std::uint64_t seed, std::size_t n_min, std::size_t n_max,
                                            double p_lo = 0.1, double p_hi = 0.7) {
    cliqph::Rng rng(seed, "test-graph");
    const auto n = n_min + rng.below(n_max - n_min + 1);
    const double p = p_lo + (p_hi - p_lo) * rng.uniform();
    std::vector<cliqph::Edge> e;
    for (cliqph::Vertex u = 0; u < n; ++u)
        for (cliqph::Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) e.push_back({u, v});
    return cliqph::UnweightedGraph(n, e);
}

inline cliqph::UnweightedGraph relabel(const cliqph::UnweightedGraph& g, std::uint64_t seed) {
    std::vector<cliqph::Vertex> perm(g.num_vertices());
    for (cliqph::Vertex i = 0; i < perm.size(); ++i) perm[i] = i;
    cliqph::Rng rng(seed, "permutation");
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<cliqph::Edge> e;
    for (auto x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
    return cliqph::UnweightedGraph(g.num_vertices(), e);
}

inline cliqph::UnweightedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return cliqph::load_edge_list(in).graph;
}

inline cliqph::Coord q(std::int64_t n, std::int64_t d = 1) { return cliqph::Coord(cliqph::Rational(n, d)); }
inline cliqph::Coord inf() { return cliqph::Coord::infinite(); }

using Points = std::vector<std::pair<cliqph::Coord, cliqph::Coord>>;

inline Points sorted(Points p) {
    std::sort(p.begin(), p.end());
    return p;
}

inline cliqph::PersistenceDiagram diagram(std::size_t dim, cliqph::Direction dir, const Points& pts) {
    cliqph::PersistenceDiagram d;
    d.dimension = dim;
    d.direction = dir;
    d.kind = dir == cliqph::Direction::Descending ? cliqph::FiltrationKind::Cliqueness : cliqph::FiltrationKind::Clique;
    for (std::size_t i = 0; i < pts.size(); ++i) d.points.push_back({pts[i].first, pts[i].second, i, std::nullopt});
    return d;
}

}  // namespace support
