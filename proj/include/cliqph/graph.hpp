#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cliqph {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for malformed edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built.
/// Adjacency lists are sorted, edges are canonical (u < v) and unique.
class UnweightedGraph {
public:
    UnweightedGraph() = default;

    /// Builds a graph on n vertices. Self-loops are dropped and duplicate or
    /// reversed pairs are merged; out-of-range endpoints throw.
    UnweightedGraph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {})
        : adjacency_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n)
            throw std::invalid_argument("label count does not match vertex count");
        edges_.reserve(edges.size());
        for (Edge e : edges) {
            if (e.u >= n || e.v >= n) throw std::out_of_range("edge endpoint outside vertex set");
            if (e.u == e.v) continue;
            edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (Edge e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    UnweightedGraph(std::size_t n, std::initializer_list<Edge> edges)
        : UnweightedGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] std::size_t num_vertices() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
        auto nbrs = neighbors(u);
        check_vertex(v);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }
    [[nodiscard]] bool has_vertex(Vertex v) const noexcept { return v < adjacency_.size(); }

    /// External label of v, or its decimal id when the graph carries no labels.
    [[nodiscard]] std::string label(Vertex v) const {
        check_vertex(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

    void check_vertex(Vertex v) const {
        if (v >= adjacency_.size())
            throw std::domain_error("unknown vertex id " + std::to_string(v));
    }

    friend bool operator==(const UnweightedGraph& a, const UnweightedGraph& b) {
        return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

struct LoadStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

struct LoadedGraph {
    UnweightedGraph graph;
    LoadStats stats;
};

/// Reads a whitespace-separated edge list. '#' lines and blank lines are
/// skipped; labels are mapped to dense ids in first-seen order.
inline LoadedGraph load_edge_list(std::istream& in) {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<Edge> raw;
    LoadStats stats;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty() || (fields >> extra))
            throw ParseError(lineno, "expected two vertex tokens, got '" + line + "'");
        Vertex u = intern(a);
        Vertex v = intern(b);
        if (u == v) {
            ++stats.self_loops_dropped;
            continue;
        }
        raw.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }
    std::size_t n = labels.size();
    UnweightedGraph g(n, raw, std::move(labels));
    stats.duplicates_dropped = raw.size() - g.num_edges();
    return {std::move(g), stats};
}

inline void write_edge_list(std::ostream& out, const UnweightedGraph& g) {
    for (Edge e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

/// Closed neighbourhood: v together with every vertex adjacent to v.
struct VertexNeighborhood {
    Vertex vertex;
    std::vector<Vertex> members;  // sorted
};

inline VertexNeighborhood closed_neighborhood(const UnweightedGraph& g, Vertex v) {
    auto nbrs = g.neighbors(v);
    VertexNeighborhood out{v, {}};
    out.members.reserve(nbrs.size() + 1);
    auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    out.members.insert(out.members.end(), nbrs.begin(), pos);
    out.members.push_back(v);
    out.members.insert(out.members.end(), pos, nbrs.end());
    return out;
}

/// A graph together with the original id of each of its vertices.
struct Subgraph {
    UnweightedGraph graph;
    std::vector<Vertex> original_id;
};

inline Subgraph induced_subgraph(const UnweightedGraph& g, std::span<const Vertex> keep) {
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> remap(g.num_vertices(), absent);
    std::vector<Vertex> original(keep.begin(), keep.end());
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    for (std::size_t i = 0; i < original.size(); ++i) {
        g.check_vertex(original[i]);
        remap[original[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Edge e : g.edges())
        if (remap[e.u] != absent && remap[e.v] != absent) edges.push_back({remap[e.u], remap[e.v]});
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (Vertex v : original) labels.push_back(g.label(v));
    return {UnweightedGraph(original.size(), edges, std::move(labels)), std::move(original)};
}

inline Subgraph remove_isolated_vertices(const UnweightedGraph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from source; unreachable vertices get `unreachable`.
inline std::vector<std::size_t> bfs_distances(const UnweightedGraph& g, Vertex source,
                                              std::size_t limit = unreachable) {
    std::vector<std::size_t> dist(g.num_vertices(), unreachable);
    std::queue<Vertex> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        if (dist[v] >= limit) continue;
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

/// Component label per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> connected_components(const UnweightedGraph& g, std::size_t* count = nullptr) {
    std::vector<std::size_t> comp(g.num_vertices(), unreachable);
    std::size_t next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] != unreachable) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (comp[w] == unreachable) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

inline Subgraph largest_connected_component(const UnweightedGraph& g) {
    std::size_t count = 0;
    auto comp = connected_components(g, &count);
    std::vector<std::size_t> sizes(count, 0);
    for (auto c : comp) ++sizes[c];
    if (count == 0) return {g, {}};
    auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (comp[v] == best) keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// Graph on the same vertices with u~v iff 1 <= dist(u, v) <= k.
inline UnweightedGraph graph_power(const UnweightedGraph& g, std::size_t k) {
    if (k < 1) throw std::domain_error("graph power requires k >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto dist = bfs_distances(g, u, k);
        for (Vertex v = u + 1; v < g.num_vertices(); ++v)
            if (dist[v] != unreachable && dist[v] <= k) edges.push_back({u, v});
    }
    return UnweightedGraph(g.num_vertices(), edges, g.labels());
}

struct Diameter {
    /// Empty when the graph is disconnected (the unbounded marker).
    std::optional<std::size_t> value;
    /// Largest finite shortest-path distance, i.e. the max over components.
    std::size_t max_component_diameter = 0;

    [[nodiscard]] bool unbounded() const noexcept { return !value.has_value(); }
};

inline Diameter diameter(const UnweightedGraph& g) {
    Diameter d;
    bool connected = true;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (std::size_t x : bfs_distances(g, u)) {
            if (x == unreachable) connected = false;
            else d.max_component_diameter = std::max(d.max_component_diameter, x);
        }
    }
    if (connected) d.value = d.max_component_diameter;
    return d;
}

/// Max over vertex pairs of the edge-indicator difference: 0 when the edge
/// sets agree, 1 otherwise.
inline int distance_unweighted(const UnweightedGraph& a, const UnweightedGraph& b) {
    if (a.num_vertices() != b.num_vertices())
        throw std::domain_error("distance_unweighted: graphs have different vertex sets");
    return a.edges() == b.edges() ? 0 : 1;
}

}  // namespace cliqph
