#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace cliqph {

/// Seeded 64-bit generator. Streams for different purposes are derived from
/// the user seed with splitmix64, so each purpose sees an independent,
/// platform-stable sequence. Conversions to doubles and bounded integers are
/// done here rather than with <random> distributions, whose output differs
/// between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::string_view stream = "") : engine_(derive(seed, stream)) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }
    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::domain_error("Rng::below(0)");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = next(); while (x >= limit);
        return x % bound;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;

    static std::uint64_t derive(std::uint64_t seed, std::string_view stream) {
        std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a of the stream name
        for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
        return splitmix64(splitmix64(seed) ^ h);
    }
};

struct SbmSpec {
    std::vector<std::size_t> block_sizes;
    double p_in = 0.3;
    double p_out = 0.005;
    std::uint64_t seed = 0;
};

/// Defaults used for the four-community experiments: 4 blocks of 75.
inline SbmSpec default_sbm_spec(std::uint64_t seed) { return {{75, 75, 75, 75}, 0.3, 0.005, seed}; }

inline UnweightedGraph sample_sbm(const SbmSpec& spec) {
    if (spec.block_sizes.empty()) throw std::domain_error("SBM needs at least one block");
    if (spec.p_in < 0 || spec.p_in > 1 || spec.p_out < 0 || spec.p_out > 1)
        throw std::domain_error("SBM probabilities must lie in [0, 1]");
    std::vector<std::size_t> block;
    for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
        if (spec.block_sizes[b] == 0) throw std::domain_error("SBM block sizes must be positive");
        block.insert(block.end(), spec.block_sizes[b], b);
    }
    Rng rng(spec.seed, "sbm-edges");
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(block.size());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(block[u] == block[v] ? spec.p_in : spec.p_out)) edges.push_back({u, v});
    return UnweightedGraph(n, edges);
}

struct CircleRggSpec {
    std::size_t n = 200;
    double radius = 0.25;
    std::uint64_t seed = 0;
};

struct EmbeddedGraph {
    UnweightedGraph graph;
    std::vector<std::pair<double, double>> coordinates;
};

/// n uniform points on the unit circle, joined when their Euclidean (chord)
/// distance is at most the radius.
inline EmbeddedGraph sample_circle_rgg(const CircleRggSpec& spec) {
    if (spec.n < 1) throw std::domain_error("RGG needs n >= 1");
    if (!(spec.radius > 0)) throw std::domain_error("RGG radius must be positive");
    Rng rng(spec.seed, "rgg-placement");
    EmbeddedGraph out;
    out.coordinates.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        out.coordinates.emplace_back(std::cos(angle), std::sin(angle));
    }
    std::vector<Edge> edges;
    const double r2 = spec.radius * spec.radius;
    for (std::size_t u = 0; u < spec.n; ++u)
        for (std::size_t v = u + 1; v < spec.n; ++v) {
            const double dx = out.coordinates[u].first - out.coordinates[v].first;
            const double dy = out.coordinates[u].second - out.coordinates[v].second;
            if (dx * dx + dy * dy <= r2) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    out.graph = UnweightedGraph(spec.n, edges);
    return out;
}

/// Adds one uniformly chosen absent pair.
inline UnweightedGraph add_random_edge(const UnweightedGraph& g, std::uint64_t seed) {
    std::vector<Edge> absent;
    const auto n = static_cast<Vertex>(g.num_vertices());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) absent.push_back({u, v});
    if (absent.empty()) throw std::domain_error("add_random_edge: graph is complete");
    Rng rng(seed, "extra-edge");
    std::vector<Edge> edges = g.edges();
    edges.push_back(absent[rng.below(absent.size())]);
    return UnweightedGraph(g.num_vertices(), edges, g.labels());
}

/// Adds the pair if absent, removes it otherwise.
inline UnweightedGraph toggle_edge(const UnweightedGraph& g, Edge e) {
    if (e.u == e.v) throw std::domain_error("toggle_edge: self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    std::vector<Edge> edges;
    bool present = false;
    for (Edge x : g.edges()) {
        if (x == e) present = true;
        else edges.push_back(x);
    }
    if (!present) edges.push_back(e);
    return UnweightedGraph(g.num_vertices(), edges, g.labels());
}

namespace fixtures {

inline void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t k) {
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) edges.push_back({first + i, first + j});
}

inline UnweightedGraph single_clique(std::size_t k) {
    std::vector<Edge> e;
    add_clique(e, 0, k);
    return UnweightedGraph(k, e);
}

inline UnweightedGraph two_cliques(std::size_t k) {
    std::vector<Edge> e;
    add_clique(e, 0, k);
    add_clique(e, static_cast<Vertex>(k), k);
    return UnweightedGraph(2 * k, e);
}

/// Two k-cliques plus the bridge (k-1, k).
inline UnweightedGraph bridged_cliques(std::size_t k) {
    std::vector<Edge> e;
    add_clique(e, 0, k);
    add_clique(e, static_cast<Vertex>(k), k);
    e.push_back({static_cast<Vertex>(k - 1), static_cast<Vertex>(k)});
    return UnweightedGraph(2 * k, e);
}

/// Each vertex i joined to i±1..i±span around a cycle of n vertices.
inline UnweightedGraph dense_cycle(std::size_t n, std::size_t span) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 1; s <= span; ++s) {
            const auto j = static_cast<Vertex>((i + s) % n);
            if (j != i) e.push_back({static_cast<Vertex>(i), j});
        }
    return UnweightedGraph(n, e);
}

inline UnweightedGraph cycle(std::size_t n) { return dense_cycle(n, 1); }

/// dense_cycle plus the chord (0, n/2) across the cycle.
inline UnweightedGraph dense_cycle_with_chord(std::size_t n, std::size_t span) {
    auto base = dense_cycle(n, span);
    std::vector<Edge> e = base.edges();
    e.push_back({0, static_cast<Vertex>(n / 2)});
    return UnweightedGraph(n, e);
}

inline UnweightedGraph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return UnweightedGraph(n, e);
}

/// Top vertex 0 and bottom vertex 1 joined by four paths of length two
/// through vertices 2..5: three independent, never-filled loops.
inline UnweightedGraph fig4_a() {
    std::vector<Edge> e;
    for (Vertex m = 2; m <= 5; ++m) {
        e.push_back({0, m});
        e.push_back({m, 1});
    }
    return UnweightedGraph(6, e);
}

/// fig4_a plus the edge (0, 1), which splits the loops into four triangles.
inline UnweightedGraph fig4_b() {
    std::vector<Edge> e = fig4_a().edges();
    e.push_back({0, 1});
    return UnweightedGraph(6, e);
}

/// Two disjoint edges.
inline UnweightedGraph fig6_a() { return UnweightedGraph(4, {{0, 1}, {2, 3}}); }

/// fig6_a plus (1, 2): a path on four vertices.
inline UnweightedGraph fig6_b() { return UnweightedGraph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace fixtures

/// Builds a named fixture such as "single_clique(5)", "dense_cycle(12,2)" or
/// "fig4_a".
inline UnweightedGraph fixture(std::string_view spec) {
    std::string name(spec);
    std::vector<std::size_t> args;
    if (auto open = name.find('('); open != std::string::npos) {
        if (name.back() != ')') throw std::domain_error("malformed fixture '" + name + "'");
        std::string inner = name.substr(open + 1, name.size() - open - 2);
        name.resize(open);
        std::size_t pos = 0;
        while (pos < inner.size()) {
            auto comma = inner.find(',', pos);
            auto token = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                std::size_t used = 0;
                long long v = std::stoll(token, &used);
                if (v < 0 || token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
                args.push_back(static_cast<std::size_t>(v));
            } catch (const std::logic_error&) {
                throw std::domain_error("malformed fixture argument '" + token + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw std::domain_error("fixture '" + name + "' takes " + std::to_string(count) + " argument(s)");
    };
    using namespace fixtures;
    if (name == "single_clique") { need(1); return single_clique(args[0]); }
    if (name == "two_cliques") { need(1); return two_cliques(args[0]); }
    if (name == "bridged_cliques") {
        need(1);
        if (args[0] < 1) throw std::domain_error("bridged_cliques needs k >= 1");
        return bridged_cliques(args[0]);
    }
    if (name == "cycle") { need(1); return cycle(args[0]); }
    if (name == "path") { need(1); return path(args[0]); }
    if (name == "dense_cycle") { need(2); return dense_cycle(args[0], args[1]); }
    if (name == "dense_cycle_with_chord") { need(2); return dense_cycle_with_chord(args[0], args[1]); }
    if (name == "fig4_a") { need(0); return fig4_a(); }
    if (name == "fig4_b") { need(0); return fig4_b(); }
    if (name == "fig6_a") { need(0); return fig6_a(); }
    if (name == "fig6_b") { need(0); return fig6_b(); }
    throw std::domain_error("unknown fixture '" + name + "'");
}

}  // namespace cliqph
