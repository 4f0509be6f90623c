#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cliqueness.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace cliqph {

/// Sorted, strictly increasing vertex set.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (vertices_.empty() || std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("simplex needs distinct vertices");
    }
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    [[nodiscard]] std::size_t dimension() const noexcept { return vertices_.size() - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
    [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }

    /// Codimension-1 faces, the i-th omitting vertex i.
    [[nodiscard]] std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        if (vertices_.size() < 2) return out;
        out.reserve(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            Simplex f;
            f.vertices_.reserve(vertices_.size() - 1);
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (j != i) f.vertices_.push_back(vertices_[j]);
            out.push_back(std::move(f));
        }
        return out;
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    std::vector<Vertex> vertices_;
    friend struct SimplexHash;
    template <typename G, typename F>
    friend void enumerate_cliques(const G&, std::size_t, F&&);
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (Vertex v : s.vertices_) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

namespace detail {
inline Vertex neighbor_id(Vertex v) { return v; }
inline Vertex neighbor_id(const WeightedNeighbor& n) { return n.vertex; }
}  // namespace detail

/// Calls emit(const Simplex&) once for every clique of 1..max_size vertices,
/// in lexicographic order. Each clique grows only by common neighbours larger
/// than its current maximum vertex.
template <typename G, typename F>
void enumerate_cliques(const G& graph, std::size_t max_size, F&& emit) {
    if (max_size < 1) throw std::domain_error("enumerate_cliques requires max_size >= 1");
    Simplex current;
    std::function<void(const std::vector<Vertex>&)> extend = [&](const std::vector<Vertex>& candidates) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Vertex c = candidates[i];
            current.vertices_.push_back(c);
            emit(static_cast<const Simplex&>(current));
            if (current.size() < max_size) {
                std::vector<Vertex> next;
                auto nbrs = graph.neighbors(c);
                auto it = nbrs.begin();
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    while (it != nbrs.end() && detail::neighbor_id(*it) < candidates[j]) ++it;
                    if (it == nbrs.end()) break;
                    if (detail::neighbor_id(*it) == candidates[j]) next.push_back(candidates[j]);
                }
                if (!next.empty()) extend(next);
            }
            current.vertices_.pop_back();
        }
    };
    std::vector<Vertex> all(graph.num_vertices());
    std::iota(all.begin(), all.end(), Vertex{0});
    // Top level: every vertex, candidates are its larger neighbours.
    for (Vertex v : all) {
        current.vertices_.assign(1, v);
        emit(static_cast<const Simplex&>(current));
        if (max_size > 1) {
            std::vector<Vertex> higher;
            for (const auto& n : graph.neighbors(v))
                if (detail::neighbor_id(n) > v) higher.push_back(detail::neighbor_id(n));
            extend(higher);
        }
    }
}

template <typename G>
std::vector<Simplex> collect_cliques(const G& graph, std::size_t max_size) {
    std::vector<Simplex> out;
    enumerate_cliques(graph, max_size, [&](const Simplex& s) { out.push_back(s); });
    return out;
}

/// Descending: values non-increasing along the order (cliqueness).
/// Ascending: values non-decreasing (clique and power filtrations).
enum class Direction { Descending, Ascending };

/// Simplices in filtration order with their values. Immutable once built.
class FilteredComplex {
public:
    FilteredComplex() = default;
    FilteredComplex(std::vector<Simplex> simplices, std::vector<Rational> values, Direction direction)
        : simplices_(std::move(simplices)), values_(std::move(values)), direction_(direction) {
        if (simplices_.size() != values_.size()) throw std::invalid_argument("simplex/value count mismatch");
        index_.reserve(simplices_.size());
        for (std::size_t i = 0; i < simplices_.size(); ++i)
            if (!index_.emplace(simplices_[i], i).second) throw std::invalid_argument("duplicate simplex");
    }

    [[nodiscard]] std::size_t size() const noexcept { return simplices_.size(); }
    [[nodiscard]] bool empty() const noexcept { return simplices_.empty(); }
    [[nodiscard]] const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }
    [[nodiscard]] const Rational& value(std::size_t i) const { return values_.at(i); }
    [[nodiscard]] const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
    [[nodiscard]] Direction direction() const noexcept { return direction_; }

    [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::size_t max_dimension() const {
        std::size_t d = 0;
        for (const auto& s : simplices_) d = std::max(d, s.dimension());
        return d;
    }

    /// Number of simplices per dimension.
    [[nodiscard]] std::vector<std::size_t> counts_by_dimension() const {
        std::vector<std::size_t> counts;
        for (const auto& s : simplices_) {
            if (counts.size() <= s.dimension()) counts.resize(s.dimension() + 1, 0);
            ++counts[s.dimension()];
        }
        return counts;
    }

    /// Throws std::logic_error unless the complex is closed, faces precede
    /// cofaces, and values are monotone in the recorded direction.
    void check_invariants() const {
        for (std::size_t i = 0; i < simplices_.size(); ++i) {
            if (i > 0) {
                bool ok = direction_ == Direction::Descending ? values_[i] <= values_[i - 1]
                                                              : values_[i] >= values_[i - 1];
                if (!ok) throw std::logic_error("filtration values not monotone along the order");
            }
            for (const auto& f : simplices_[i].facets()) {
                auto j = index_of(f);
                if (!j) throw std::logic_error("complex not closed under faces");
                if (*j >= i) throw std::logic_error("face does not precede coface");
            }
        }
    }

private:
    std::vector<Simplex> simplices_;
    std::vector<Rational> values_;
    Direction direction_ = Direction::Descending;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

/// Cliqueness filtration value: the minimum edge weight for a simplex of
/// dimension >= 1, the maximum incident edge weight for a vertex (zero when
/// it has none).
inline Rational filtration_value(const WeightedGraph& w, const Simplex& s) {
    if (s.dimension() == 0) {
        Rational best(0);
        for (const auto& n : w.neighbors(s[0])) best = std::max(best, n.weight);
        return best;
    }
    Rational lowest(1);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) lowest = std::min(lowest, w.weight(s[i], s[j]));
    return lowest;
}

namespace detail {
inline FilteredComplex sort_into_complex(std::vector<Simplex> simplices, std::vector<Rational> values,
                                         Direction direction) {
    std::vector<std::size_t> order(simplices.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b])
            return direction == Direction::Descending ? values[a] > values[b] : values[a] < values[b];
        if (simplices[a].size() != simplices[b].size()) return simplices[a].size() < simplices[b].size();
        return simplices[a] < simplices[b];
    });
    std::vector<Simplex> s;
    std::vector<Rational> v;
    s.reserve(order.size());
    v.reserve(order.size());
    for (auto i : order) {
        s.push_back(std::move(simplices[i]));
        v.push_back(values[i]);
    }
    return FilteredComplex(std::move(s), std::move(v), direction);
}
}  // namespace detail

/// Cliqueness filtration over the positive-weight pairs of w, holding every
/// simplex up to dimension max_dim + 1. Order: descending value, then
/// ascending dimension, then lexicographic vertex ids.
inline FilteredComplex build_filtered_complex(const WeightedGraph& w, std::size_t max_dim) {
    std::vector<Simplex> simplices;
    std::vector<Rational> values;
    enumerate_cliques(w, max_dim + 2, [&](const Simplex& s) {
        simplices.push_back(s);
        values.push_back(filtration_value(w, s));
    });
    return detail::sort_into_complex(std::move(simplices), std::move(values), Direction::Descending);
}

/// Same filtration function as above, evaluated on the clique complex of an
/// explicit support graph (pairs outside w read as weight zero). Used to put
/// two weightings on one common complex.
inline FilteredComplex build_filtered_complex_on(const UnweightedGraph& support, const WeightedGraph& w,
                                                 std::size_t max_dim) {
    if (support.num_vertices() != w.num_vertices())
        throw std::domain_error("support and weighted graph differ in vertex set");
    std::vector<Simplex> simplices;
    std::vector<Rational> values;
    enumerate_cliques(support, max_dim + 2, [&](const Simplex& s) {
        simplices.push_back(s);
        values.push_back(filtration_value(w, s));
    });
    return detail::sort_into_complex(std::move(simplices), std::move(values), Direction::Descending);
}

/// Unweighted graph on the union of the positive pairs of a and b.
inline UnweightedGraph union_support(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.num_vertices() != b.num_vertices()) throw std::domain_error("union_support: vertex sets differ");
    std::vector<Edge> edges;
    for (const auto& e : a.edges()) edges.push_back({e.u, e.v});
    for (const auto& e : b.edges()) edges.push_back({e.u, e.v});
    return UnweightedGraph(a.num_vertices(), edges);
}

/// Clique-complex filtration: stage p is the p-skeleton, so every simplex
/// takes its dimension as value.
inline FilteredComplex build_clique_filtration(const UnweightedGraph& g, std::size_t max_dim) {
    std::vector<Simplex> simplices;
    std::vector<Rational> values;
    enumerate_cliques(g, max_dim + 2, [&](const Simplex& s) {
        simplices.push_back(s);
        values.emplace_back(static_cast<std::int64_t>(s.dimension()));
    });
    return detail::sort_into_complex(std::move(simplices), std::move(values), Direction::Ascending);
}

/// Power (graph Vietoris-Rips) filtration: vertices at 0, a simplex at the
/// largest hop distance among its vertices. Vertices in different components
/// are never joined.
inline FilteredComplex build_power_filtration(const UnweightedGraph& g, std::size_t max_dim) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::size_t>> dist(n);
    std::size_t reach = 0;
    for (Vertex v = 0; v < n; ++v) {
        dist[v] = bfs_distances(g, v);
        for (auto d : dist[v])
            if (d != unreachable) reach = std::max(reach, d);
    }
    std::vector<Simplex> simplices;
    std::vector<Rational> values;
    auto record = [&](const Simplex& s) {
        std::size_t value = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) value = std::max(value, dist[s[i]][s[j]]);
        simplices.push_back(s);
        values.emplace_back(static_cast<std::int64_t>(value));
    };
    if (reach == 0) {
        enumerate_cliques(g, max_dim + 2, record);
    } else {
        enumerate_cliques(graph_power(g, reach), max_dim + 2, record);
    }
    return detail::sort_into_complex(std::move(simplices), std::move(values), Direction::Ascending);
}

/// Max |f1 - f2| over the shared simplex set; the sets must coincide.
inline Rational distance_functions(const FilteredComplex& a, const FilteredComplex& b) {
    if (a.size() != b.size()) throw std::domain_error("distance_functions: simplex sets differ");
    Rational best(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto j = b.index_of(a.simplex(i));
        if (!j) throw std::domain_error("distance_functions: simplex sets differ");
        best = std::max(best, abs(a.value(i) - b.value(*j)));
    }
    return best;
}

/// One line per simplex: `value<TAB>dim<TAB>v0,v1,...`.
inline void write_filtration(std::ostream& out, const FilteredComplex& fc) {
    for (std::size_t i = 0; i < fc.size(); ++i) {
        const auto& s = fc.simplex(i);
        out << fc.value(i) << '\t' << s.dimension() << '\t';
        for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
        out << '\n';
    }
}

}  // namespace cliqph
