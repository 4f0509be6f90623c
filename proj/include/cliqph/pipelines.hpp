#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "cliqueness.hpp"
#include "complex.hpp"
#include "graph.hpp"
#include "persistence.hpp"

namespace cliqph {

struct AnalysisRequest {
    UnweightedGraph graph;
    FiltrationKind kind = FiltrationKind::Cliqueness;
    std::size_t max_dim = 1;
    bool drop_zero = true;
};

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

struct RunReport {
    FiltrationKind kind = FiltrationKind::Cliqueness;
    std::size_t input_vertices = 0;
    std::size_t input_edges = 0;
    std::size_t isolated_removed = 0;
    std::size_t weighted_edges = 0;
    std::vector<std::size_t> simplices_by_dimension;
    std::vector<std::size_t> zero_points_dropped;  // per homology dimension
    std::vector<StageTiming> timings;

    [[nodiscard]] double total_seconds() const {
        double t = 0;
        for (const auto& s : timings) t += s.seconds;
        return t;
    }
};

struct AnalysisResult {
    std::vector<PersistenceDiagram> diagrams;  // index = homology dimension
    RunReport report;
};

namespace detail {

class StageClock {
public:
    explicit StageClock(RunReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
    void lap(std::string stage) {
        auto now = std::chrono::steady_clock::now();
        report_.timings.push_back({std::move(stage), std::chrono::duration<double>(now - start_).count()});
        start_ = now;
    }

private:
    RunReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline void extract_diagrams(const FilteredComplex& fc, FiltrationKind kind, const AnalysisRequest& req,
                             AnalysisResult& out, StageClock& clock) {
    out.report.simplices_by_dimension = fc.counts_by_dimension();
    auto pairing = reduce_and_pair(fc);
    clock.lap("reduce");
    for (std::size_t p = 0; p <= req.max_dim; ++p) {
        auto raw = diagram_from_pairing(fc, pairing, p, kind);
        const auto before = raw.points.size();
        auto d = finalize_diagram(std::move(raw), kind, req.drop_zero);
        out.report.zero_points_dropped.push_back(before - d.points.size());
        out.diagrams.push_back(std::move(d));
    }
    clock.lap("diagrams");
}

inline AnalysisResult start(const AnalysisRequest& req) {
    AnalysisResult out;
    out.report.kind = req.kind;
    out.report.input_vertices = req.graph.num_vertices();
    out.report.input_edges = req.graph.num_edges();
    return out;
}

}  // namespace detail

/// Remove isolated vertices, weight every pair by cliqueness, build the
/// descending filtration up to dimension max_dim + 1, reduce, and finalize.
inline AnalysisResult cliqueness_pipeline(const AnalysisRequest& req) {
    auto out = detail::start(req);
    detail::StageClock clock(out.report);
    auto core = remove_isolated_vertices(req.graph);
    out.report.isolated_removed = req.graph.num_vertices() - core.graph.num_vertices();
    clock.lap("remove_isolated");
    auto weighted = cliqueness_map(core.graph);
    out.report.weighted_edges = weighted.num_edges();
    clock.lap("cliqueness_map");
    auto fc = build_filtered_complex(weighted, req.max_dim);
    clock.lap("filtration");
    detail::extract_diagrams(fc, FiltrationKind::Cliqueness, req, out, clock);
    return out;
}

/// Clique-complex filtration: stage p adds the p-simplices.
inline AnalysisResult clique_pipeline(const AnalysisRequest& req) {
    auto out = detail::start(req);
    detail::StageClock clock(out.report);
    auto fc = build_clique_filtration(req.graph, req.max_dim);
    clock.lap("filtration");
    detail::extract_diagrams(fc, FiltrationKind::Clique, req, out, clock);
    return out;
}

/// Power-complex filtration in its Vietoris-Rips form on hop distance.
inline AnalysisResult power_pipeline(const AnalysisRequest& req) {
    auto out = detail::start(req);
    detail::StageClock clock(out.report);
    auto fc = build_power_filtration(req.graph, req.max_dim);
    clock.lap("filtration");
    detail::extract_diagrams(fc, FiltrationKind::Power, req, out, clock);
    return out;
}

inline AnalysisResult run(const AnalysisRequest& req) {
    switch (req.kind) {
        case FiltrationKind::Cliqueness: return cliqueness_pipeline(req);
        case FiltrationKind::Clique: return clique_pipeline(req);
        case FiltrationKind::Power: return power_pipeline(req);
    }
    throw std::invalid_argument("unknown filtration kind");
}

/// Convenience: diagrams of g under `kind` for dimensions 0..max_dim.
inline std::vector<PersistenceDiagram> diagrams_of(const UnweightedGraph& g, FiltrationKind kind,
                                                   std::size_t max_dim = 1, bool drop_zero = true) {
    return run({g, kind, max_dim, drop_zero}).diagrams;
}

}  // namespace cliqph
