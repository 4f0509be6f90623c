#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <cliqph/cliqph.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace cliqph;
using support::inf;
using support::Points;
using support::q;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && failures_.size() < 8) failures_.push_back(what);
        if (!cond) ++count_;
    }
    Outcome done(std::string summary) const {
        Outcome o{count_ == 0, std::move(summary)};
        for (const auto& f : failures_) o.detail += "\n      " + f;
        if (count_ > failures_.size()) o.detail += "\n      ... " + std::to_string(count_ - failures_.size()) + " more";
        return o;
    }

private:
    std::vector<std::string> failures_;
    std::size_t count_ = 0;
};

std::string show(const Points& pts) {
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (i ? " " : "") + std::string("(") + pts[i].first.to_string() + "," + pts[i].second.to_string() + ")";
    return s + "}";
}

Points h_points(const UnweightedGraph& g, FiltrationKind k, std::size_t p) {
    return diagrams_of(g, k, std::max<std::size_t>(p, 1))[p].coordinates();
}

// 1
Outcome discrimination() {
    Check c;
    const std::vector<std::pair<const char*, Points>> cases{
        {"single_clique(5)", {{q(1), inf()}}},
        {"two_cliques(5)", support::sorted({{q(1), inf()}, {q(1), q(0)}})},
        {"bridged_cliques(5)", support::sorted({{q(1), inf()}, {q(1), q(1, 5)}})},
    };
    std::string summary;
    for (const auto& [name, want] : cases) {
        auto g = fixture(name);
        // Reference values come from the dense oracle first, then the engine must agree.
        auto ref = oracle::diagrams(g, FiltrationKind::Cliqueness, 0)[0];
        c.expect(ref == want, std::string(name) + " oracle gives " + show(ref));
        auto got = diagrams_of(g, FiltrationKind::Cliqueness, 0)[0].coordinates();
        c.expect(got == want, std::string(name) + " engine gives " + show(got));
        summary += show(got) + " ";
    }
    return c.done("cliqueness H0 " + summary);
}

// 2
Outcome baselines() {
    Check c;
    std::string summary;
    for (auto kind : {FiltrationKind::Clique, FiltrationKind::Power}) {
        summary += std::string(to_string(kind)) + ":";
        std::size_t want[] = {1, 2, 1}, i = 0;
        for (const char* name : {"single_clique(5)", "two_cliques(5)", "bridged_cliques(5)"}) {
            auto n = diagrams_of(fixture(name), kind, 0)[0].essential_count();
            c.expect(n == want[i++], std::string(to_string(kind)) + " " + name + " essential " + std::to_string(n));
            summary += " " + std::to_string(n);
        }
        summary += "  ";
    }
    return c.done("essential H0 counts " + summary);
}

// 3
Outcome clique_instability() {
    Check c;
    auto a = diagrams_of(fixtures::fig4_a(), FiltrationKind::Clique, 1)[1];
    auto b = diagrams_of(fixtures::fig4_b(), FiltrationKind::Clique, 1)[1];
    c.expect(a.coordinates() == Points(3, {q(1), inf()}), "fig4_a H1 " + show(a.coordinates()));
    c.expect(b.coordinates() == Points(4, {q(1), q(2)}), "fig4_b H1 " + show(b.coordinates()));
    c.expect(distance_unweighted(fixtures::fig4_a(), fixtures::fig4_b()) == 1, "graphs should differ by one edge");
    auto d = bottleneck_distance(a, b).distance;
    c.expect(d.is_infinite(), "bottleneck " + d.to_string());
    return c.done("H1 " + show(a.coordinates()) + " vs " + show(b.coordinates()) + ", bottleneck " + d.to_string());
}

// 4
Outcome power_instability() {
    Check c;
    auto a = diagrams_of(fixtures::fig6_a(), FiltrationKind::Power, 1)[0];
    auto b = diagrams_of(fixtures::fig6_b(), FiltrationKind::Power, 1)[0];
    auto essentials = [](const PersistenceDiagram& d) {
        Points out;
        for (const auto& p : d.points)
            if (p.is_essential()) out.emplace_back(p.birth, p.death);
        return out;
    };
    c.expect(essentials(a) == Points(2, {q(0), inf()}), "fig6_a essential " + show(essentials(a)));
    c.expect(essentials(b) == Points(1, {q(0), inf()}), "fig6_b essential " + show(essentials(b)));
    auto d = bottleneck_distance(a, b).distance;
    c.expect(d.is_infinite(), "bottleneck " + d.to_string());
    return c.done("essential H0 " + show(essentials(a)) + " vs " + show(essentials(b)) + ", bottleneck " + d.to_string());
}

// 5
Outcome stability() {
    Check c;
    Rational worst_b(0), worst_dk(0), worst_dw(0);
    for (std::uint64_t t = 0; t < 200; ++t) {
        Rng rng(t, "acceptance-stability");
        UnweightedGraph g, h;
        do {
            const auto n = 2 + rng.below(29);
            const double p = 0.05 + 0.45 * rng.uniform();
            std::vector<Edge> e;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.bernoulli(p)) e.push_back({u, v});
            g = UnweightedGraph(n, e);
            const auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n - 1));
            if (v >= u) ++v;
            h = toggle_edge(g, {u, v});
        } while (g.num_edges() == 0 || h.num_edges() == 0);

        const auto du = Rational(distance_unweighted(g, h));
        auto wg = cliqueness_map(g), wh = cliqueness_map(h);
        const auto dw = distance_weighted(wg, wh);
        auto support_graph = union_support(wg, wh);
        const auto dk = distance_functions(build_filtered_complex_on(support_graph, wg, 1),
                                           build_filtered_complex_on(support_graph, wh, 1));
        const std::string tag = "trial " + std::to_string(t) + ": ";
        c.expect(dw <= du, tag + "D^W " + dw.to_string() + " > D^U " + du.to_string());
        c.expect(dk <= dw, tag + "D^K " + dk.to_string() + " > D^W " + dw.to_string());
        auto a = diagrams_of(g, FiltrationKind::Cliqueness, 1), b = diagrams_of(h, FiltrationKind::Cliqueness, 1);
        for (std::size_t p = 0; p < 2; ++p) {
            auto d = bottleneck_distance(a[p], b[p]).distance;
            c.expect(d.is_finite() && d.value() <= Rational(1), tag + "H" + std::to_string(p) + " bottleneck " + d.to_string());
            c.expect(d.is_finite() && d.value() <= dk, tag + "H" + std::to_string(p) + " bottleneck " + d.to_string() + " > D^K " + dk.to_string());
            if (d.is_finite()) worst_b = std::max(worst_b, d.value());
        }
        worst_dk = std::max(worst_dk, dk);
        worst_dw = std::max(worst_dw, dw);
    }
    return c.done("200 trials, max bottleneck " + worst_b.to_string() + ", max D^K " + worst_dk.to_string() +
                  ", max D^W " + worst_dw.to_string());
}

// 6
Outcome oracle_equivalence() {
    Check c;
    std::size_t compared = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto g = support::random_graph(s, 1, 12, 0.1, 0.8);
        for (auto kind : {FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power}) {
            auto got = diagrams_of(g, kind, 1);
            auto want = oracle::diagrams(g, kind, 1);
            for (std::size_t p = 0; p < 2; ++p) {
                ++compared;
                c.expect(got[p].coordinates() == want[p], "seed " + std::to_string(s) + " " +
                                                              std::string(to_string(kind)) + " H" + std::to_string(p) +
                                                              ": engine " + show(got[p].coordinates()) + " oracle " +
                                                              show(want[p]));
            }
            // Stepwise check: each simplex creates or destroys exactly as the rank test says.
            FilteredComplex fc;
            switch (kind) {
                case FiltrationKind::Cliqueness: fc = build_filtered_complex(cliqueness_map(g), 1); break;
                case FiltrationKind::Clique: fc = build_clique_filtration(g, 1); break;
                case FiltrationKind::Power: fc = build_power_filtration(g, 1); break;
            }
            auto pairing = reduce_and_pair(fc);
            std::vector<bool> creates(fc.size(), true);
            for (const auto& pr : pairing.pairs) creates[pr.death] = false;
            c.expect(creates == oracle::positive_simplices(fc),
                     "seed " + std::to_string(s) + " " + std::string(to_string(kind)) + ": creator/destroyer mismatch");
        }
    }
    return c.done(std::to_string(compared) + " diagrams compared");
}

// 7
Outcome cycle_significance() {
    Check c;
    auto nonzero_h1 = [](const UnweightedGraph& g) {
        auto pts = diagrams_of(g, FiltrationKind::Cliqueness, 1)[1];
        std::vector<Rational> pers;
        for (const auto& p : pts.points)
            if (p.persistence() > Rational(0)) pers.push_back(p.persistence());
        std::sort(pers.rbegin(), pers.rend());
        return std::pair{pts.coordinates(), pers};
    };
    auto [plain_pts, plain] = nonzero_h1(fixtures::dense_cycle(20, 3));
    auto [chord_pts, chord] = nonzero_h1(fixtures::dense_cycle_with_chord(20, 3));
    c.expect(plain.size() == 1, "dense_cycle(20,3) has " + std::to_string(plain.size()) + " nonzero H1 points");
    c.expect(chord.size() == 2, "dense_cycle_with_chord(20,3) has " + std::to_string(chord.size()) +
                                    " nonzero H1 points " + show(chord_pts));
    if (chord.size() == 2) c.expect(chord[0] >= chord[1] * Rational(2), "persistence ratio below 2");
    return c.done("H1 " + show(plain_pts) + " vs " + show(chord_pts));
}

// 8
Outcome rgg_degree() {
    Check c;
    double total = 0;
    for (std::uint64_t s = 0; s < 30; ++s) total += 2.0 * sample_circle_rgg({200, 0.25, s}).graph.num_edges() / 200.0;
    const double mean = total / 30;
    c.expect(std::abs(mean - 16.6) <= 1.0, "mean degree " + std::to_string(mean));
    std::ostringstream s;
    s << "mean degree over 30 seeds " << mean;
    return c.done(s.str());
}

// 9
Outcome sbm_structure() {
    Check c;
    std::size_t hits = 0;
    std::string counts;
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto d = diagrams_of(sample_sbm(default_sbm_spec(s)), FiltrationKind::Cliqueness, 0)[0];
        std::vector<Rational> pers;
        for (const auto& p : d.points)
            if (!p.is_essential()) pers.push_back(p.persistence());
        std::sort(pers.begin(), pers.end());
        Rational median(0);
        if (!pers.empty())
            median = pers.size() % 2 ? pers[pers.size() / 2] : (pers[pers.size() / 2 - 1] + pers[pers.size() / 2]) / Rational(2);
        const auto big = std::count_if(pers.begin(), pers.end(), [&](const Rational& x) { return x > median * Rational(5); });
        hits += big == 3;
        counts += std::to_string(big);
    }
    c.expect(hits >= 16, std::to_string(hits) + " of 20 seeds show exactly 3 dominant points");
    return c.done(std::to_string(hits) + "/20 seeds with exactly 3 dominant H0 points (per-seed counts " + counts + ")");
}

// 10
Outcome real_data() {
    Check c;
    struct Set {
        const char* name;
        const char* file;
        bool lcc;
        std::size_t n, m;
        double limit;
    };
    const Set sets[] = {{"karate", "karate.txt", false, 34, 78, 5},
                        {"dolphins", "dolphins.txt", false, 62, 159, 5},
                        {"protein", "yeast_protein.txt", true, 1458, 1993, 600}};
    std::string summary;
    for (const auto& s : sets) {
        const auto path = std::filesystem::path(CLIQPH_DATA_DIR) / s.file;
        std::ifstream in(path);
        if (!in) {
            c.expect(false, std::string(s.name) + ": dataset file " + path.string() + " is not available");
            summary += std::string(s.name) + " missing; ";
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        auto g = load_edge_list(in).graph;
        if (s.lcc) g = largest_connected_component(g).graph;
        c.expect(g.num_vertices() == s.n && g.num_edges() == s.m,
                 std::string(s.name) + ": " + std::to_string(g.num_vertices()) + "/" + std::to_string(g.num_edges()));
        auto d = diagrams_of(g, FiltrationKind::Cliqueness, 1);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs < s.limit, std::string(s.name) + " took " + std::to_string(secs) + " s");
        const auto strong = count_at_least(d[0], Rational(3, 10));
        c.expect(strong >= 2, std::string(s.name) + ": " + std::to_string(strong) + " H0 points with persistence >= 0.3");
        std::ostringstream line;
        line << s.name << " " << g.num_vertices() << "/" << g.num_edges() << " " << strong << " strong H0 points "
             << secs << " s; ";
        summary += line.str();
    }
    return c.done(summary);
}

// 11
Outcome invariants() {
    Check c;
    std::size_t checks = 0;
    for (std::uint64_t s = 0; s < 60; ++s) {
        auto g = support::random_graph(s, 1, 12);
        for (const auto& fc : {build_filtered_complex(cliqueness_map(g), 1), build_clique_filtration(g, 1),
                               build_power_filtration(g, 1)}) {
            try {
                fc.check_invariants();
            } catch (const std::logic_error& e) {
                c.expect(false, "seed " + std::to_string(s) + ": " + e.what());
            }
            ++checks;
        }
        auto full = build_clique_filtration(g, 2);
        auto counts = full.counts_by_dimension();
        auto betti = betti_numbers(full, 3);
        long long chi = 0, alt = 0;
        for (std::size_t p = 0; p < counts.size(); ++p) chi += (p % 2 ? -1 : 1) * static_cast<long long>(counts[p]);
        for (std::size_t p = 0; p < betti.size(); ++p) alt += (p % 2 ? -1 : 1) * static_cast<long long>(betti[p]);
        c.expect(chi == alt, "seed " + std::to_string(s) + ": Euler characteristic mismatch");
        c.expect(betti[0] == oracle::component_count(g), "seed " + std::to_string(s) + ": Betti_0 vs union-find");

        auto g2 = support::relabel(g, s + 7);
        for (auto kind : {FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power}) {
            auto a = diagrams_of(g, kind, 1), b = diagrams_of(g2, kind, 1);
            for (std::size_t p = 0; p < 2; ++p)
                c.expect(a[p].coordinates() == b[p].coordinates(),
                         "seed " + std::to_string(s) + ": relabeling changed " + std::string(to_string(kind)) + " H" + std::to_string(p));
        }
        checks += 4;
    }
    Rng rng(99, "acceptance-diagrams");
    auto random_diagram = [&] {
        Points pts;
        const auto k = rng.below(7);
        for (std::size_t i = 0; i < k; ++i) {
            auto x = static_cast<std::int64_t>(rng.below(11)), y = static_cast<std::int64_t>(rng.below(11));
            pts.emplace_back(q(std::max(x, y), 10), q(std::min(x, y), 10));
        }
        return support::diagram(0, Direction::Descending, pts);
    };
    auto finite = [](const PersistenceDiagram& d) {
        std::vector<std::pair<Rational, Rational>> v;
        for (const auto& p : d.points) v.emplace_back(p.birth.value(), p.death.value());
        return v;
    };
    for (int t = 0; t < 200; ++t) {
        auto a = random_diagram(), b = random_diagram(), x = random_diagram();
        const auto ab = bottleneck_distance(a, b).distance.value();
        c.expect(ab == bottleneck_distance(b, a).distance.value(), "bottleneck not symmetric");
        c.expect(bottleneck_distance(a, a).distance == q(0), "nonzero self distance");
        c.expect(bottleneck_distance(a, x).distance.value() <= ab + bottleneck_distance(b, x).distance.value(),
                 "triangle inequality");
        c.expect(ab == oracle::exhaustive_bottleneck(finite(a), finite(b)), "exhaustive matcher disagrees");
        checks += 4;
    }
    return c.done(std::to_string(checks) + " checks");
}

struct Criterion {
    int id;
    const char* title;
    double seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--only N]\n";
            return 1;
        }
    }
    const std::vector<Criterion> criteria{
        {1, "clique fixtures discriminated by cliqueness H0", 1, discrimination},
        {2, "clique and power baselines do not discriminate", 1, baselines},
        {3, "clique filtration unstable on the four-path pair", 1, clique_instability},
        {4, "power filtration unstable on the path pair", 1, power_instability},
        {5, "single-edge stability and distance chain", 60, stability},
        {6, "engine equals dense elimination oracle", 120, oracle_equivalence},
        {7, "dense cycle with chord shows two H1 points", 5, cycle_significance},
        {8, "circle geometric graph mean degree", 10, rgg_degree},
        {9, "four-block SBM shows three dominant H0 points", 120, sbm_structure},
        {10, "real networks complete with strong H0 points", 600, real_data},
        {11, "invariant suites", 600, invariants},
    };
    const bool color = std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
    int failed = 0, ran = 0;
    for (const auto& cr : criteria) {
        if (only && cr.id != only) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= cr.seconds) {
            o.pass = false;
            o.detail += "\n      exceeded time limit of " + std::to_string(cr.seconds) + " s";
        }
        const char* tag = o.pass ? (color ? "\033[32mPASS\033[0m" : "PASS") : (color ? "\033[31mFAIL\033[0m" : "FAIL");
        std::printf("criterion %2d %s  %s (%.3f s): %s\n", cr.id, tag, cr.title, secs, o.detail.c_str());
        if (!o.pass) ++failed;
    }
    if (ran == 0) {
        std::cerr << "no criterion " << only << "\n";
        return 1;
    }
    return failed ? 1 : 0;
}
