#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <cliqph/cliqph.hpp>

namespace fs = std::filesystem;
using namespace cliqph;

namespace {

enum Exit { ok = 0, usage = 1, input = 2, internal = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool color_stderr() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)); }

void complain(const std::string& what) {
    if (color_stderr()) std::cerr << "\033[31merror:\033[0m " << what << '\n';
    else std::cerr << "error: " << what << '\n';
}

std::ofstream open_out(const fs::path& p) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw InputError("cannot write " + p.string());
    return out;
}

/// An edge-list path, "-" for stdin, or "fixture:<name>".
LoadedGraph load_graph(const std::string& source) {
    if (source.rfind("fixture:", 0) == 0) {
        try {
            return {fixture(source.substr(8)), {}};
        } catch (const std::domain_error& e) {
            throw InputError(e.what());
        }
    }
    if (source == "-") return load_edge_list(std::cin);
    std::ifstream in(source);
    if (!in) throw InputError("cannot open " + source);
    try {
        return load_edge_list(in);
    } catch (const ParseError& e) {
        throw InputError(source + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

std::vector<PersistenceDiagram> load_diagrams(const std::string& path, FiltrationKind fallback) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return read_diagrams(in, fallback);
    } catch (const ParseError& e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
}

void print_report(std::ostream& err, const RunReport& r, const LoadStats& stats) {
    err << "kind: " << to_string(r.kind) << '\n'
        << "input: " << r.input_vertices << " vertices, " << r.input_edges << " edges";
    if (stats.self_loops_dropped || stats.duplicates_dropped)
        err << " (dropped " << stats.self_loops_dropped << " self-loops, " << stats.duplicates_dropped
            << " duplicates)";
    err << '\n';
    if (r.kind == FiltrationKind::Cliqueness)
        err << "isolated vertices removed: " << r.isolated_removed << "\nweighted pairs: " << r.weighted_edges << '\n';
    err << "simplices by dimension:";
    for (auto c : r.simplices_by_dimension) err << ' ' << c;
    err << "\nzero-persistence points dropped:";
    for (std::size_t p = 0; p < r.zero_points_dropped.size(); ++p) err << " H" << p << '=' << r.zero_points_dropped[p];
    err << '\n';
    for (const auto& t : r.timings) err << "time " << t.stage << ": " << std::fixed << std::setprecision(6) << t.seconds << " s\n";
    err << "time total: " << r.total_seconds() << " s\n";
    err.unsetf(std::ios::fixed);
}

std::string point_text(const DiagramPoint& p, bool as_float) {
    return "(" + format_coord(p.birth, as_float) + ", " + format_coord(p.death, as_float) + ")";
}

void print_comparison(std::ostream& out, const PersistenceDiagram& a, const PersistenceDiagram& b, bool as_float) {
    auto r = bottleneck_distance(a, b);
    out << "H" << a.dimension << " distance " << format_coord(r.distance, as_float) << '\n';
    if (r.distance.is_infinite()) {
        out << "  essential points differ: " << a.essential_count() << " vs " << b.essential_count() << '\n';
        return;
    }
    for (const auto& m : r.matching) {
        out << "  " << (m.left ? point_text(a.points[*m.left], as_float) : "diagonal") << " -> "
            << (m.right ? point_text(b.points[*m.right], as_float) : "diagonal") << "  cost "
            << format_coord(m.cost, as_float) << '\n';
    }
}

void write_diagrams(const std::vector<PersistenceDiagram>& ds, const std::string& format, const std::string& prefix,
                    bool as_float, std::vector<std::string>* written = nullptr) {
    if (format == "svg") {
        if (prefix == "-") return write_diagram_svg(std::cout, ds);
        auto out = open_out(prefix + ".svg");
        write_diagram_svg(out, ds);
        if (written) written->push_back(prefix + ".svg");
        return;
    }
    if (prefix == "-") {
        if (format == "json") {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& d : ds) all.push_back(diagram_to_json(d));
            std::cout << all.dump(2) << '\n';
        } else {
            std::cout << "dim,birth,death\n";
            for (const auto& d : ds)
                for (const auto& p : d.points)
                    std::cout << d.dimension << ',' << format_coord(p.birth, as_float) << ','
                              << format_coord(p.death, as_float) << '\n';
        }
        return;
    }
    for (const auto& d : ds) {
        const auto path = prefix + "_H" + std::to_string(d.dimension) + "." + format;
        auto out = open_out(path);
        if (format == "json") out << diagram_to_json(d).dump(2) << '\n';
        else write_diagram_csv(out, d, as_float);
        if (written) written->push_back(path);
    }
}

// ---- experiments ----

struct ExperimentOptions {
    std::uint64_t seed = 0;
    std::string out_dir;
    std::string data_dir = "data";
    std::size_t trials = 200;
    std::size_t threads = 0;
    bool as_float = false;
};

template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string cell(const Coord& c) { return c.is_infinite() ? "inf" : c.value().to_string(); }

int stability_trials(const ExperimentOptions& o, std::ostream& out) {
    constexpr std::array kinds{FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power};
    struct Trial {
        std::size_t n = 0, edges = 0;
        Edge toggled{};
        std::array<std::array<Coord, 2>, 3> distance{};
    };
    std::vector<Trial> trials(o.trials);
    parallel_for(o.trials, o.threads, [&](std::size_t t) {
        Rng rng(o.seed, "stability-" + std::to_string(t));
        UnweightedGraph g, h;
        Edge e{};
        do {
            const auto n = 2 + rng.below(29);
            const double p = 0.05 + 0.45 * rng.uniform();
            std::vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.bernoulli(p)) edges.push_back({u, v});
            g = UnweightedGraph(n, edges);
            e.u = static_cast<Vertex>(rng.below(n));
            e.v = static_cast<Vertex>(rng.below(n - 1));
            if (e.v >= e.u) ++e.v;
            h = toggle_edge(g, e);
        } while (g.num_edges() == 0 || h.num_edges() == 0);
        auto& tr = trials[t];
        tr.n = g.num_vertices();
        tr.edges = g.num_edges();
        tr.toggled = {std::min(e.u, e.v), std::max(e.u, e.v)};
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            auto a = diagrams_of(g, kinds[k]), b = diagrams_of(h, kinds[k]);
            for (std::size_t p = 0; p < 2; ++p) tr.distance[k][p] = bottleneck_distance(a[p], b[p]).distance;
        }
    });
    auto csv = open_out(fs::path(o.out_dir) / "stability_trials.csv");
    csv << "trial,n,edges,toggled_u,toggled_v";
    for (auto k : kinds) csv << ',' << to_string(k) << "_H0," << to_string(k) << "_H1";
    csv << '\n';
    std::array<std::array<Coord, 2>, 3> worst{};
    std::array<std::size_t, 3> infinite{};
    for (std::size_t t = 0; t < trials.size(); ++t) {
        const auto& tr = trials[t];
        csv << t << ',' << tr.n << ',' << tr.edges << ',' << tr.toggled.u << ',' << tr.toggled.v;
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t p = 0; p < 2; ++p) {
                csv << ',' << cell(tr.distance[k][p]);
                worst[k][p] = std::max(worst[k][p], tr.distance[k][p]);
                if (tr.distance[k][p].is_infinite()) ++infinite[k];
            }
        csv << '\n';
    }
    out << "single-edge toggles over " << trials.size() << " trials (seed " << o.seed << ")\n";
    out << std::left << std::setw(12) << "kind" << std::setw(12) << "max H0" << std::setw(12) << "max H1"
        << "infinite\n";
    for (std::size_t k = 0; k < 3; ++k)
        out << std::setw(12) << to_string(kinds[k]) << std::setw(12) << format_coord(worst[k][0], o.as_float)
            << std::setw(12) << format_coord(worst[k][1], o.as_float) << infinite[k] << '\n';
    return Exit::ok;
}

void save_all(const ExperimentOptions& o, const std::string& stem, const std::vector<PersistenceDiagram>& ds) {
    write_diagrams(ds, "csv", (fs::path(o.out_dir) / stem).string(), o.as_float);
    write_diagrams(ds, "svg", (fs::path(o.out_dir) / stem).string(), o.as_float);
}

int figure1_suite(const ExperimentOptions& o, std::ostream& out) {
    const std::vector<std::string> names{"single_clique(5)", "two_cliques(5)", "bridged_cliques(5)"};
    out << std::left << std::setw(22) << "fixture" << std::setw(12) << "kind" << std::setw(10) << "finite"
        << std::setw(11) << "essential" << "H0 points\n";
    for (const auto& name : names)
        for (auto kind : {FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power}) {
            auto ds = diagrams_of(fixture(name), kind, 1);
            const auto& h0 = ds[0];
            std::string stem = name.substr(0, name.find('(')) + "_" + std::string(to_string(kind));
            save_all(o, stem, ds);
            std::ostringstream pts;
            if (h0.points.size() <= 4)
                for (const auto& p : h0.points) pts << point_text(p, o.as_float) << ' ';
            else
                pts << h0.points.size() << " points";
            out << std::setw(22) << name << std::setw(12) << to_string(kind) << std::setw(10)
                << h0.points.size() - h0.essential_count() << std::setw(11) << h0.essential_count() << pts.str()
                << '\n';
        }
    return Exit::ok;
}

int figure3_suite(const ExperimentOptions& o, std::ostream& out) {
    for (const std::string name :
         {"dense_cycle(20,3)", "dense_cycle_with_chord(20,3)", "dense_cycle(24,3)", "dense_cycle_with_chord(24,3)"}) {
        auto ds = diagrams_of(fixture(name), FiltrationKind::Cliqueness, 1);
        std::string stem = name;
        std::replace_if(stem.begin(), stem.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, '_');
        save_all(o, stem, ds);
        out << name << "  H1:";
        for (const auto& p : ds[1].points)
            out << ' ' << point_text(p, o.as_float) << " pers " << format_coord(p.persistence(), o.as_float);
        out << '\n';
    }
    return Exit::ok;
}

int sbm_suite(const ExperimentOptions& o, std::ostream& out) {
    const std::vector<std::pair<std::string, SbmSpec>> specs{
        {"sbm_one_block", {{300}, 0.3, 0.005, o.seed}},
        {"sbm_four_blocks", default_sbm_spec(o.seed)},
    };
    for (const auto& [stem, spec] : specs) {
        auto g = sample_sbm(spec);
        auto res = run({g, FiltrationKind::Cliqueness, 1, true});
        save_all(o, stem, res.diagrams);
        out << stem << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, H0 finite points "
            << finite_persistences(res.diagrams[0]).size() << ", above 5x median "
            << count_above_median(res.diagrams[0], Rational(5)) << ", H1 points " << res.diagrams[1].points.size()
            << ", " << std::setprecision(3) << res.report.total_seconds() << " s\n";
    }
    return Exit::ok;
}

int rgg_suite(const ExperimentOptions& o, std::ostream& out) {
    auto rgg = sample_circle_rgg({200, 0.25, o.seed});
    auto chord = add_random_edge(rgg.graph, o.seed);
    {
        auto coords = open_out(fs::path(o.out_dir) / "rgg_coordinates.csv");
        coords << "vertex,x,y\n";
        for (std::size_t i = 0; i < rgg.coordinates.size(); ++i)
            coords << i << ',' << rgg.coordinates[i].first << ',' << rgg.coordinates[i].second << '\n';
    }
    out << "mean degree " << std::setprecision(4) << 2.0 * rgg.graph.num_edges() / 200 << '\n';
    for (const auto& [stem, g] : {std::pair{std::string("rgg"), rgg.graph}, std::pair{std::string("rgg_chord"), chord}}) {
        auto ds = diagrams_of(g, FiltrationKind::Cliqueness, 1);
        save_all(o, stem, ds);
        auto h1 = ds[1].points;
        std::sort(h1.begin(), h1.end(),
                  [](const DiagramPoint& a, const DiagramPoint& b) { return a.persistence() > b.persistence(); });
        out << stem << " H1 (" << h1.size() << " points), largest persistences:";
        for (std::size_t i = 0; i < std::min<std::size_t>(h1.size(), 4); ++i)
            out << ' ' << format_coord(h1[i].persistence(), o.as_float);
        out << '\n';
    }
    return Exit::ok;
}

int real_suite(const ExperimentOptions& o, std::ostream& out) {
    struct Dataset {
        std::string name, file;
        bool largest_component;
    };
    const std::vector<Dataset> sets{{"karate", "karate.txt", false},
                                    {"dolphins", "dolphins.txt", false},
                                    {"protein", "yeast_protein.txt", true}};
    std::size_t found = 0;
    for (const auto& ds : sets) {
        const auto path = fs::path(o.data_dir) / ds.file;
        if (!fs::exists(path)) {
            out << ds.name << ": " << path.string() << " not found, skipped\n";
            continue;
        }
        ++found;
        auto g = load_graph(path.string()).graph;
        if (ds.largest_component) g = largest_connected_component(g).graph;
        auto res = run({g, FiltrationKind::Cliqueness, 1, true});
        save_all(o, ds.name, res.diagrams);
        out << ds.name << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges, H0 points "
            << res.diagrams[0].points.size() << " (" << count_at_least(res.diagrams[0], Rational(3, 10))
            << " with persistence >= 0.3), H1 points " << res.diagrams[1].points.size() << ", " << std::setprecision(3)
            << res.report.total_seconds() << " s\n";
    }
    if (found == 0) throw InputError("no datasets found in " + o.data_dir);
    return Exit::ok;
}

int run_experiment(const std::string& name, ExperimentOptions o) {
    static const std::map<std::string, int (*)(const ExperimentOptions&, std::ostream&)> table{
        {"stability_trials", stability_trials}, {"figure1_suite", figure1_suite}, {"figure3_suite", figure3_suite},
        {"sbm_suite", sbm_suite},               {"rgg_suite", rgg_suite},         {"real_suite", real_suite}};
    auto it = table.find(name);
    if (it == table.end()) {
        std::string names;
        for (const auto& [k, _] : table) names += " " + k;
        throw InputError("unknown experiment '" + name + "'; choose one of:" + names);
    }
    if (o.out_dir.empty()) o.out_dir = "results/" + name;
    fs::create_directories(o.out_dir);
    std::ostringstream summary;
    const int code = it->second(o, summary);
    std::cout << summary.str();
    auto file = open_out(fs::path(o.out_dir) / "summary.txt");
    file << summary.str();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistent homology of unweighted graphs under cliqueness, clique and power filtrations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "cliqph 1.0");

    const auto kinds = CLI::IsMember({"cliqueness", "clique", "power"}, CLI::ignore_case);

    // compute
    auto* compute = app.add_subcommand("compute", "Persistence diagrams of one graph");
    std::string c_input, c_out, c_format = "csv", c_weights, c_filtration;
    std::string c_kind = "cliqueness";
    std::size_t c_dim = 1;
    bool c_drop = true, c_float = false;
    std::uint64_t c_seed = 0;
    compute->add_option("input", c_input, "Edge list path, '-' for stdin, or fixture:<name>")->required();
    compute->add_option("--kind", c_kind, "Filtration")->transform(kinds);
    compute->add_option("--dim", c_dim, "Largest homology dimension")->check(CLI::Range(0, 8));
    compute->add_flag("--drop-zero,!--keep-zero", c_drop, "Drop zero-persistence points (default on)");
    compute->add_option("--format", c_format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    compute->add_flag("--float", c_float, "Decimal instead of exact fractions");
    compute->add_option("--seed", c_seed, "Seed (accepted for uniformity; compute is deterministic)");
    compute->add_option("-o,--output", c_out, "Output prefix; files are <prefix>_H<p>.<format>, '-' for stdout");
    compute->add_option("--weights", c_weights, "Also write the cliqueness weights CSV here");
    compute->add_option("--filtration", c_filtration, "Also write the filtration dump here");

    // compare
    auto* compare = app.add_subcommand("compare", "Bottleneck distance between diagrams or graphs");
    std::string a_path, b_path;
    bool cmp_graphs = false, cmp_float = false;
    std::string cmp_kind = "cliqueness";
    std::optional<std::size_t> cmp_dim;
    std::uint64_t cmp_seed = 0;
    compare->add_option("first", a_path, "Diagram file (csv/json) or graph")->required();
    compare->add_option("second", b_path, "Diagram file (csv/json) or graph")->required();
    compare->add_flag("--graphs", cmp_graphs, "Inputs are graphs; compute diagrams with --kind first");
    compare->add_option("--kind", cmp_kind, "Filtration for graphs, or fallback convention for diagram files")
        ->transform(kinds);
    compare->add_option("--dim", cmp_dim, "Only this homology dimension");
    compare->add_flag("--float", cmp_float, "Decimal output");
    compare->add_option("--seed", cmp_seed, "Seed (unused; comparison is deterministic)");

    // generate
    auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
    std::string g_model, g_out = "-", g_coords, g_fixture;
    std::vector<std::size_t> g_blocks{75, 75, 75, 75};
    double g_pin = 0.3, g_pout = 0.005, g_radius = 0.25;
    std::size_t g_n = 200;
    std::uint64_t g_seed = 0;
    bool g_add_edge = false;
    generate->add_option("model", g_model, "sbm, rgg or fixture")->required()->check(CLI::IsMember({"sbm", "rgg", "fixture"}));
    generate->add_option("name", g_fixture, "Fixture name, e.g. dense_cycle(20,3)");
    generate->add_option("--blocks", g_blocks, "SBM block sizes")->delimiter(',');
    generate->add_option("--p-in", g_pin, "SBM within-block probability")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--p-out", g_pout, "SBM between-block probability")->check(CLI::Range(0.0, 1.0));
    generate->add_option("--n", g_n, "RGG vertex count");
    generate->add_option("--radius", g_radius, "RGG chord-distance threshold");
    generate->add_option("--seed", g_seed, "Seed");
    generate->add_flag("--add-edge", g_add_edge, "Add one random absent edge afterwards");
    generate->add_option("-o,--output", g_out, "Edge list path, '-' for stdout");
    generate->add_option("--coords", g_coords, "RGG coordinates CSV path");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a named experiment suite");
    std::string e_name;
    ExperimentOptions e_opts;
    experiment->add_option("name", e_name,
                           "stability_trials, figure1_suite, figure3_suite, sbm_suite, rgg_suite or real_suite")
        ->required();
    experiment->add_option("--seed", e_opts.seed, "Seed");
    experiment->add_option("--out-dir", e_opts.out_dir, "Directory for reports (default results/<name>)");
    experiment->add_option("--data-dir", e_opts.data_dir, "Directory holding dataset edge lists");
    experiment->add_option("--trials", e_opts.trials, "Trials for stability_trials")->check(CLI::Range(1, 100000));
    experiment->add_option("--threads", e_opts.threads, "Worker threads (0 = hardware)");
    experiment->add_flag("--float", e_opts.as_float, "Decimal output");

    // plot
    auto* plot = app.add_subcommand("plot", "Render diagram files as one SVG");
    std::vector<std::string> p_inputs;
    std::string p_out = "-";
    std::string p_kind = "cliqueness";
    plot->add_option("inputs", p_inputs, "Diagram files (csv/json)")->required();
    plot->add_option("-o,--output", p_out, "SVG path, '-' for stdout");
    plot->add_option("--kind", p_kind, "Fallback convention")->transform(kinds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*compute) {
            auto loaded = load_graph(c_input);
            auto res = run({loaded.graph, parse_filtration_kind(c_kind), c_dim, c_drop});
            if (!c_weights.empty()) {
                auto out = open_out(c_weights);
                write_weights_csv(out, cliqueness_map(loaded.graph), &loaded.graph);
            }
            if (!c_filtration.empty()) {
                auto out = open_out(c_filtration);
                FilteredComplex fc;
                switch (parse_filtration_kind(c_kind)) {
                    case FiltrationKind::Cliqueness: fc = build_filtered_complex(cliqueness_map(loaded.graph), c_dim); break;
                    case FiltrationKind::Clique: fc = build_clique_filtration(loaded.graph, c_dim); break;
                    case FiltrationKind::Power: fc = build_power_filtration(loaded.graph, c_dim); break;
                }
                write_filtration(out, fc);
            }
            std::string prefix = c_out;
            if (prefix.empty()) {
                if (c_input == "-" || c_input.rfind("fixture:", 0) == 0) prefix = "-";
                else prefix = (fs::path(c_input).parent_path() / fs::path(c_input).stem()).string();
            }
            std::vector<std::string> written;
            write_diagrams(res.diagrams, c_format, prefix, c_float, &written);
            print_report(std::cerr, res.report, loaded.stats);
            for (const auto& w : written) std::cerr << "wrote " << w << '\n';
            return Exit::ok;
        }
        if (*compare) {
            std::vector<PersistenceDiagram> da, db;
            if (cmp_graphs) {
                da = diagrams_of(load_graph(a_path).graph, parse_filtration_kind(cmp_kind), cmp_dim.value_or(1));
                db = diagrams_of(load_graph(b_path).graph, parse_filtration_kind(cmp_kind), cmp_dim.value_or(1));
            } else {
                da = load_diagrams(a_path, parse_filtration_kind(cmp_kind));
                db = load_diagrams(b_path, parse_filtration_kind(cmp_kind));
            }
            std::map<std::size_t, const PersistenceDiagram*> ma, mb;
            for (const auto& d : da) ma[d.dimension] = &d;
            for (const auto& d : db) mb[d.dimension] = &d;
            std::vector<std::size_t> dims;
            if (cmp_dim) dims.push_back(*cmp_dim);
            else {
                for (const auto& [p, _] : ma) dims.push_back(p);
                for (const auto& [p, _] : mb)
                    if (!ma.count(p)) dims.push_back(p);
                std::sort(dims.begin(), dims.end());
            }
            for (auto p : dims) {
                PersistenceDiagram empty_a, empty_b;
                const auto* x = ma.count(p) ? ma[p] : nullptr;
                const auto* y = mb.count(p) ? mb[p] : nullptr;
                if (!x && !y) throw InputError("no H" + std::to_string(p) + " diagram in either input");
                // A dimension missing from one file is an empty diagram of the other's convention.
                if (!x) { empty_a.dimension = p; empty_a.kind = y->kind; empty_a.direction = y->direction; x = &empty_a; }
                if (!y) { empty_b.dimension = p; empty_b.kind = x->kind; empty_b.direction = x->direction; y = &empty_b; }
                print_comparison(std::cout, *x, *y, cmp_float);
            }
            return Exit::ok;
        }
        if (*generate) {
            UnweightedGraph g;
            std::vector<std::pair<double, double>> coords;
            if (g_model == "sbm") {
                g = sample_sbm({g_blocks, g_pin, g_pout, g_seed});
            } else if (g_model == "rgg") {
                auto r = sample_circle_rgg({g_n, g_radius, g_seed});
                g = r.graph;
                coords = r.coordinates;
            } else {
                if (g_fixture.empty()) throw InputError("generate fixture needs a fixture name");
                try {
                    g = fixture(g_fixture);
                } catch (const std::domain_error& e) {
                    throw InputError(e.what());
                }
            }
            if (g_add_edge) g = add_random_edge(g, g_seed);
            if (!g_coords.empty()) {
                if (coords.empty()) throw InputError("--coords only applies to rgg");
                auto out = open_out(g_coords);
                out << "vertex,x,y\n" << std::setprecision(17);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    out << i << ',' << coords[i].first << ',' << coords[i].second << '\n';
            }
            if (g_out == "-") {
                write_edge_list(std::cout, g);
            } else {
                auto out = open_out(g_out);
                out << "# " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
                write_edge_list(out, g);
            }
            return Exit::ok;
        }
        if (*experiment) return run_experiment(e_name, e_opts);
        if (*plot) {
            std::vector<PersistenceDiagram> all;
            for (const auto& path : p_inputs)
                for (auto& d : load_diagrams(path, parse_filtration_kind(p_kind))) all.push_back(std::move(d));
            if (p_out == "-") {
                write_diagram_svg(std::cout, all);
            } else {
                auto out = open_out(p_out);
                write_diagram_svg(out, all);
            }
            return Exit::ok;
        }
    } catch (const InputError& e) {
        complain(e.what());
        return Exit::input;
    } catch (const ParseError& e) {
        complain("line " + std::to_string(e.line()) + ": " + e.what());
        return Exit::input;
    } catch (const std::invalid_argument& e) {
        complain(e.what());
        return Exit::input;
    } catch (const std::domain_error& e) {
        complain(e.what());
        return Exit::input;
    } catch (const std::out_of_range& e) {
        complain(e.what());
        return Exit::input;
    } catch (const fs::filesystem_error& e) {
        complain(e.what());
        return Exit::input;
    } catch (const std::exception& e) {
        complain(std::string("internal: ") + e.what());
        return Exit::internal;
    }
    return Exit::usage;
}
