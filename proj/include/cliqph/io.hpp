#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "persistence.hpp"
#include "rational.hpp"

namespace cliqph {

inline std::string format_coord(const Coord& c, bool as_float) {
    if (c.is_infinite()) return "inf";
    if (!as_float) return c.value().to_string();
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), c.value().to_double());
    return ec == std::errc{} ? std::string(buf.data(), end) : c.value().to_string();
}

/// Rows `dim,birth,death` after a header line; essential deaths read `inf`.
inline void write_diagram_csv(std::ostream& out, const PersistenceDiagram& d, bool as_float = false) {
    out << "dim,birth,death\n";
    for (const auto& p : d.points)
        out << d.dimension << ',' << format_coord(p.birth, as_float) << ',' << format_coord(p.death, as_float) << '\n';
}

inline Direction infer_direction(const std::vector<DiagramPoint>& points, Direction fallback) {
    for (const auto& p : points) {
        if (p.death.is_infinite()) continue;
        if (p.birth > p.death) return Direction::Descending;
        if (p.birth < p.death) return Direction::Ascending;
    }
    return fallback;
}

/// Reads diagram CSV rows, one diagram per dimension present (ascending
/// dimension order). The convention is inferred from the points when it can
/// be, otherwise `fallback_kind` decides.
inline std::vector<PersistenceDiagram> read_diagram_csv(std::istream& in,
                                                        FiltrationKind fallback_kind = FiltrationKind::Cliqueness) {
    std::map<std::size_t, PersistenceDiagram> by_dim;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.rfind("dim,", first) == first) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) {
            auto a = f.find_first_not_of(" \t"), b = f.find_last_not_of(" \t");
            fields.push_back(a == std::string::npos ? "" : f.substr(a, b - a + 1));
        }
        if (fields.size() != 3) throw ParseError(lineno, "expected dim,birth,death");
        try {
            std::size_t used = 0;
            const long long dim = std::stoll(fields[0], &used);
            if (dim < 0 || used != fields[0].size()) throw std::invalid_argument(fields[0]);
            DiagramPoint p;
            p.birth = Coord::parse(fields[1]);
            p.death = Coord::parse(fields[2]);
            if (p.birth.is_infinite()) throw std::invalid_argument("infinite birth");
            auto& d = by_dim[static_cast<std::size_t>(dim)];
            d.dimension = static_cast<std::size_t>(dim);
            p.birth_index = d.points.size();
            d.points.push_back(p);
        } catch (const std::logic_error& e) {
            throw ParseError(lineno, std::string("bad diagram row: ") + e.what());
        }
    }
    std::vector<PersistenceDiagram> out;
    for (auto& [dim, d] : by_dim) {
        d.direction = infer_direction(d.points, direction_of(fallback_kind));
        d.kind = d.direction == direction_of(fallback_kind)
                     ? fallback_kind
                     : (d.direction == Direction::Descending ? FiltrationKind::Cliqueness : FiltrationKind::Clique);
        out.push_back(std::move(d));
    }
    return out;
}

inline nlohmann::json diagram_to_json(const PersistenceDiagram& d) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : d.points)
        points.push_back({{"birth", p.birth.to_string()},
                          {"death", p.death.to_string()},
                          {"birth_float", p.birth.to_double()},
                          {"death_float", p.death.is_infinite() ? nlohmann::json("inf") : nlohmann::json(p.death.to_double())}});
    return {{"dimension", d.dimension},
            {"kind", std::string(to_string(d.kind))},
            {"direction", d.direction == Direction::Descending ? "descending" : "ascending"},
            {"points", points}};
}

inline PersistenceDiagram diagram_from_json(const nlohmann::json& j) {
    PersistenceDiagram d;
    d.dimension = j.at("dimension").get<std::size_t>();
    d.kind = parse_filtration_kind(j.at("kind").get<std::string>());
    const auto dir = j.at("direction").get<std::string>();
    if (dir != "descending" && dir != "ascending") throw std::invalid_argument("bad direction '" + dir + "'");
    d.direction = dir == "descending" ? Direction::Descending : Direction::Ascending;
    for (const auto& p : j.at("points")) {
        DiagramPoint pt;
        pt.birth = Coord::parse(p.at("birth").get<std::string>());
        pt.death = Coord::parse(p.at("death").get<std::string>());
        pt.birth_index = d.points.size();
        d.points.push_back(pt);
    }
    return d;
}

/// Reads either a JSON diagram (object or array of objects) or CSV rows.
inline std::vector<PersistenceDiagram> read_diagrams(std::istream& in,
                                                     FiltrationKind fallback_kind = FiltrationKind::Cliqueness) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        std::vector<PersistenceDiagram> out;
        try {
            auto j = nlohmann::json::parse(text);
            if (j.is_array())
                for (const auto& e : j) out.push_back(diagram_from_json(e));
            else
                out.push_back(diagram_from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(1, std::string("bad diagram JSON: ") + e.what());
        } catch (const std::logic_error& e) {
            throw ParseError(1, std::string("bad diagram JSON: ") + e.what());
        }
        return out;
    }
    std::istringstream ss(text);
    return read_diagram_csv(ss, fallback_kind);
}

/// Static 600x600 SVG scatter plot. Dimension 0 points are blue, dimension 1
/// red; essential points are arrows at the plot edge in the death direction.
inline void write_diagram_svg(std::ostream& out, const std::vector<PersistenceDiagram>& diagrams) {
    constexpr double size = 600, margin = 60;
    double lo = 0, hi = 1;
    bool any = false;
    Direction dir = diagrams.empty() ? Direction::Descending : diagrams.front().direction;
    for (const auto& d : diagrams)
        for (const auto& p : d.points)
            for (const Coord* c : {&p.birth, &p.death})
                if (c->is_finite()) {
                    const double v = c->to_double();
                    if (!any) { lo = std::min(0.0, v); hi = std::max(v, lo + 1e-9); any = true; }
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
    if (hi - lo < 1e-9) hi = lo + 1;
    const double pad = 0.08 * (hi - lo);
    lo -= pad;
    hi += pad;
    auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * (size - 2 * margin); };
    auto sy = [&](double v) { return size - margin - (v - lo) / (hi - lo) * (size - 2 * margin); };
    static constexpr std::array<const char*, 4> colors{"#1f4fd8", "#d81f1f", "#2a9d3a", "#8a2be2"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << margin << "\" y1=\"" << size - margin << "\" x2=\"" << size - margin << "\" y2=\""
        << size - margin << "\"/>\n"
        << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << size - margin
        << "\"/>\n</g>\n";
    out << "<text x=\"300\" y=\"585\" text-anchor=\"middle\" font-size=\"14\">birth</text>\n"
        << "<text x=\"18\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 300)\">death</text>\n";
    auto tick = [&](double v) {
        char label[32];
        std::snprintf(label, sizeof label, "%.3g", v);
        out << "<text x=\"" << sx(v) << "\" y=\"" << size - margin + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
            << label << "</text>\n";
        out << "<text x=\"" << margin - 6 << "\" y=\"" << sy(v) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
            << label << "</text>\n";
    };
    tick(lo + pad);
    tick(hi - pad);
    out << "<line id=\"diagonal\" x1=\"" << sx(lo) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(hi) << "\" y2=\""
        << sy(hi) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (const auto& d : diagrams) {
        const char* color = colors[std::min<std::size_t>(d.dimension, colors.size() - 1)];
        out << "<g class=\"H" << d.dimension << "\" fill=\"" << color << "\" stroke=\"" << color << "\">\n";
        for (const auto& p : d.points) {
            const double x = sx(p.birth.to_double());
            if (p.death.is_finite()) {
                out << "<circle class=\"point\" cx=\"" << x << "\" cy=\"" << sy(p.death.to_double())
                    << "\" r=\"4\"/>\n";
            } else {
                // Descending diagrams die towards -inf (bottom), ascending towards +inf (top).
                const bool down = dir == Direction::Descending;
                const double tip = down ? size - margin - 4 : margin + 4;
                const double tail = down ? tip - 30 : tip + 30;
                const double head = down ? tip - 8 : tip + 8;
                out << "<g class=\"arrow\"><line x1=\"" << x << "\" y1=\"" << tail << "\" x2=\"" << x << "\" y2=\""
                    << tip << "\" stroke-width=\"2\"/><polygon points=\"" << x - 5 << ',' << head << ' ' << x + 5 << ','
                    << head << ' ' << x << ',' << tip << "\"/></g>\n";
            }
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace cliqph
