#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "weyl/graph.hpp"
#include "weyl/root_system.hpp"

namespace weyl {

// JSON graph format: {"n": int, "colors": [...], "labels": [...],
// "edges": [[u,v], ...]} with u < v, edges sorted.
inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    nlohmann::json colors = nlohmann::json::array();
    for (int v = 0; v < g.size(); ++v) {
        switch (g.color(v)) {
            case Color::short_v: colors.push_back("s"); break;
            case Color::long_v: colors.push_back("l"); break;
            default: colors.push_back(nullptr);
        }
    }
    j["colors"] = std::move(colors);
    if (g.has_labels()) {
        nlohmann::json labels = nlohmann::json::array();
        for (int v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
        j["labels"] = std::move(labels);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < g.size(); ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) edges.push_back({u, v});
        });
    j["edges"] = std::move(edges);
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    Graph g(n);
    if (j.contains("colors") && !j["colors"].is_null()) {
        const auto& colors = j["colors"];
        if (static_cast<int>(colors.size()) != n)
            throw std::domain_error("graph json: colors length mismatch");
        for (int v = 0; v < n; ++v) {
            if (colors[v].is_null()) continue;
            std::string s = colors[v].get<std::string>();
            if (s == "s")
                g.set_color(v, Color::short_v);
            else if (s == "l")
                g.set_color(v, Color::long_v);
            else
                throw std::domain_error("graph json: unknown color '" + s + "'");
        }
    }
    if (j.contains("labels") && !j["labels"].is_null()) {
        const auto& labels = j["labels"];
        for (int v = 0; v < n && v < static_cast<int>(labels.size()); ++v)
            if (!labels[v].is_null()) g.set_label(v, labels[v].get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::domain_error("graph json: bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

inline Graph graph_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open graph file: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

// Standard graph6 byte encoding (uncolored graphs, n <= 62 or long form).
inline std::string to_graph6(const Graph& g) {
    int n = g.size();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return s;
}

inline Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    if (s.empty()) throw std::domain_error("graph6: empty input");
    long long n;
    if (s[0] == 126) {
        if (s.size() < 4) throw std::domain_error("graph6: truncated header");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (s[k] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n < 0 || n > 512) throw std::domain_error("graph6: vertex count out of range");
    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                if (pos >= s.size()) throw std::domain_error("graph6: truncated data");
                acc = s[pos++] - 63;
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(i, static_cast<int>(j));
            --nbits;
        }
    return g;
}

// DOT output; long vertices drawn filled, short ones unfilled.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.size(); ++v) {
        out << "  v" << v << " [";
        if (!g.label(v).empty()) out << "label=\"" << g.label(v) << "\" ";
        if (g.color(v) == Color::long_v)
            out << "style=filled fillcolor=black fontcolor=white";
        else
            out << "style=solid";
        out << "];\n";
    }
    for (int u = 0; u < g.size(); ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) out << "  v" << u << " -- v" << v << ";\n";
        });
    out << "}\n";
    return out.str();
}

inline nlohmann::json root_system_to_json(const RootSystem& rs) {
    nlohmann::json j;
    j["type"] = rs.type().name();
    j["scaled_by"] = 2;
    nlohmann::json roots = nlohmann::json::array();
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& r : rs.roots()) {
        roots.push_back(r.coords);
        classes.push_back(r.length_class == Color::short_v ? "short" : "long");
    }
    j["roots"] = std::move(roots);
    j["classes"] = std::move(classes);
    return j;
}

} // namespace weyl
