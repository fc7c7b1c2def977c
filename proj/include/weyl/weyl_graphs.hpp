#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/canonical.hpp"
#include "weyl/graph.hpp"
#include "weyl/root_system.hpp"

namespace weyl {

// Weyl graph of a crystallographic type: one vertex per root pair {a, -a},
// adjacency = orthogonality, colors = length classes when the system has
// two of them. The pair representative is the lexicographically larger
// scaled vector, and vertices follow the root-system order.
inline Graph weyl_graph(const RootType& type) {
    RootSystem rs = RootSystem::build(type);
    std::vector<const Root*> reps;
    for (const auto& r : rs.roots()) {
        bool positive = false;
        for (int c : r.coords) {
            if (c != 0) {
                positive = c > 0;
                break;
            }
        }
        if (positive) reps.push_back(&r);
    }
    bool colored = rs.two_lengths();
    Graph g(static_cast<int>(reps.size()));
    for (size_t i = 0; i < reps.size(); ++i) {
        if (colored) g.set_color(static_cast<int>(i), reps[i]->length_class);
        std::string lab;
        for (size_t k = 0; k < reps[i]->coords.size(); ++k)
            lab += (k ? "," : "(") + std::to_string(reps[i]->coords[k]);
        g.set_label(static_cast<int>(i), lab + ")");
        for (size_t j = 0; j < i; ++j)
            if (inner_product(*reps[i], *reps[j]) == 0)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

inline Graph weyl_graph(const std::string& type) { return weyl_graph(RootType::parse(type)); }

// Root indices of the pair representatives, in weyl_graph vertex order.
inline std::vector<int> pair_representative_roots(const RootSystem& rs) {
    std::vector<int> reps;
    for (size_t i = 0; i < rs.roots().size(); ++i) {
        for (int c : rs.roots()[i].coords) {
            if (c != 0) {
                if (c > 0) reps.push_back(static_cast<int>(i));
                break;
            }
        }
    }
    return reps;
}

// Action of a root permutation on the root pairs {a, -a}, i.e. on the
// vertices of weyl_graph of the same system.
inline Perm induced_pair_perm(const RootSystem& rs, const Perm& root_perm) {
    std::vector<int> reps = pair_representative_roots(rs);
    std::vector<int> vertex_of_root(rs.roots().size(), -1);
    for (size_t v = 0; v < reps.size(); ++v) {
        vertex_of_root[reps[v]] = static_cast<int>(v);
        std::vector<int> neg = rs.roots()[reps[v]].coords;
        for (int& c : neg) c = -c;
        vertex_of_root[rs.index_of(neg)] = static_cast<int>(v);
    }
    std::vector<int> img(reps.size());
    for (size_t v = 0; v < reps.size(); ++v) img[v] = vertex_of_root[root_perm(reps[v])];
    return Perm::from_images(std::move(img));
}

// --- the four exceptional graphs ------------------------------------------------

namespace detail {

using AdjTable = std::vector<std::pair<const char*, std::vector<const char*>>>;

inline Graph graph_from_table(const AdjTable& table) {
    std::map<std::string, int> index;
    int n = 0;
    for (const auto& [v, nbrs] : table)
        if (!index.count(v)) index[v] = n++;
    for (const auto& [v, nbrs] : table)
        for (const char* w : nbrs)
            if (!index.count(w)) index[w] = n++;
    Graph g(n);
    for (const auto& [v, nbrs] : table)
        for (const char* w : nbrs) g.add_edge(index[v], index[w]);
    for (auto& [name, idx] : index) {
        g.set_label(idx, name);
        // x- and z-families are short, y- and w-families long
        g.set_color(idx, (name[0] == 'x' || name[0] == 'z') ? Color::short_v : Color::long_v);
    }
    return g;
}

inline const AdjTable& g24a_table() {
    static const AdjTable t = {
        {"x1", {"x2", "x3", "y12", "y21", "y13", "y31", "y14", "y41"}},
        {"x2", {"x3", "x4", "y12", "y21", "y23", "y32", "y24", "y42"}},
        {"x3", {"x4", "x1", "y13", "y31", "y23", "y32", "y34", "y43"}},
        {"x4", {"x1", "x2", "y14", "y41", "y24", "y42", "y34", "y43"}},
        {"y12", {"y21", "y34", "y43"}},
        {"y21", {"y12", "y34", "y43"}},
        {"y34", {"y12", "y21", "y43"}},
        {"y13", {"y31", "y24", "y42"}},
        {"y31", {"y13", "y24", "y42"}},
        {"y24", {"y13", "y31", "y42"}},
        {"y14", {"y41", "y23", "y32"}},
        {"y41", {"y14", "y23", "y32"}},
        {"y23", {"y14", "y41", "y32"}},
        {"x5", {"x6", "x7", "y12", "y34", "y13", "y24", "y14", "y23"}},
        {"x6", {"x7", "x8", "y12", "y34", "y42", "y31", "y32", "y41"}},
        {"x7", {"x8", "x5", "y43", "y21", "y13", "y24", "y32", "y41"}},
        {"x8", {"x5", "x6", "y43", "y21", "y42", "y31", "y14", "y23"}},
        {"x09", {"x10", "x11", "y12", "y43", "y13", "y42", "y14", "y32"}},
        {"x10", {"x11", "x12", "y12", "y43", "y24", "y31", "y23", "y41"}},
        {"x11", {"x12", "x09", "y34", "y21", "y13", "y42", "y23", "y41"}},
        {"x12", {"x09", "x10", "y34", "y21", "y24", "y31", "y14", "y32"}},
    };
    return t;
}

inline const AdjTable& g24b_table() {
    // differs from g24a only in the last two adjacencies of each of the
    // last four rows
    static const AdjTable t = {
        {"x1", {"x2", "x3", "y12", "y21", "y13", "y31", "y14", "y41"}},
        {"x2", {"x3", "x4", "y12", "y21", "y23", "y32", "y24", "y42"}},
        {"x3", {"x4", "x1", "y13", "y31", "y23", "y32", "y34", "y43"}},
        {"x4", {"x1", "x2", "y14", "y41", "y24", "y42", "y34", "y43"}},
        {"y12", {"y21", "y34", "y43"}},
        {"y21", {"y12", "y34", "y43"}},
        {"y34", {"y12", "y21", "y43"}},
        {"y13", {"y31", "y24", "y42"}},
        {"y31", {"y13", "y24", "y42"}},
        {"y24", {"y13", "y31", "y42"}},
        {"y14", {"y41", "y23", "y32"}},
        {"y41", {"y14", "y23", "y32"}},
        {"y23", {"y14", "y41", "y32"}},
        {"x5", {"x6", "x7", "y12", "y34", "y13", "y24", "y14", "y23"}},
        {"x6", {"x7", "x8", "y12", "y34", "y42", "y31", "y32", "y41"}},
        {"x7", {"x8", "x5", "y43", "y21", "y13", "y24", "y32", "y41"}},
        {"x8", {"x5", "x6", "y43", "y21", "y42", "y31", "y14", "y23"}},
        {"x09", {"x10", "x11", "y12", "y43", "y13", "y42", "y41", "y23"}},
        {"x10", {"x11", "x12", "y12", "y43", "y24", "y31", "y32", "y14"}},
        {"x11", {"x12", "x09", "y34", "y21", "y13", "y42", "y32", "y14"}},
        {"x12", {"x09", "x10", "y34", "y21", "y24", "y31", "y41", "y23"}},
    };
    return t;
}

inline const AdjTable& g32a_table() {
    static const AdjTable t = {
        {"x1", {"x2", "x3", "x4", "y1", "y2", "y3", "y4", "y5", "y6"}},
        {"x2", {"x3", "y1", "y2", "y31", "y35", "y51", "y53"}},
        {"x3", {"x4", "y3", "y4", "y13", "y15", "y51", "y53"}},
        {"x4", {"x2", "y5", "y6", "y13", "y15", "y31", "y35"}},
        {"y1", {"y2", "y13", "y15", "z13", "z14", "z15", "z16"}},
        {"y2", {"y1", "y13", "y15", "z23", "z24", "z25", "z26"}},
        {"y3", {"y4", "y31", "y35", "z13", "z23", "z35", "z36"}},
        {"y4", {"y3", "y31", "y35", "z14", "z24", "z45", "z46"}},
        {"y5", {"y6", "y51", "y53", "z15", "z25", "z35", "z45"}},
        {"y6", {"y5", "y51", "y53", "z16", "z26", "z36", "z46"}},
        {"z13", {"z14", "z23", "z24"}},
        {"z14", {"z23", "z24"}},
        {"z23", {"z24"}},
        {"z15", {"z16", "z25", "z26"}},
        {"z16", {"z25", "z26"}},
        {"z25", {"z26"}},
        {"z35", {"z36", "z45", "z46"}},
        {"z36", {"z45", "z46"}},
        {"z45", {"z46"}},
        {"y13", {"y15", "z13", "z14", "z25", "z26"}},
        {"y15", {"y13", "z15", "z16", "z23", "z24"}},
        {"y31", {"y35", "z13", "z23", "z45", "z46"}},
        {"y35", {"y31", "z35", "z36", "z14", "z24"}},
        {"y51", {"y53", "z15", "z25", "z36", "z46"}},
        {"y53", {"y51", "z35", "z45", "z16", "z26"}},
        {"w1", {"w2", "w3", "z13", "z24", "z15", "z26", "z35", "z46"}},
        {"w2", {"w3", "w4", "z13", "z24", "z16", "z25", "z36", "z45"}},
        {"w3", {"w4", "w1", "z14", "z23", "z15", "z26", "z36", "z45"}},
        {"w4", {"w1", "w2", "z14", "z23", "z16", "z25", "z35", "z46"}},
    };
    return t;
}

inline const AdjTable& g32b_table() {
    // differs from g32a only in the z-adjacencies of the w-row tails
    static const AdjTable t = {
        {"x1", {"x2", "x3", "x4", "y1", "y2", "y3", "y4", "y5", "y6"}},
        {"x2", {"x3", "y1", "y2", "y31", "y35", "y51", "y53"}},
        {"x3", {"x4", "y3", "y4", "y13", "y15", "y51", "y53"}},
        {"x4", {"x2", "y5", "y6", "y13", "y15", "y31", "y35"}},
        {"y1", {"y2", "y13", "y15", "z13", "z14", "z15", "z16"}},
        {"y2", {"y1", "y13", "y15", "z23", "z24", "z25", "z26"}},
        {"y3", {"y4", "y31", "y35", "z13", "z23", "z35", "z36"}},
        {"y4", {"y3", "y31", "y35", "z14", "z24", "z45", "z46"}},
        {"y5", {"y6", "y51", "y53", "z15", "z25", "z35", "z45"}},
        {"y6", {"y5", "y51", "y53", "z16", "z26", "z36", "z46"}},
        {"z13", {"z14", "z23", "z24"}},
        {"z14", {"z23", "z24"}},
        {"z23", {"z24"}},
        {"z15", {"z16", "z25", "z26"}},
        {"z16", {"z25", "z26"}},
        {"z25", {"z26"}},
        {"z35", {"z36", "z45", "z46"}},
        {"z36", {"z45", "z46"}},
        {"z45", {"z46"}},
        {"y13", {"y15", "z13", "z14", "z25", "z26"}},
        {"y15", {"y13", "z15", "z16", "z23", "z24"}},
        {"y31", {"y35", "z13", "z23", "z45", "z46"}},
        {"y35", {"y31", "z35", "z36", "z14", "z24"}},
        {"y51", {"y53", "z15", "z25", "z36", "z46"}},
        {"y53", {"y51", "z35", "z45", "z16", "z26"}},
        {"w1", {"w2", "w3", "z13", "z24", "z15", "z26", "z36", "z45"}},
        {"w2", {"w3", "w4", "z13", "z24", "z16", "z25", "z35", "z46"}},
        {"w3", {"w4", "w1", "z14", "z23", "z15", "z26", "z35", "z46"}},
        {"w4", {"w1", "w2", "z14", "z23", "z16", "z25", "z36", "z45"}},
    };
    return t;
}

} // namespace detail

enum class NamedGraph { g24a, g24b, g32a, g32b };

inline Graph named_graph(NamedGraph which) {
    switch (which) {
        case NamedGraph::g24a: return detail::graph_from_table(detail::g24a_table());
        case NamedGraph::g24b: return detail::graph_from_table(detail::g24b_table());
        case NamedGraph::g32a: return detail::graph_from_table(detail::g32a_table());
        case NamedGraph::g32b: return detail::graph_from_table(detail::g32b_table());
    }
    throw std::domain_error("named_graph: unknown graph");
}

inline Graph named_graph(const std::string& name) {
    if (name == "g24a") return named_graph(NamedGraph::g24a);
    if (name == "g24b") return named_graph(NamedGraph::g24b);
    if (name == "g32a") return named_graph(NamedGraph::g32a);
    if (name == "g32b") return named_graph(NamedGraph::g32b);
    throw std::domain_error("named_graph: unknown graph '" + name + "'");
}

// --- local profiles ------------------------------------------------------------

struct LocalProfile {
    bool homogeneous = false;
    // canonical forms of the local graphs, present per vertex class
    std::optional<std::string> delta;       // uncolored graphs
    std::optional<std::string> delta_short; // at short vertices
    std::optional<std::string> delta_long;  // at long vertices
    int sample_short = -1, sample_long = -1, sample = -1; // representative vertices
};

inline LocalProfile local_profile(const Graph& g) {
    if (g.size() == 0) throw std::domain_error("local_profile: empty graph");
    LocalProfile lp;
    lp.homogeneous = true;
    auto scan = [&](Color c, std::optional<std::string>& slot, int& sample) {
        for (int v : g.vertices_of_color(c)) {
            std::string f = canonical_form(g.local_graph(v));
            if (!slot) {
                slot = std::move(f);
                sample = v;
            } else if (*slot != f) {
                lp.homogeneous = false;
            }
        }
    };
    if (g.is_colored()) {
        scan(Color::short_v, lp.delta_short, lp.sample_short);
        scan(Color::long_v, lp.delta_long, lp.sample_long);
    } else {
        scan(Color::none, lp.delta, lp.sample);
    }
    return lp;
}

struct F4LocalCheck {
    bool ok = false;
    std::string reason; // names the first offending vertex on failure
};

namespace detail {
inline const std::string& wb3_form() {
    static const std::string f = canonical_form(weyl_graph("B3"));
    return f;
}
inline const std::string& wc3_form() {
    static const std::string f = canonical_form(weyl_graph("C3"));
    return f;
}
} // namespace detail

// Locally like W(F4): every short local graph is W(B3) and every long local
// graph is W(C3), as bichromatic graphs.
inline F4LocalCheck is_locally_like_f4(const Graph& g) {
    if (!g.is_colored())
        throw std::domain_error("is_locally_like_f4: graph carries no colors");
    for (int v = 0; v < g.size(); ++v) {
        if (g.color(v) == Color::none)
            return {false, "vertex " + std::to_string(v) + " is uncolored"};
        bool shrt = g.color(v) == Color::short_v;
        if (g.degree(v) != 9)
            return {false, "vertex " + std::to_string(v) + " has degree " +
                               std::to_string(g.degree(v)) + ", expected 9"};
        const std::string& want = shrt ? detail::wb3_form() : detail::wc3_form();
        if (canonical_form(g.local_graph(v)) != want)
            return {false, std::string("local graph at ") + (shrt ? "short" : "long") +
                               " vertex " + std::to_string(v) + " is not W(" +
                               (shrt ? "B3" : "C3") + ")"};
    }
    return {true, ""};
}

// --- mu parameters ---------------------------------------------------------------

// mu over same-type distance-2 pairs (values 1..3), mu_s / mu_l over mixed
// pairs (values 0..1); common neighborhoods are checked to have the exact
// component shape before any counting.
struct MuProfile {
    std::map<int, long long> mu;   // value -> pair count
    std::map<int, long long> mu_s;
    std::map<int, long long> mu_l;
    std::map<int, long long> mu_mixed_sum; // (mu_s + mu_l) per mixed pair
    bool mu_constant = false, mu_s_constant = false, mu_l_constant = false;
    bool mu_mixed_sum_constant = false;
    int mu_value = -1, mu_s_value = -1, mu_l_value = -1, mu_mixed_sum_value = -1;
};

inline MuProfile mu_profile(const Graph& g) {
    F4LocalCheck chk = is_locally_like_f4(g);
    if (!chk.ok) throw std::domain_error("mu_profile: " + chk.reason);

    MuProfile mp;
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y) {
            if (g.adjacent(x, y)) continue;
            Bitset common = g.row(x) & g.row(y);
            if (!common.any()) continue; // distance > 2
            std::vector<int> cs = common.to_vector();
            if (g.color(x) == g.color(y)) {
                // same type: common neighborhood must be a coclique of the
                // opposite type
                for (size_t i = 0; i < cs.size(); ++i) {
                    if (g.color(cs[i]) == g.color(x))
                        throw internal_error("mu: same-type common neighbor");
                    for (size_t j = i + 1; j < cs.size(); ++j)
                        if (g.adjacent(cs[i], cs[j]))
                            throw internal_error("mu: common neighborhood not a coclique");
                }
                int mu = static_cast<int>(cs.size());
                if (mu < 1 || mu > 3) throw internal_error("mu outside {1,2,3}");
                ++mp.mu[mu];
            } else {
                // mixed type: disjoint union of at most one K2 per color
                Graph sub = g.induced(cs);
                int short_pairs = 0, long_pairs = 0;
                std::vector<char> used(cs.size(), 0);
                for (size_t i = 0; i < cs.size(); ++i) {
                    if (used[i]) continue;
                    int partner = -1;
                    for (size_t j = i + 1; j < cs.size(); ++j)
                        if (!used[j] && sub.adjacent(static_cast<int>(i), static_cast<int>(j))) {
                            if (partner != -1)
                                throw internal_error("mu_s/mu_l: component larger than K2");
                            partner = static_cast<int>(j);
                        }
                    if (partner == -1)
                        throw internal_error("mu_s/mu_l: isolated common neighbor");
                    if (sub.color(static_cast<int>(i)) != sub.color(partner))
                        throw internal_error("mu_s/mu_l: mixed-color K2");
                    used[i] = used[partner] = 1;
                    (sub.color(static_cast<int>(i)) == Color::short_v ? short_pairs
                                                                      : long_pairs)++;
                }
                if (short_pairs > 1 || long_pairs > 1)
                    throw internal_error("mu_s/mu_l outside {0,1}");
                ++mp.mu_s[short_pairs];
                ++mp.mu_l[long_pairs];
                ++mp.mu_mixed_sum[short_pairs + long_pairs];
            }
        }
    auto classify = [](const std::map<int, long long>& hist, bool& constant, int& value) {
        if (hist.size() == 1) {
            constant = true;
            value = hist.begin()->first;
        }
    };
    classify(mp.mu, mp.mu_constant, mp.mu_value);
    classify(mp.mu_s, mp.mu_s_constant, mp.mu_s_value);
    classify(mp.mu_l, mp.mu_l_constant, mp.mu_l_value);
    classify(mp.mu_mixed_sum, mp.mu_mixed_sum_constant, mp.mu_mixed_sum_value);
    return mp;
}

// Partition of each color class into its 4-clique components (short blocks
// first). Errors if any monochromatic component is not a 4-clique.
inline Partition four_clique_partition(const Graph& g) {
    F4LocalCheck chk = is_locally_like_f4(g);
    if (!chk.ok) throw std::domain_error("four_clique_partition: " + chk.reason);
    Partition pi;
    for (Color c : {Color::short_v, Color::long_v}) {
        for (auto& comp : g.monochromatic_components(c)) {
            if (comp.size() != 4 || !g.is_clique(comp))
                throw std::domain_error("four_clique_partition: a monochromatic component is "
                                        "not a 4-clique");
            pi.blocks.push_back(std::move(comp));
        }
    }
    return pi;
}

// Every long vertex has a neighbor in every short component and vice versa.
inline bool is_tightly_connected(const Graph& g) {
    auto reaches_all = [&](Color vertex_color, Color comp_color) {
        auto comps = g.monochromatic_components(comp_color);
        for (int v : g.vertices_of_color(vertex_color))
            for (const auto& comp : comps) {
                bool hit = false;
                for (int w : comp)
                    if (g.adjacent(v, w)) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
        return true;
    };
    return reaches_all(Color::long_v, Color::short_v) &&
           reaches_all(Color::short_v, Color::long_v);
}

// --- inflation constructions -----------------------------------------------------

namespace detail {

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// checks: connected, bipartite, locally \bar{K}_deg; returns the bipartition
inline std::vector<int> inflation_precheck(const Graph& lambda, int deg, const char* who) {
    if (!lambda.is_connected()) throw std::domain_error(std::string(who) + ": graph not connected");
    auto sides = lambda.bipartition();
    if (!sides) throw std::domain_error(std::string(who) + ": graph not bipartite");
    for (int v = 0; v < lambda.size(); ++v) {
        if (lambda.degree(v) != deg)
            throw std::domain_error(std::string(who) + ": vertex " + std::to_string(v) +
                                    " has degree " + std::to_string(lambda.degree(v)) +
                                    ", expected " + std::to_string(deg));
        if (lambda.local_graph(v).has_any_edge())
            throw std::domain_error(std::string(who) + ": neighborhood of vertex " +
                                    std::to_string(v) + " is not a coclique");
    }
    return *sides;
}

} // namespace detail

// Inflation of a connected bipartite locally-\bar{K}_6 graph: one 4-clique
// per vertex, cross edges through per-directed-edge 2-subsets a(x,y) of
// [4]. The bijections are a free choice; we fix them from the seed so
// distinct seeds explore distinct outputs.
inline Graph inflate_k6(const Graph& lambda, uint64_t seed) {
    std::vector<int> side = detail::inflation_precheck(lambda, 6, "inflate_k6");
    static const std::array<std::array<int, 2>, 6> subsets = {
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    // a(x, y): neighbors of x in increasing order, subsets rotated by a
    // seed-derived offset per vertex
    std::vector<std::map<int, int>> assign(lambda.size()); // y -> subset index
    for (int x = 0; x < lambda.size(); ++x) {
        std::vector<int> nb = lambda.neighbors(x);
        uint64_t off = detail::mix64(seed * 0x10001 + static_cast<uint64_t>(x)) % 6;
        for (size_t t = 0; t < nb.size(); ++t)
            assign[x][nb[t]] = static_cast<int>((t + off) % 6);
    }

    Graph g(4 * lambda.size());
    for (int x = 0; x < lambda.size(); ++x) {
        Color c = side[x] == 0 ? Color::short_v : Color::long_v;
        for (int i = 0; i < 4; ++i) {
            g.set_color(4 * x + i, c);
            g.set_label(4 * x + i, std::to_string(x) + "." + std::to_string(i));
            for (int j = i + 1; j < 4; ++j) g.add_edge(4 * x + i, 4 * x + j);
        }
    }
    for (int x = 0; x < lambda.size(); ++x)
        lambda.row(x).for_each([&](int y) {
            if (x > y) return;
            const auto& axy = subsets[assign[x].at(y)];
            const auto& ayx = subsets[assign[y].at(x)];
            for (int i : axy)
                for (int j : ayx) g.add_edge(4 * x + i, 4 * y + j);
        });

    F4LocalCheck chk = is_locally_like_f4(g);
    if (!chk.ok) throw internal_error("inflate_k6 output is not locally like W(F4): " + chk.reason);
    return g;
}

// Inflation of a connected bipartite locally-\bar{K}_3 graph. The three
// 2-subsets together with their complements exhaust the 2-subsets of [4];
// edges follow both a(x,y) x a(y,x) and the complement product.
inline Graph inflate_k3(const Graph& lambda, uint64_t seed) {
    std::vector<int> side = detail::inflation_precheck(lambda, 3, "inflate_k3");
    static const std::array<std::array<int, 2>, 3> subs = {{{0, 1}, {0, 2}, {0, 3}}};
    static const std::array<std::array<int, 2>, 3> cosubs = {{{2, 3}, {1, 3}, {1, 2}}};

    std::vector<std::map<int, int>> assign(lambda.size());
    for (int x = 0; x < lambda.size(); ++x) {
        std::vector<int> nb = lambda.neighbors(x);
        uint64_t off = detail::mix64(seed * 0x10001 + static_cast<uint64_t>(x)) % 3;
        for (size_t t = 0; t < nb.size(); ++t)
            assign[x][nb[t]] = static_cast<int>((t + off) % 3);
    }

    Graph g(4 * lambda.size());
    for (int x = 0; x < lambda.size(); ++x) {
        Color c = side[x] == 0 ? Color::short_v : Color::long_v;
        for (int i = 0; i < 4; ++i) {
            g.set_color(4 * x + i, c);
            g.set_label(4 * x + i, std::to_string(x) + "." + std::to_string(i));
            for (int j = i + 1; j < 4; ++j) g.add_edge(4 * x + i, 4 * x + j);
        }
    }
    for (int x = 0; x < lambda.size(); ++x)
        lambda.row(x).for_each([&](int y) {
            if (x > y) return;
            int ax = assign[x].at(y), ay = assign[y].at(x);
            for (int i : subs[ax])
                for (int j : subs[ay]) g.add_edge(4 * x + i, 4 * y + j);
            for (int i : cosubs[ax])
                for (int j : cosubs[ay]) g.add_edge(4 * x + i, 4 * y + j);
        });

    F4LocalCheck chk = is_locally_like_f4(g);
    if (!chk.ok) throw internal_error("inflate_k3 output is not locally like W(F4): " + chk.reason);
    return g;
}

} // namespace weyl
