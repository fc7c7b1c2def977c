#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "weyl/graph.hpp"
#include "weyl/perm.hpp"
#include "weyl/perm_group.hpp"

namespace weyl {

// Ordered partition of the vertex set; refinement state of the search.
struct Coloring {
    std::vector<std::vector<int>> cells;
};

namespace detail {

// Equitable refinement: split cells by the per-cell neighbor-count signature
// until stable. Cell order and intra-cell order are isomorphism-invariant
// except for vertex names (signatures sort lexicographically).
inline std::vector<std::vector<int>> refine_equitable(const Graph& g,
                                                      std::vector<std::vector<int>> cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Bitset> masks;
        masks.reserve(cells.size());
        for (const auto& c : cells) {
            Bitset m(g.size());
            for (int v : c) m.set(v);
            masks.push_back(std::move(m));
        }
        std::vector<std::vector<int>> out;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                out.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(masks.size());
                for (const auto& m : masks) sig.push_back(g.row(v).count_and(m));
                split[sig].push_back(v);
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, group] : split) out.push_back(std::move(group));
        }
        cells = std::move(out);
    }
    return cells;
}

inline std::vector<std::vector<int>> initial_cells(const Graph& g, bool respect_colors) {
    std::vector<std::vector<int>> cells;
    if (respect_colors && g.is_colored()) {
        for (Color c : {Color::none, Color::short_v, Color::long_v}) {
            std::vector<int> cell = g.vertices_of_color(c);
            if (!cell.empty()) cells.push_back(std::move(cell));
        }
    } else {
        std::vector<int> all(g.size());
        std::iota(all.begin(), all.end(), 0);
        cells.push_back(std::move(all));
    }
    return cells;
}

// Byte string of a discrete partition: color pattern, then the upper
// triangle of the relabeled adjacency matrix, bit-packed.
inline std::string leaf_string(const Graph& g, const std::vector<int>& labeling,
                               bool respect_colors) {
    int n = g.size();
    std::string s;
    s.reserve(4 + n + (static_cast<size_t>(n) * n) / 8 + 1);
    for (int shift = 24; shift >= 0; shift -= 8)
        s.push_back(static_cast<char>((n >> shift) & 0xff));
    if (respect_colors)
        for (int i = 0; i < n; ++i) s.push_back(static_cast<char>(g.color(labeling[i])));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.adjacent(labeling[i], labeling[j]) ? 1 : 0);
            if (++nbits == 8) {
                s.push_back(static_cast<char>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) s.push_back(static_cast<char>(acc << (8 - nbits)));
    return s;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace detail

struct CanonicalResult {
    std::string form;                 // equal strings <=> color-preserving isomorphism
    std::vector<int> labeling;        // canonical position -> vertex
    std::vector<Perm> automorphisms;  // generators of the (color-preserving) group
};

namespace detail {

class CanonSearch {
public:
    CanonSearch(const Graph& g, bool respect_colors) : g_(g), colors_(respect_colors) {}

    CanonicalResult run() {
        if (g_.size() > 512) throw resource_error("canonical form: graph exceeds 512 vertices");
        if (g_.size() == 0) {
            CanonicalResult r;
            r.form = leaf_string(g_, {}, colors_);
            return r;
        }
        descend(refine_equitable(g_, initial_cells(g_, colors_)));
        CanonicalResult r;
        r.form = std::move(best_string_);
        r.labeling = std::move(best_labeling_);
        r.automorphisms = std::move(auts_);
        for (const auto& a : r.automorphisms) check_automorphism(a);
        return r;
    }

private:
    const Graph& g_;
    bool colors_;
    std::string first_string_, best_string_;
    std::vector<int> first_labeling_, best_labeling_;
    std::vector<Perm> auts_;
    std::unordered_set<Perm, PermHash> aut_seen_;
    std::vector<int> path_;

    void check_automorphism(const Perm& p) const {
        for (int u = 0; u < g_.size(); ++u) {
            if (colors_ && g_.color(p(u)) != g_.color(u))
                throw internal_error("automorphism search produced a color-breaking map");
            for (int v = u + 1; v < g_.size(); ++v)
                if (g_.adjacent(u, v) != g_.adjacent(p(u), p(v)))
                    throw internal_error("automorphism search produced a non-automorphism");
        }
    }

    void record_aut(const std::vector<int>& to, const std::vector<int>& from) {
        std::vector<int> img(g_.size());
        for (int i = 0; i < g_.size(); ++i) img[from[i]] = to[i];
        Perm p = Perm::from_images(std::move(img));
        if (p.is_identity()) return;
        if (aut_seen_.insert(p).second) auts_.push_back(std::move(p));
    }

    void process_leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> labeling(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) labeling[i] = cells[i][0];
        std::string s = leaf_string(g_, labeling, colors_);
        if (first_string_.empty()) {
            first_string_ = s;
            first_labeling_ = labeling;
            best_string_ = std::move(s);
            best_labeling_ = std::move(labeling);
            return;
        }
        if (s == first_string_) record_aut(first_labeling_, labeling);
        if (s == best_string_) {
            if (s != first_string_) record_aut(best_labeling_, labeling);
        } else if (s < best_string_) {
            best_string_ = std::move(s);
            best_labeling_ = std::move(labeling);
        }
    }

    // Orbit pruning: skip a candidate equivalent to an earlier sibling under
    // automorphisms found so far that fix the individualized path pointwise.
    bool orbit_pruned(int v, const std::vector<int>& tried) {
        if (tried.empty() || auts_.empty()) return false;
        UnionFind uf(g_.size());
        for (const auto& a : auts_) {
            bool fixes = true;
            for (int p : path_)
                if (a(p) != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < g_.size(); ++x) uf.unite(x, a(x));
        }
        for (int u : tried)
            if (uf.find(u) == uf.find(v)) return true;
        return false;
    }

    void descend(std::vector<std::vector<int>> cells) {
        int target = -1;
        size_t target_size = 0;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1 && (target == -1 || cells[i].size() < target_size)) {
                target = static_cast<int>(i);
                target_size = cells[i].size();
            }
        }
        if (target == -1) {
            process_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (orbit_pruned(v, tried)) continue;
            tried.push_back(v);
            std::vector<std::vector<int>> child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            path_.push_back(v);
            descend(refine_equitable(g_, std::move(child)));
            path_.pop_back();
        }
    }
};

} // namespace detail

inline CanonicalResult canonical(const Graph& g, bool respect_colors = true) {
    return detail::CanonSearch(g, respect_colors).run();
}

inline std::string canonical_form(const Graph& g, bool respect_colors = true) {
    return canonical(g, respect_colors).form;
}

inline PermGroup automorphism_group(const Graph& g, bool respect_colors = true) {
    CanonicalResult r = canonical(g, respect_colors);
    if (r.automorphisms.empty()) return PermGroup::trivial(std::max(g.size(), 1));
    return PermGroup(g.size(), std::move(r.automorphisms));
}

// Color-preserving isomorphism a -> b, verified edge by edge before return.
inline std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& b,
                                                   bool respect_colors = true) {
    if (a.size() != b.size()) return std::nullopt;
    CanonicalResult ca = canonical(a, respect_colors);
    CanonicalResult cb = canonical(b, respect_colors);
    if (ca.form != cb.form) return std::nullopt;
    std::vector<int> map(a.size());
    for (int i = 0; i < a.size(); ++i) map[ca.labeling[i]] = cb.labeling[i];
    for (int u = 0; u < a.size(); ++u) {
        if (respect_colors && a.color(u) != b.color(map[u]))
            throw internal_error("isomorphism witness breaks colors");
        for (int v = u + 1; v < a.size(); ++v)
            if (a.adjacent(u, v) != b.adjacent(map[u], map[v]))
                throw internal_error("isomorphism witness breaks an edge");
    }
    return map;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, bool respect_colors = true) {
    return isomorphism(a, b, respect_colors).has_value();
}

// Vertex orbits under the (color-preserving) automorphism group.
inline std::vector<std::vector<int>> automorphism_orbits(const Graph& g,
                                                         bool respect_colors = true) {
    CanonicalResult r = canonical(g, respect_colors);
    detail::UnionFind uf(g.size());
    for (const auto& a : r.automorphisms)
        for (int v = 0; v < g.size(); ++v) uf.unite(v, a(v));
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < g.size(); ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, vs] : groups) orbits.push_back(std::move(vs));
    return orbits;
}

// Per-vertex data for the maximal-transitivity-on-neighbors test.
struct NeighborActionRow {
    int vertex = 0;
    long long stabilizer_order = 0;
    long long induced_order = 0;   // image of the stabilizer acting on the neighborhood
    long long kernel_order = 0;    // faithful iff 1
    long long local_aut_order = 0; // full Aut of the local graph
};

struct NeighborTransitivityReport {
    bool maximal = false;
    bool faithful = false; // every induced action has trivial kernel
    std::vector<NeighborActionRow> rows;
};

// A graph is maximally transitive on neighbors when every vertex stabilizer
// induces the whole automorphism group of its local graph. Requires a
// locally homogeneous input (per color class).
inline NeighborTransitivityReport max_transitive_on_neighbors(const Graph& g,
                                                              bool respect_colors = true) {
    for (Color c : {Color::none, Color::short_v, Color::long_v}) {
        std::string form;
        for (int v : g.vertices_of_color(c)) {
            std::string f = canonical_form(g.local_graph(v), respect_colors);
            if (form.empty())
                form = std::move(f);
            else if (f != form)
                throw std::domain_error("max_transitive_on_neighbors: graph is not locally "
                                        "homogeneous");
        }
    }

    PermGroup aut = automorphism_group(g, respect_colors);
    NeighborTransitivityReport rep;
    rep.maximal = true;
    rep.faithful = true;
    for (int x = 0; x < g.size(); ++x) {
        PermGroup stab = aut.point_stabilizer(x);
        std::vector<int> nb = g.neighbors(x);
        std::vector<int> index_of(g.size(), -1);
        for (size_t i = 0; i < nb.size(); ++i) index_of[nb[i]] = static_cast<int>(i);
        std::vector<Perm> induced_gens;
        for (const auto& s : stab.generators()) {
            std::vector<int> img(nb.size());
            for (size_t i = 0; i < nb.size(); ++i) img[i] = index_of[s(nb[i])];
            induced_gens.push_back(Perm::from_images(std::move(img)));
        }
        PermGroup induced(static_cast<int>(nb.size()), std::move(induced_gens));

        NeighborActionRow row;
        row.vertex = x;
        row.stabilizer_order = stab.order();
        row.induced_order = induced.order();
        row.kernel_order = row.stabilizer_order / row.induced_order;
        row.local_aut_order = automorphism_group(g.local_graph(x), respect_colors).order();
        if (row.induced_order != row.local_aut_order) rep.maximal = false;
        if (row.kernel_order != 1) rep.faithful = false;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace weyl
