#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "weyl/bitset.hpp"
#include "weyl/errors.hpp"

namespace weyl {

// Vertex kinds of a bichromatic graph. Uncolored graphs carry the sentinel
// on every vertex so the same type serves both cases.
enum class Color : unsigned char { none = 0, short_v = 1, long_v = 2 };

inline const char* color_name(Color c) {
    switch (c) {
        case Color::short_v: return "s";
        case Color::long_v: return "l";
        default: return "-";
    }
}

class Graph;

struct Partition {
    std::vector<std::vector<int>> blocks;

    void validate(int n) const {
        std::vector<char> seen(n, 0);
        for (const auto& b : blocks) {
            if (b.empty()) throw std::domain_error("partition: empty block");
            for (int v : b) {
                if (v < 0 || v >= n) throw std::domain_error("partition: vertex out of range");
                if (seen[v]) throw std::domain_error("partition: vertex in two blocks");
                seen[v] = 1;
            }
        }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) throw std::domain_error("partition: vertex not covered");
    }
};

// Finite simple graph with optional short/long vertex colors and optional
// display labels. Adjacency is kept as bit-set rows; all operations produce
// new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), colors_(n, Color::none) {}

    int size() const { return n_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::domain_error("graph: no self-loops");
        check_vertex(u);
        check_vertex(v);
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const {
        long long t = 0;
        for (int v = 0; v < n_; ++v) t += degree(v);
        return t / 2;
    }

    Color color(int v) const { return colors_[v]; }
    void set_color(int v, Color c) {
        check_vertex(v);
        colors_[v] = c;
    }
    bool is_colored() const {
        for (Color c : colors_)
            if (c != Color::none) return true;
        return false;
    }
    void erase_colors() { colors_.assign(n_, Color::none); }

    const std::string& label(int v) const {
        static const std::string empty;
        return labels_.empty() ? empty : labels_[v];
    }
    void set_label(int v, std::string s) {
        if (labels_.empty()) labels_.resize(n_);
        labels_[v] = std::move(s);
    }
    bool has_labels() const { return !labels_.empty(); }

    std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }

    std::vector<int> vertices_of_color(Color c) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (colors_[v] == c) out.push_back(v);
        return out;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_ && colors_ == o.colors_;
    }

    // --- traversal queries --------------------------------------------------

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp{s};
            seen[s] = 1;
            for (size_t q = 0; q < comp.size(); ++q)
                adj_[comp[q]].for_each([&](int w) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                });
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return n_ == 0 || components().size() == 1; }

    // Components of the induced subgraph on one color class, as vertex sets
    // of the ambient graph.
    std::vector<std::vector<int>> monochromatic_components(Color c) const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s] || colors_[s] != c) continue;
            std::vector<int> comp{s};
            seen[s] = 1;
            for (size_t q = 0; q < comp.size(); ++q)
                adj_[comp[q]].for_each([&](int w) {
                    if (!seen[w] && colors_[w] == c) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
                });
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // BFS distance; -1 when unreachable.
    int distance(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return 0;
        std::vector<int> dist(n_, -1);
        dist[u] = 0;
        std::queue<int> bfs;
        bfs.push(u);
        while (!bfs.empty()) {
            int p = bfs.front();
            bfs.pop();
            int found = -1;
            adj_[p].for_each([&](int w) {
                if (dist[w] == -1) {
                    dist[w] = dist[p] + 1;
                    if (w == v) found = w;
                    bfs.push(w);
                }
            });
            if (found != -1) return dist[v];
        }
        return -1;
    }

    // -1 when disconnected.
    int diameter() const {
        int d = 0;
        for (int s = 0; s < n_; ++s) {
            std::vector<int> dist(n_, -1);
            dist[s] = 0;
            std::queue<int> bfs;
            bfs.push(s);
            int reached = 1;
            while (!bfs.empty()) {
                int p = bfs.front();
                bfs.pop();
                adj_[p].for_each([&](int w) {
                    if (dist[w] == -1) {
                        dist[w] = dist[p] + 1;
                        d = std::max(d, dist[w]);
                        ++reached;
                        bfs.push(w);
                    }
                });
            }
            if (reached != n_) return -1;
        }
        return d;
    }

    std::optional<std::vector<int>> bipartition() const {
        std::vector<int> side(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (side[s] != -1) continue;
            side[s] = 0;
            std::queue<int> bfs;
            bfs.push(s);
            while (!bfs.empty()) {
                int p = bfs.front();
                bfs.pop();
                bool odd = false;
                adj_[p].for_each([&](int w) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[p];
                        bfs.push(w);
                    } else if (side[w] == side[p]) {
                        odd = true;
                    }
                });
                if (odd) return std::nullopt;
            }
        }
        return side;
    }

    bool is_bipartite() const { return bipartition().has_value(); }

    bool is_clique(const std::vector<int>& vs) const {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!adjacent(vs[i], vs[j])) return false;
        return true;
    }

    bool has_any_edge() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[v].any()) return true;
        return false;
    }

    // --- graph algebra -------------------------------------------------------

    Graph complement() const {
        Graph g(n_);
        g.colors_ = colors_;
        g.labels_ = labels_;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) g.add_edge(u, v);
        return g;
    }

    Graph induced(const std::vector<int>& vs) const {
        Graph g(static_cast<int>(vs.size()));
        for (size_t i = 0; i < vs.size(); ++i) {
            g.colors_[i] = colors_[vs[i]];
            if (has_labels()) g.set_label(static_cast<int>(i), label(vs[i]));
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        return g;
    }

    Graph local_graph(int v) const {
        check_vertex(v);
        return induced(neighbors(v));
    }

    Graph contraction(const Partition& pi) const {
        pi.validate(n_);
        int m = static_cast<int>(pi.blocks.size());
        Graph g(m);
        bool colored = is_colored();
        std::vector<int> block_of(n_);
        for (int b = 0; b < m; ++b) {
            for (int v : pi.blocks[b]) block_of[v] = b;
            if (colored) {
                Color c = colors_[pi.blocks[b][0]];
                for (int v : pi.blocks[b])
                    if (colors_[v] != c)
                        throw std::domain_error("contraction: block mixes vertex colors");
                g.colors_[b] = c;
            }
        }
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v && block_of[u] != block_of[v]) {
                    if (!g.adjacent(block_of[u], block_of[v]))
                        g.add_edge(block_of[u], block_of[v]);
                }
            });
        return g;
    }

    // Contraction by classes of equal closed neighborhood (and equal color).
    Graph reduce() const {
        Partition pi;
        std::vector<int> cls(n_, -1);
        for (int v = 0; v < n_; ++v) {
            if (cls[v] != -1) continue;
            Bitset nv = adj_[v];
            nv.set(v);
            std::vector<int> block{v};
            cls[v] = static_cast<int>(pi.blocks.size());
            for (int w = v + 1; w < n_; ++w) {
                if (cls[w] != -1 || colors_[w] != colors_[v]) continue;
                Bitset nw = adj_[w];
                nw.set(w);
                if (nw == nv) {
                    cls[w] = cls[v];
                    block.push_back(w);
                }
            }
            pi.blocks.push_back(std::move(block));
        }
        return contraction(pi);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::domain_error("graph: vertex out of range");
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Color> colors_;
    std::vector<std::string> labels_;
};

// --- binary constructions ----------------------------------------------------

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.size() + b.size());
    for (int v = 0; v < a.size(); ++v) {
        g.set_color(v, a.color(v));
        if (a.has_labels()) g.set_label(v, a.label(v));
        a.row(v).for_each([&](int w) {
            if (v < w) g.add_edge(v, w);
        });
    }
    int off = a.size();
    for (int v = 0; v < b.size(); ++v) {
        g.set_color(off + v, b.color(v));
        if (b.has_labels()) g.set_label(off + v, b.label(v));
        b.row(v).for_each([&](int w) {
            if (v < w) g.add_edge(off + v, off + w);
        });
    }
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < b.size(); ++v) g.add_edge(u, a.size() + v);
    return g;
}

inline Graph cartesian_product(const Graph& a, const Graph& b) {
    // (x1,y1) ~ (x2,y2)  iff  x1~x2 & y1=y2, or y1~y2 & x1=x2. Output colorless.
    Graph g(a.size() * b.size());
    auto id = [&](int x, int y) { return x * b.size() + y; };
    for (int x1 = 0; x1 < a.size(); ++x1)
        for (int y1 = 0; y1 < b.size(); ++y1) {
            a.row(x1).for_each([&](int x2) {
                if (x1 < x2) g.add_edge(id(x1, y1), id(x2, y1));
            });
            b.row(y1).for_each([&](int y2) {
                if (y1 < y2) g.add_edge(id(x1, y1), id(x1, y2));
            });
        }
    return g;
}

inline Graph composition(const Graph& a, const Graph& b) {
    // a[b]: (x1,y1) ~ (x2,y2)  iff  x1~x2, or x1=x2 & y1~y2.
    Graph g(a.size() * b.size());
    auto id = [&](int x, int y) { return x * b.size() + y; };
    for (int x1 = 0; x1 < a.size(); ++x1) {
        for (int y1 = 0; y1 < b.size(); ++y1)
            b.row(y1).for_each([&](int y2) {
                if (y1 < y2) g.add_edge(id(x1, y1), id(x1, y2));
            });
        a.row(x1).for_each([&](int x2) {
            if (x1 < x2)
                for (int y1 = 0; y1 < b.size(); ++y1)
                    for (int y2 = 0; y2 < b.size(); ++y2)
                        g.add_edge(id(x1, y1), id(x2, y2));
        });
    }
    return g;
}

// --- named constructors --------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::domain_error("cycle: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    return join(empty_graph(a), empty_graph(b));
}

// Kneser graph K(n, k): k-subsets of [n], adjacent when disjoint.
// Vertices ordered lexicographically; labels record the subsets.
inline Graph kneser_graph(int n, int k) {
    if (k < 1 || k > n) throw std::domain_error("kneser: need 1 <= k <= n");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    Graph g(static_cast<int>(subsets.size()));
    std::vector<uint64_t> masks(subsets.size(), 0);
    for (size_t i = 0; i < subsets.size(); ++i) {
        std::string lab = "{";
        for (size_t j = 0; j < subsets[i].size(); ++j) {
            masks[i] |= uint64_t{1} << subsets[i][j];
            lab += std::to_string(subsets[i][j] + 1);
            lab += (j + 1 < subsets[i].size()) ? "," : "";
        }
        lab += "}";
        g.set_label(static_cast<int>(i), lab);
    }
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if ((masks[i] & masks[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

namespace detail {

// Standard symplectic form on F_2^{2n}, coordinates paired (0,1), (2,3), ...
inline int symplectic_form(unsigned x, unsigned y, int dim) {
    int s = 0;
    for (int k = 0; k < dim; k += 2)
        s ^= (((x >> k) & 1) & ((y >> (k + 1)) & 1)) ^ (((x >> (k + 1)) & 1) & ((y >> k) & 1));
    return s;
}

inline int quadratic_form(unsigned x, int dim, int sign) {
    int s = 0;
    for (int k = 0; k < dim; k += 2) s ^= ((x >> k) & 1) & ((x >> (k + 1)) & 1);
    if (sign < 0) s ^= ((x >> 0) & 1) ^ ((x >> 1) & 1); // x1^2 + x2^2 over F_2
    return s;
}

inline std::string f2_label(unsigned x, int dim) {
    std::string s(dim, '0');
    for (int k = 0; k < dim; ++k)
        if ((x >> k) & 1) s[k] = '1';
    return s;
}

} // namespace detail

// Symplectic graph on the nonzero vectors of F_2^{2n}; adjacency B(x,y) = 0.
inline Graph sp2_graph(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw std::domain_error("sp2: dimension must be even >= 2");
    if (two_n > 20) throw resource_error("sp2: dimension too large");
    unsigned total = 1u << two_n;
    Graph g(static_cast<int>(total - 1));
    for (unsigned x = 1; x < total; ++x) g.set_label(static_cast<int>(x - 1), detail::f2_label(x, two_n));
    for (unsigned x = 1; x < total; ++x)
        for (unsigned y = x + 1; y < total; ++y)
            if (detail::symplectic_form(x, y, two_n) == 0)
                g.add_edge(static_cast<int>(x - 1), static_cast<int>(y - 1));
    return g;
}

// Induced subgraph of sp2 on the Q^eps-nonsingular vectors (Q(x) = 1).
inline Graph nsp_graph(int two_n, int sign) {
    if (two_n < 4 || two_n % 2 != 0) throw std::domain_error("nsp: dimension must be even >= 4");
    if (sign != 1 && sign != -1) throw std::domain_error("nsp: sign must be + or -");
    if (two_n > 20) throw resource_error("nsp: dimension too large");
    unsigned total = 1u << two_n;
    std::vector<unsigned> verts;
    for (unsigned x = 1; x < total; ++x)
        if (detail::quadratic_form(x, two_n, sign) == 1) verts.push_back(x);
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        g.set_label(static_cast<int>(i), detail::f2_label(verts[i], two_n));
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (detail::symplectic_form(verts[i], verts[j], two_n) == 0)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

// --- exact solvers --------------------------------------------------------------

// Exact chromatic number by iterative-deepening backtracking.
inline int chromatic_number(const Graph& g, int max_vertices = 64) {
    if (g.size() > max_vertices)
        throw resource_error("chromatic_number: graph exceeds size budget");
    if (g.size() == 0) return 0;
    if (!g.has_any_edge()) return 1;

    // order vertices by decreasing degree
    std::vector<int> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> coloring(g.size(), -1);
    auto feasible = [&](auto&& self, size_t idx, int k, int used) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        // allowing at most one fresh color kills color-permutation symmetry
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            g.row(v).for_each([&](int w) {
                if (coloring[w] == c) ok = false;
            });
            if (!ok) continue;
            coloring[v] = c;
            if (self(self, idx + 1, k, std::max(used, c + 1))) return true;
            coloring[v] = -1;
        }
        return false;
    };
    for (int k = 2; k <= g.size(); ++k) {
        std::fill(coloring.begin(), coloring.end(), -1);
        if (feasible(feasible, 0, k, 0)) return k;
    }
    return g.size();
}

// Exact independence number with exhaustive enumeration of every maximum
// independent set.
struct IndependenceResult {
    int alpha = 0;
    std::vector<std::vector<int>> maximum_sets;
};

inline IndependenceResult independence(const Graph& g, int max_vertices = 30) {
    if (g.size() > max_vertices)
        throw resource_error("independence: graph exceeds size budget");
    IndependenceResult res;
    if (g.size() == 0) return res;
    int n = g.size();
    std::vector<uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.row(v).for_each([&](int w) { adj[v] |= uint64_t{1} << w; });

    // pass 1: alpha
    int best = 0;
    auto bound = [&](auto&& self, uint64_t cand, int depth) -> void {
        if (depth + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, depth);
            return;
        }
        int v = std::countr_zero(cand);
        self(self, cand & ~(adj[v] | (uint64_t{1} << v)), depth + 1); // take v
        self(self, cand & ~(uint64_t{1} << v), depth);                 // skip v
    };
    bound(bound, (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1), 0);
    res.alpha = best;

    // pass 2: enumerate all of size alpha
    std::vector<int> cur;
    auto enumerate = [&](auto&& self, uint64_t cand, int lowest) -> void {
        if (static_cast<int>(cur.size()) == res.alpha) {
            res.maximum_sets.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) + std::popcount(cand) < res.alpha) return;
        uint64_t c = cand & ~((lowest >= 0) ? ((uint64_t{1} << (lowest + 1)) - 1) : 0);
        while (c) {
            int v = std::countr_zero(c);
            c &= c - 1;
            cur.push_back(v);
            self(self, cand & ~(adj[v] | (uint64_t{1} << v)), v);
            cur.pop_back();
        }
    };
    enumerate(enumerate, (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1), -1);
    return res;
}

inline int independence_number(const Graph& g, int max_vertices = 30) {
    return independence(g, max_vertices).alpha;
}

} // namespace weyl
