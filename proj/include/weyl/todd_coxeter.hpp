#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/graph.hpp"
#include "weyl/perm_group.hpp"
#include "weyl/presentation.hpp"

namespace weyl {

// Complete coset table: rows are cosets, one column per generator and per
// inverse. Over the trivial subgroup the row count is the group order and
// the generator actions give the regular representation.
struct CosetTable {
    int ngens = 0;
    long long count = 0;
    // table[c][2k] = image of coset c under generator k, [2k+1] under its inverse
    std::vector<std::vector<int>> table;

    Perm generator_action(int k) const {
        std::vector<int> img(count);
        for (long long c = 0; c < count; ++c) img[c] = table[c][2 * k];
        return Perm::from_images(std::move(img));
    }

    std::vector<Perm> generator_actions() const {
        std::vector<Perm> out;
        out.reserve(ngens);
        for (int k = 0; k < ngens; ++k) out.push_back(generator_action(k));
        return out;
    }

    PermGroup permutation_image() const {
        return PermGroup(static_cast<int>(count), generator_actions());
    }
};

namespace detail {

// HLT-style enumeration: relator scanning with definitions, coincidences
// resolved through a union-find merge queue. Scanning order is row-major
// and fixed, so tables are reproducible.
class HltEnumerator {
public:
    HltEnumerator(const GroupPresentation& pres, const std::vector<Word>& subgroup,
                  long long max_cosets)
        : pres_(pres), subgroup_(subgroup), max_(max_cosets), ncols_(2 * pres.ngens) {}

    CosetTable run() {
        new_coset();
        for (const Word& w : subgroup_) scan_and_fill(0, w);
        for (size_t c = 0; c < tab_.size(); ++c) {
            if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
            for (const Word& w : pres_.relators) {
                scan_and_fill(static_cast<int>(c), w);
                if (rep(static_cast<int>(c)) != static_cast<int>(c)) break;
            }
            if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
            for (int col = 0; col < ncols_; ++col)
                if (tab_[c][col] == -1) define(static_cast<int>(c), col);
        }
        return compress();
    }

private:
    const GroupPresentation& pres_;
    const std::vector<Word>& subgroup_;
    long long max_;
    int ncols_;
    std::vector<std::vector<int>> tab_;
    std::vector<int> parent_;

    static int col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static int inv_col(int col) { return col ^ 1; }

    int rep(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    int new_coset() {
        if (static_cast<long long>(tab_.size()) >= max_)
            throw resource_error("coset enumeration exceeded the bound of " +
                                 std::to_string(max_) + " cosets");
        tab_.emplace_back(ncols_, -1);
        parent_.push_back(static_cast<int>(tab_.size()) - 1);
        return static_cast<int>(tab_.size()) - 1;
    }

    int define(int c, int col) {
        int n = new_coset();
        tab_[c][col] = n;
        tab_[n][inv_col(col)] = c;
        return n;
    }

    void merge(int a, int b, std::vector<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int dead = queue[qi];
            std::vector<int> row = tab_[dead];
            for (int col = 0; col < ncols_; ++col) {
                int d = row[col];
                if (d == -1) continue;
                if (tab_[d][inv_col(col)] == dead) tab_[d][inv_col(col)] = -1;
                int mu = rep(dead), nu = rep(d);
                if (tab_[mu][col] != -1)
                    merge(nu, tab_[mu][col], queue);
                else if (tab_[nu][inv_col(col)] != -1)
                    merge(mu, tab_[nu][inv_col(col)], queue);
                else {
                    tab_[mu][col] = nu;
                    tab_[nu][inv_col(col)] = mu;
                }
            }
        }
    }

    void scan_and_fill(int start, const Word& w) {
        if (w.empty()) return;
        while (true) {
            int f = rep(start), b = rep(start);
            int i = 0, j = static_cast<int>(w.size()) - 1;
            // forward
            while (i <= j && tab_[f][col_of(w[i])] != -1) {
                f = rep(tab_[f][col_of(w[i])]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            // backward
            while (j >= i && tab_[b][inv_col(col_of(w[j]))] != -1) {
                b = rep(tab_[b][inv_col(col_of(w[j]))]);
                --j;
            }
            if (j < i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i) {
                // deduction closes the word
                tab_[f][col_of(w[i])] = b;
                tab_[b][inv_col(col_of(w[i]))] = f;
                return;
            }
            define(f, col_of(w[i]));
        }
    }

    CosetTable compress() {
        std::vector<int> newid(tab_.size(), -1);
        long long live = 0;
        for (size_t c = 0; c < tab_.size(); ++c)
            if (rep(static_cast<int>(c)) == static_cast<int>(c))
                newid[c] = static_cast<int>(live++);
        CosetTable out;
        out.ngens = pres_.ngens;
        out.count = live;
        out.table.assign(live, std::vector<int>(ncols_, -1));
        for (size_t c = 0; c < tab_.size(); ++c) {
            if (newid[c] == -1) continue;
            for (int col = 0; col < ncols_; ++col) {
                if (tab_[c][col] == -1)
                    throw internal_error("coset table incomplete after enumeration");
                out.table[newid[c]][col] = newid[rep(tab_[c][col])];
            }
        }
        return out;
    }
};

} // namespace detail

// Enumerates cosets of the subgroup generated by the given words. On
// success the table is complete and the row count equals the subgroup
// index; the enumeration aborts with a resource error past max_cosets
// total definitions (the bound matters: it may never terminate for
// infinite-index inputs).
inline CosetTable coset_enumerate(const GroupPresentation& p,
                                  const std::vector<Word>& subgroup_gens = {},
                                  long long max_cosets = 2'000'000) {
    if (p.ngens <= 0) throw std::domain_error("coset_enumerate: presentation has no generators");
    return detail::HltEnumerator(p, subgroup_gens, max_cosets).run();
}

// Image of a word under a generator assignment; the empty word maps to the
// identity.
inline Perm evaluate_word(const std::vector<Perm>& images, const Word& w, int degree) {
    Perm r = Perm::identity(degree);
    for (int letter : w) {
        int k = std::abs(letter) - 1;
        if (k >= static_cast<int>(images.size()))
            throw std::domain_error("evaluate_word: letter out of range");
        r = r * (letter > 0 ? images[k] : images[k].inverse());
    }
    return r;
}

// True iff every relator evaluates to the identity under the assignment;
// certifies that the assigned elements generate a quotient of the presented
// group. The images must lie in g.
inline bool verify_relations(const PermGroup& g, const std::vector<Word>& relators,
                             const std::vector<Perm>& images) {
    for (const auto& im : images)
        if (!g.contains(im))
            throw std::domain_error("verify_relations: image is not a group element");
    for (const Word& w : relators)
        if (!evaluate_word(images, w, g.degree()).is_identity()) return false;
    return true;
}

// Commuting graph on the conjugacy classes of the chosen Coxeter generators
// inside the enumerated permutation image. Two distinct class
// representatives give a bichromatic graph (colors from the Dynkin diagram
// when it has them); a single class stays uncolored.
inline Graph reflection_graph(const CoxeterMatrix& cm, std::vector<int> class_reps,
                              long long max_cosets = 2'000'000) {
    if (class_reps.empty())
        for (int i = 0; i < cm.rank; ++i) class_reps.push_back(i);
    for (int r : class_reps)
        if (r < 0 || r >= cm.rank)
            throw std::domain_error("reflection_graph: class representative out of range");

    GroupPresentation pres = coxeter_presentation(cm);
    CosetTable tbl = coset_enumerate(pres, {}, max_cosets);
    PermGroup image = tbl.permutation_image();
    std::vector<Perm> gens = tbl.generator_actions();

    std::vector<Perm> verts;
    std::vector<Color> vert_colors;
    std::unordered_set<Perm, PermHash> seen;
    int classes_used = 0;
    for (size_t ri = 0; ri < class_reps.size(); ++ri) {
        const Perm& rep = gens[class_reps[ri]];
        if (seen.count(rep)) continue; // same class as an earlier representative
        Color c = Color::none;
        if (!cm.colors.empty())
            c = cm.colors[class_reps[ri]];
        else
            c = classes_used == 0 ? Color::short_v : Color::long_v;
        for (const Perm& e : image.conjugacy_class(rep)) {
            if (!seen.insert(e).second)
                throw internal_error("reflection_graph: classes of chosen reps overlap");
            verts.push_back(e);
            vert_colors.push_back(c);
        }
        ++classes_used;
    }

    Graph g(static_cast<int>(verts.size()));
    bool bicolor = classes_used >= 2;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (bicolor) g.set_color(static_cast<int>(i), vert_colors[i]);
        if (image.degree() <= 64) g.set_label(static_cast<int>(i), verts[i].to_cycle_string());
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i].commutes_with(verts[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

} // namespace weyl
