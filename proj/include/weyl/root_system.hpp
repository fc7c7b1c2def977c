#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/graph.hpp"
#include "weyl/perm_group.hpp"

namespace weyl {

// Dynkin type of a crystallographic root system.
struct RootType {
    char family = 'A'; // A, B, C, D, E, F, G
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    static RootType parse(const std::string& s) {
        if (s.size() < 2) throw std::domain_error("root type: expected e.g. A4, F4, E8");
        char f = static_cast<char>(toupper(static_cast<unsigned char>(s[0])));
        int r = 0;
        for (size_t i = 1; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::domain_error("root type: bad rank in '" + s + "'");
            r = r * 10 + (s[i] - '0');
        }
        RootType t{f, r};
        t.validate();
        return t;
    }

    void validate() const {
        switch (family) {
            case 'A':
                if (rank < 1) throw std::domain_error("A_n requires n >= 1");
                return;
            case 'B':
            case 'C':
                if (rank < 2) throw std::domain_error("B_n/C_n require n >= 2");
                return;
            case 'D':
                if (rank < 4) throw std::domain_error("D_n requires n >= 4");
                return;
            case 'E':
                if (rank < 6 || rank > 8) throw std::domain_error("E_n requires n in {6,7,8}");
                return;
            case 'F':
                if (rank != 4) throw std::domain_error("F_n requires n = 4");
                return;
            case 'G':
                if (rank != 2) throw std::domain_error("G_n requires n = 2");
                return;
            default: throw std::domain_error("unknown root system family");
        }
    }
};

// Root vector in ambient coordinates scaled by 2, so the half-integer roots
// of E- and F-type systems stay integral. Inner products and reflections are
// exact.
struct Root {
    std::vector<int> coords;
    Color length_class = Color::long_v;

    bool operator<(const Root& o) const { return coords < o.coords; }
    bool operator==(const Root& o) const { return coords == o.coords; }
};

inline long long inner_product(const Root& a, const Root& b) {
    if (a.coords.size() != b.coords.size())
        throw std::domain_error("inner_product: ambient dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < a.coords.size(); ++i)
        s += static_cast<long long>(a.coords[i]) * b.coords[i];
    return s;
}

class RootSystem {
public:
    static RootSystem build(const RootType& type);
    static RootSystem build(const std::string& type) { return build(RootType::parse(type)); }

    const RootType& type() const { return type_; }
    int ambient_dim() const { return dim_; }
    const std::vector<Root>& roots() const { return roots_; }
    size_t size() const { return roots_.size(); }

    int count(Color c) const {
        int k = 0;
        for (const auto& r : roots_)
            if (r.length_class == c) ++k;
        return k;
    }

    bool two_lengths() const { return count(Color::short_v) > 0; }

    int index_of(const std::vector<int>& coords) const {
        auto it = index_.find(coords);
        return it == index_.end() ? -1 : it->second;
    }

    // s_b(a) = a - (2 (a,b) / (b,b)) b; exact in scaled coordinates for
    // crystallographic systems. A non-exact division signals a broken input.
    Root reflect(const Root& a, const Root& through) const {
        long long num = 2 * inner_product(a, through);
        long long den = inner_product(through, through);
        if (den == 0) throw std::domain_error("reflect: zero root");
        if (num % den != 0)
            throw internal_error("reflect: non-integral Cartan coefficient, "
                                 "input is not crystallographic");
        long long c = num / den;
        Root out = a;
        for (size_t i = 0; i < out.coords.size(); ++i)
            out.coords[i] -= static_cast<int>(c * through.coords[i]);
        return out;
    }

    // Simple roots of the lexicographic positive system: positive roots that
    // are not the sum of two positive roots.
    std::vector<Root> simple_roots() const {
        auto positive = [](const Root& r) {
            for (int c : r.coords)
                if (c != 0) return c > 0;
            return false;
        };
        std::vector<Root> pos;
        for (const auto& r : roots_)
            if (positive(r)) pos.push_back(r);
        std::vector<Root> simple;
        for (const auto& r : pos) {
            bool decomposable = false;
            for (const auto& b : pos) {
                if (b == r) continue;
                std::vector<int> rest(r.coords.size());
                for (size_t i = 0; i < rest.size(); ++i) rest[i] = r.coords[i] - b.coords[i];
                int j = index_of(rest);
                if (j >= 0 && positive(roots_[j])) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simple.push_back(r);
        }
        return simple;
    }

    // Permutation of the root list given by the reflection through one root.
    Perm reflection_permutation(int root_index) const {
        if (root_index < 0 || root_index >= static_cast<int>(roots_.size()))
            throw std::domain_error("reflection_permutation: root index out of range");
        std::vector<int> img(roots_.size());
        for (size_t i = 0; i < roots_.size(); ++i) {
            int j = index_of(reflect(roots_[i], roots_[root_index]).coords);
            if (j < 0) throw internal_error("reflection left the root set");
            img[i] = j;
        }
        return Perm::from_images(std::move(img));
    }

    // Weyl group as permutations of the root list, generated by the simple
    // reflections. Root indices follow the lexicographic root order.
    PermGroup weyl_group() const {
        std::vector<Root> simple = simple_roots();
        std::vector<Perm> gens;
        for (const auto& s : simple) {
            std::vector<int> img(roots_.size());
            for (size_t i = 0; i < roots_.size(); ++i) {
                int j = index_of(reflect(roots_[i], s).coords);
                if (j < 0) throw internal_error("weyl_group: reflection left the root set");
                img[i] = j;
            }
            gens.push_back(Perm::from_images(std::move(img)));
        }
        return PermGroup(static_cast<int>(roots_.size()), std::move(gens));
    }

private:
    RootType type_;
    int dim_ = 0;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;

    void finish() {
        std::sort(roots_.begin(), roots_.end());
        for (size_t i = 0; i < roots_.size(); ++i) index_[roots_[i].coords] = static_cast<int>(i);
        assign_length_classes();
    }

    void assign_length_classes() {
        long long lo = 0, hi = 0;
        for (const auto& r : roots_) {
            long long q = inner_product(r, r);
            if (lo == 0 || q < lo) lo = q;
            if (q > hi) hi = q;
        }
        for (auto& r : roots_) {
            long long q = inner_product(r, r);
            // single length class: call them all long
            r.length_class = (lo != hi && q == lo) ? Color::short_v : Color::long_v;
        }
    }

    friend RootSystem build_impl(const RootType&);
};

namespace detail {

inline std::vector<int> unit(int dim, int i, int scale) {
    std::vector<int> v(dim, 0);
    v[i] = scale;
    return v;
}

// +-e_i +- e_j over all i < j and both signs, scaled by 2.
inline void add_pm_pairs(std::vector<Root>& out, int dim, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j)
            for (int si : {2, -2})
                for (int sj : {2, -2}) {
                    std::vector<int> v(dim, 0);
                    v[i] = si;
                    v[j] = sj;
                    out.push_back({std::move(v), Color::long_v});
                }
}

// Spin-type roots (1/2) sum c_i e_i, scaled to c in {-1, +1}^dim, filtered.
template <class Pred>
inline void add_half_sums(std::vector<Root>& out, int dim, Pred&& keep) {
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        std::vector<int> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? 1 : -1;
        if (keep(v)) out.push_back({std::move(v), Color::long_v});
    }
}

} // namespace detail

inline RootSystem RootSystem::build(const RootType& type) {
    type.validate();
    RootSystem rs;
    rs.type_ = type;
    const int n = type.rank;
    std::vector<Root>& R = rs.roots_;

    switch (type.family) {
        case 'A': {
            rs.dim_ = n + 1;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    if (i != j) {
                        std::vector<int> v(rs.dim_, 0);
                        v[i] = 2;
                        v[j] = -2;
                        R.push_back({std::move(v), Color::long_v});
                    }
            break;
        }
        case 'B': {
            rs.dim_ = n;
            for (int i = 0; i < n; ++i)
                for (int s : {2, -2}) R.push_back({detail::unit(n, i, s), Color::short_v});
            detail::add_pm_pairs(R, n, 0, n);
            break;
        }
        case 'C': {
            rs.dim_ = n;
            detail::add_pm_pairs(R, n, 0, n);
            for (int i = 0; i < n; ++i)
                for (int s : {4, -4}) R.push_back({detail::unit(n, i, s), Color::long_v});
            break;
        }
        case 'D': {
            rs.dim_ = n;
            detail::add_pm_pairs(R, n, 0, n);
            break;
        }
        case 'E': {
            rs.dim_ = 8;
            auto even_signs = [](const std::vector<int>& v) {
                int minus = 0;
                for (int c : v)
                    if (c < 0) ++minus;
                return minus % 2 == 0;
            };
            if (n == 8) {
                detail::add_pm_pairs(R, 8, 0, 8);
                detail::add_half_sums(R, 8, even_signs);
            } else if (n == 7) {
                detail::add_pm_pairs(R, 8, 0, 6);
                for (int s : {2, -2}) {
                    std::vector<int> v(8, 0);
                    v[6] = s;
                    v[7] = -s;
                    R.push_back({std::move(v), Color::long_v});
                }
                detail::add_half_sums(R, 8, [&](const std::vector<int>& v) {
                    return even_signs(v) && v[6] == -v[7];
                });
            } else {
                detail::add_pm_pairs(R, 8, 0, 5);
                detail::add_half_sums(R, 8, [&](const std::vector<int>& v) {
                    return even_signs(v) && v[5] == v[6] && v[6] == -v[7];
                });
            }
            break;
        }
        case 'F': {
            rs.dim_ = 4;
            for (int i = 0; i < 4; ++i)
                for (int s : {2, -2}) R.push_back({detail::unit(4, i, s), Color::short_v});
            detail::add_half_sums(R, 4, [](const std::vector<int>&) { return true; });
            detail::add_pm_pairs(R, 4, 0, 4);
            break;
        }
        case 'G': {
            rs.dim_ = 3;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) {
                        std::vector<int> v(3, 0);
                        v[i] = 2;
                        v[j] = -2;
                        R.push_back({std::move(v), Color::short_v});
                        // 2e_i - e_j - e_k and its negative appear once each
                    }
            for (int i = 0; i < 3; ++i)
                for (int s : {1, -1}) {
                    std::vector<int> v(3, -2 * s);
                    v[i] = 4 * s;
                    R.push_back({std::move(v), Color::long_v});
                }
            break;
        }
    }
    rs.finish();
    return rs;
}

} // namespace weyl
