#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyl {

// Permutation of {0, ..., degree-1} stored as its image table.
// Composition is function composition: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;

    static Perm identity(int degree) {
        Perm p;
        p.img_.resize(degree);
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    static Perm from_images(std::vector<int> images) {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
                throw std::domain_error("Perm: image table is not a bijection");
            seen[v] = 1;
        }
        Perm p;
        p.img_ = std::move(images);
        return p;
    }

    // Builds a permutation of the given degree from cycles over 0-based points.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Perm p = identity(degree);
        for (const auto& c : cycles) {
            for (size_t i = 0; i < c.size(); ++i) {
                int a = c[i], b = c[(i + 1) % c.size()];
                if (a < 0 || a >= degree)
                    throw std::domain_error("Perm: cycle point out of range");
                if (p.img_[a] != a)
                    throw std::domain_error("Perm: point repeated across cycles");
                p.img_[a] = b;
            }
        }
        return Perm::from_images(std::move(p.img_));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm operator*(const Perm& b) const {
        if (degree() != b.degree()) throw std::domain_error("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x) r.img_[x] = img_[b.img_[x]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x) r.img_[img_[x]] = x;
        return r;
    }

    // h.conjugated_by(g) = g^-1 h g, the GAP-style h^g.
    Perm conjugated_by(const Perm& g) const {
        if (degree() != g.degree()) throw std::domain_error("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x) r.img_[g.img_[x]] = g.img_[img_[x]];
        return r;
    }

    bool commutes_with(const Perm& b) const {
        if (degree() != b.degree()) throw std::domain_error("Perm: degree mismatch");
        for (int x = 0; x < degree(); ++x)
            if (img_[b.img_[x]] != b.img_[img_[x]]) return false;
        return true;
    }

    bool is_involution() const {
        if (is_identity()) return false;
        for (int x = 0; x < degree(); ++x)
            if (img_[img_[x]] != x) return false;
        return true;
    }

    int order() const {
        // lcm of cycle lengths
        std::vector<char> seen(img_.size(), 0);
        long long ord = 1;
        for (int s = 0; s < degree(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (int x = s; !seen[x]; x = img_[x]) {
                seen[x] = 1;
                ++len;
            }
            ord = std::lcm(ord, static_cast<long long>(len));
        }
        return static_cast<int>(ord);
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (int v : img_) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    // Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)"; "()" is the identity.
    std::string to_cycle_string() const {
        std::vector<char> seen(img_.size(), 0);
        std::ostringstream out;
        bool wrote = false;
        for (int s = 0; s < degree(); ++s) {
            if (seen[s] || img_[s] == s) continue;
            out << '(';
            int x = s;
            bool first = true;
            while (!seen[x]) {
                seen[x] = 1;
                if (!first) out << ' ';
                out << (x + 1);
                first = false;
                x = img_[x];
            }
            out << ')';
            wrote = true;
        }
        if (!wrote) return "()";
        return out.str();
    }

    static Perm parse_cycles(const std::string& text, int degree) {
        std::vector<std::vector<int>> cycles;
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        };
        skip_ws();
        while (i < text.size()) {
            if (text[i] != '(')
                throw std::domain_error("cycle notation: expected '(' at position " +
                                        std::to_string(i));
            ++i;
            std::vector<int> cyc;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                if (!isdigit(static_cast<unsigned char>(text[i])))
                    throw std::domain_error("cycle notation: expected digit at position " +
                                            std::to_string(i));
                int v = 0;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + (text[i++] - '0');
                if (v < 1 || v > degree)
                    throw std::domain_error("cycle notation: point " + std::to_string(v) +
                                            " out of range for degree " + std::to_string(degree));
                cyc.push_back(v - 1);
                skip_ws();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    skip_ws();
                }
            }
            if (i >= text.size())
                throw std::domain_error("cycle notation: unterminated cycle");
            ++i; // ')'
            if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
            skip_ws();
        }
        return from_cycles(degree, cycles);
    }

private:
    std::vector<int> img_;
};

struct PermHash {
    size_t operator()(const Perm& p) const { return p.hash(); }
};

} // namespace weyl
