#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/perm.hpp"

namespace weyl {

// Orbit of a point with a Schreier vector: each orbit point remembers the
// generator and predecessor that discovered it, so transversal elements are
// reconstructed by walking to the root. Memory stays O(orbit) even for
// regular representations of large groups.
struct PointOrbit {
    int base = -1;
    std::vector<int> points;            // BFS order, points[0] == base
    std::unordered_map<int, int> via_gen;    // point -> generator index (-1 at base)
    std::unordered_map<int, int> parent;     // point -> predecessor point

    bool contains(int p) const { return via_gen.count(p) != 0; }
    size_t size() const { return points.size(); }
};

// Conjugation orbit of a group element; transversals stored as full tables
// since conjugacy classes in this artifact stay small.
struct ElementOrbit {
    std::vector<Perm> elements; // BFS order, elements[0] == seed
    std::unordered_map<Perm, Perm, PermHash> transversal; // e -> u with seed^u == e
};

class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators)
        : degree_(degree), gens_(std::move(generators)) {
        if (gens_.empty()) gens_.push_back(Perm::identity(degree_));
        for (const auto& g : gens_)
            if (g.degree() != degree_)
                throw std::domain_error("PermGroup: generator degree mismatch");
    }

    static PermGroup trivial(int degree) { return PermGroup(degree, {Perm::identity(degree)}); }

    static PermGroup symmetric(int n) {
        if (n <= 1) return trivial(std::max(n, 1));
        std::vector<Perm> gens;
        gens.push_back(Perm::from_cycles(n, {{0, 1}}));
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Perm::from_cycles(n, {cyc}));
        return PermGroup(n, std::move(gens));
    }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    // --- orbits -----------------------------------------------------------

    PointOrbit point_orbit(int x) const {
        if (x < 0 || x >= degree_) throw std::domain_error("orbit: point out of range");
        PointOrbit orb;
        orb.base = x;
        orb.points.push_back(x);
        orb.via_gen[x] = -1;
        orb.parent[x] = x;
        for (size_t q = 0; q < orb.points.size(); ++q) {
            int p = orb.points[q];
            for (size_t gi = 0; gi < gens_.size(); ++gi) {
                int r = gens_[gi](p);
                if (!orb.contains(r)) {
                    orb.points.push_back(r);
                    orb.via_gen[r] = static_cast<int>(gi);
                    orb.parent[r] = p;
                }
            }
        }
        return orb;
    }

    // Transversal element u with u(base) = p.
    Perm transversal_element(const PointOrbit& orb, int p) const {
        std::vector<int> path; // generator indices root-to-p, applied left to right
        int cur = p;
        while (orb.via_gen.at(cur) != -1) {
            path.push_back(orb.via_gen.at(cur));
            cur = orb.parent.at(cur);
        }
        Perm u = Perm::identity(degree_);
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = gens_[*it] * u;
        return u;
    }

    ElementOrbit conjugation_orbit(const Perm& x) const {
        if (x.degree() != degree_) throw std::domain_error("orbit: element degree mismatch");
        ElementOrbit orb;
        orb.elements.push_back(x);
        orb.transversal.emplace(x, Perm::identity(degree_));
        for (size_t q = 0; q < orb.elements.size(); ++q) {
            Perm e = orb.elements[q];
            for (const auto& s : gens_) {
                Perm e2 = e.conjugated_by(s);
                if (!orb.transversal.count(e2)) {
                    // e2 = s e s^-1 = (s u) x (s u)^-1
                    orb.transversal.emplace(e2, s * orb.transversal.at(e));
                    orb.elements.push_back(std::move(e2));
                }
            }
        }
        return orb;
    }

    std::vector<Perm> conjugacy_class(const Perm& x) const { return conjugation_orbit(x).elements; }

    // --- stabilizers ------------------------------------------------------

    PermGroup point_stabilizer(int x) const {
        PointOrbit orb = point_orbit(x);
        std::vector<Perm> sgens = schreier_generators(orb);
        if (sgens.empty()) sgens.push_back(Perm::identity(degree_));
        return PermGroup(degree_, std::move(sgens));
    }

    // Stabilizer of an element under conjugation, i.e. the centralizer.
    PermGroup centralizer(const Perm& h) const {
        if (h.degree() != degree_) throw std::domain_error("centralizer: degree mismatch");
        ElementOrbit orb = conjugation_orbit(h);
        std::vector<Perm> sgens;
        std::unordered_set<Perm, PermHash> seen;
        for (const auto& e : orb.elements) {
            const Perm& u = orb.transversal.at(e);
            for (const auto& s : gens_) {
                Perm e2 = e.conjugated_by(s);
                // u2^-1 s u conjugates h to itself
                Perm w = orb.transversal.at(e2).inverse() * s * u;
                if (w.is_identity()) continue;
                if (seen.insert(w).second) sgens.push_back(w);
            }
        }
        if (sgens.empty()) sgens.push_back(Perm::identity(degree_));
        return PermGroup(degree_, std::move(sgens));
    }

    // --- order, membership ------------------------------------------------

    long long order() const { return chain().order; }

    bool contains(const Perm& g) const {
        if (g.degree() != degree_) return false;
        Perm r = g;
        for (const auto& lvl : chain().levels) {
            int p = r(lvl.orbit.base);
            if (!lvl.orbit.contains(p)) return false;
            r = transversal_of_level(lvl, p).inverse() * r;
        }
        return r.is_identity();
    }

    // Full element list; refuses beyond the budget rather than guessing.
    std::vector<Perm> elements(size_t budget = 2'000'000) const {
        std::vector<Perm> elems;
        std::unordered_set<Perm, PermHash> seen;
        Perm id = Perm::identity(degree_);
        elems.push_back(id);
        seen.insert(id);
        for (size_t q = 0; q < elems.size(); ++q) {
            for (const auto& s : gens_) {
                Perm e2 = elems[q] * s;
                if (seen.insert(e2).second) {
                    if (elems.size() >= budget)
                        throw resource_error("element enumeration exceeds budget of " +
                                             std::to_string(budget));
                    elems.push_back(std::move(e2));
                }
            }
        }
        return elems;
    }

    // Conjugacy classes of involutions: class representative -> class size.
    // Representatives are the first members found in enumeration order.
    std::vector<std::pair<Perm, long long>> involution_census(size_t budget = 2'000'000) const {
        std::vector<Perm> all = elements(budget);
        std::unordered_set<Perm, PermHash> involutions;
        for (const auto& g : all)
            if (g.is_involution()) involutions.insert(g);

        std::vector<std::pair<Perm, long long>> census;
        for (const auto& g : all) {
            if (!involutions.count(g)) continue;
            std::vector<Perm> cls = conjugacy_class(g);
            for (const auto& e : cls) involutions.erase(e);
            census.emplace_back(g, static_cast<long long>(cls.size()));
        }
        return census;
    }

private:
    struct ChainLevel {
        PointOrbit orbit;
        std::vector<Perm> gens; // generators of the group at this level
    };
    struct Chain {
        std::vector<ChainLevel> levels;
        long long order = 1;
    };

    int degree_;
    std::vector<Perm> gens_;

    mutable std::shared_ptr<const Chain> chain_;
    mutable std::mutex chain_mutex_;

    Perm transversal_of_level(const ChainLevel& lvl, int p) const {
        std::vector<int> path;
        int cur = p;
        while (lvl.orbit.via_gen.at(cur) != -1) {
            path.push_back(lvl.orbit.via_gen.at(cur));
            cur = lvl.orbit.parent.at(cur);
        }
        Perm u = Perm::identity(degree_);
        for (auto it = path.rbegin(); it != path.rend(); ++it) u = lvl.gens[*it] * u;
        return u;
    }

    std::vector<Perm> schreier_generators(const PointOrbit& orb) const {
        return schreier_generators_impl(orb, gens_);
    }

    std::vector<Perm> schreier_generators_impl(const PointOrbit& orb,
                                               const std::vector<Perm>& gens) const {
        // Cache transversal tables when they fit comfortably; otherwise
        // rebuild from the Schreier vector per point.
        const size_t cache_budget = 20'000'000;
        bool cache = orb.size() * static_cast<size_t>(degree_) <= cache_budget;

        std::unordered_map<int, Perm> table;
        auto u_of = [&](int p) -> Perm {
            if (cache) {
                auto it = table.find(p);
                if (it != table.end()) return it->second;
            }
            std::vector<int> path;
            int cur = p;
            while (orb.via_gen.at(cur) != -1) {
                path.push_back(orb.via_gen.at(cur));
                cur = orb.parent.at(cur);
            }
            Perm u = Perm::identity(degree_);
            for (auto it = path.rbegin(); it != path.rend(); ++it) u = gens[*it] * u;
            if (cache) table.emplace(p, u);
            return u;
        };

        std::vector<Perm> sgens;
        std::unordered_set<Perm, PermHash> seen;
        for (int p : orb.points) {
            Perm up = u_of(p);
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                int q = gens[gi](p);
                // Tree edges yield the identity by construction.
                if (orb.parent.at(q) == p && orb.via_gen.at(q) == static_cast<int>(gi)) continue;
                Perm w = u_of(q).inverse() * gens[gi] * up;
                if (w.is_identity()) continue;
                if (seen.insert(w).second) sgens.push_back(std::move(w));
            }
        }
        return sgens;
    }

    const Chain& chain() const {
        std::lock_guard<std::mutex> lock(chain_mutex_);
        if (!chain_) {
            auto c = std::make_shared<Chain>();
            std::vector<Perm> cur = gens_;
            while (true) {
                int base = -1;
                for (const auto& g : cur) {
                    for (int x = 0; x < degree_; ++x) {
                        if (g(x) != x) {
                            if (base == -1 || x < base) base = x;
                            break;
                        }
                    }
                }
                if (base == -1) break; // current group is trivial

                ChainLevel lvl;
                lvl.gens = cur;
                // orbit of base under cur
                lvl.orbit.base = base;
                lvl.orbit.points.push_back(base);
                lvl.orbit.via_gen[base] = -1;
                lvl.orbit.parent[base] = base;
                for (size_t q = 0; q < lvl.orbit.points.size(); ++q) {
                    int p = lvl.orbit.points[q];
                    for (size_t gi = 0; gi < cur.size(); ++gi) {
                        int r = cur[gi](p);
                        if (!lvl.orbit.contains(r)) {
                            lvl.orbit.points.push_back(r);
                            lvl.orbit.via_gen[r] = static_cast<int>(gi);
                            lvl.orbit.parent[r] = p;
                        }
                    }
                }
                std::vector<Perm> next = schreier_generators_impl(lvl.orbit, cur);
                c->order *= static_cast<long long>(lvl.orbit.size());
                c->levels.push_back(std::move(lvl));
                if (next.empty()) break;
                cur = std::move(next);
            }
            chain_ = std::move(c);
        }
        return *chain_;
    }

public:
    PermGroup(const PermGroup& o) : degree_(o.degree_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lock(o.chain_mutex_);
        chain_ = o.chain_;
    }
    PermGroup& operator=(const PermGroup& o) {
        if (this != &o) {
            std::scoped_lock lock(chain_mutex_, o.chain_mutex_);
            degree_ = o.degree_;
            gens_ = o.gens_;
            chain_ = o.chain_;
        }
        return *this;
    }
    PermGroup(PermGroup&& o) noexcept : degree_(o.degree_), gens_(std::move(o.gens_)) {
        std::lock_guard<std::mutex> lock(o.chain_mutex_);
        chain_ = std::move(o.chain_);
    }
    PermGroup& operator=(PermGroup&& o) noexcept {
        if (this != &o) {
            std::scoped_lock lock(chain_mutex_, o.chain_mutex_);
            degree_ = o.degree_;
            gens_ = std::move(o.gens_);
            chain_ = std::move(o.chain_);
        }
        return *this;
    }
};

} // namespace weyl
