#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/canonical.hpp"
#include "weyl/graph.hpp"
#include "weyl/perm_group.hpp"
#include "weyl/todd_coxeter.hpp"
#include "weyl/weyl_graphs.hpp"

namespace weyl {

// Commuting graph of a group on the conjugacy class of x; vertex order is
// the conjugation-orbit BFS order.
inline Graph class_commuting_graph(const PermGroup& g, const Perm& x) {
    if (!g.contains(x))
        throw std::domain_error("class_commuting_graph: element is not in the group");
    std::vector<Perm> cls = g.conjugacy_class(x);
    Graph graph(static_cast<int>(cls.size()));
    for (size_t i = 0; i < cls.size(); ++i) {
        if (g.degree() <= 64) graph.set_label(static_cast<int>(i), cls[i].to_cycle_string());
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (cls[i].commutes_with(cls[j]))
                graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return graph;
}

// Data driving a recognition pipeline: a group, two involution seeds, and
// commuting seed pairs whose G-orbits become the edge set.
struct RecognitionInput {
    PermGroup group;
    Perm x, y;
    std::vector<std::pair<Perm, Perm>> edge_seeds;

    RecognitionInput(PermGroup g, Perm x_, Perm y_, std::vector<std::pair<Perm, Perm>> seeds)
        : group(std::move(g)), x(std::move(x_)), y(std::move(y_)), edge_seeds(std::move(seeds)) {
        validate();
    }

    void validate() const {
        if (!x.is_involution() || !y.is_involution())
            throw std::domain_error("recognition input: x and y must be involutions");
        if (!group.contains(x) || !group.contains(y))
            throw std::domain_error("recognition input: x or y is not in the group");
        for (const auto& [a, b] : edge_seeds) {
            if (!a.commutes_with(b) || a == b)
                throw std::domain_error("recognition input: edge seed pair must be a commuting "
                                        "pair of distinct elements");
            if (!group.contains(a) || !group.contains(b))
                throw std::domain_error("recognition input: seed element is not in the group");
        }
    }
};

// Graph on x^G (and y^G when distinct) whose edges are the G-orbits of the
// unordered seed pairs. Non-conjugate x, y color the classes short/long;
// conjugate classes produce an uncolored graph.
inline Graph seeded_graph(const RecognitionInput& ri) {
    const PermGroup& G = ri.group;
    std::vector<Perm> xs = G.conjugacy_class(ri.x);
    std::unordered_map<Perm, int, PermHash> index;
    for (size_t i = 0; i < xs.size(); ++i) index.emplace(xs[i], static_cast<int>(i));

    bool conjugate = index.count(ri.y) != 0;
    std::vector<Perm> ys;
    if (!conjugate) {
        ys = G.conjugacy_class(ri.y);
        for (size_t i = 0; i < ys.size(); ++i)
            index.emplace(ys[i], static_cast<int>(xs.size() + i));
    }

    int n = static_cast<int>(xs.size() + ys.size());
    Graph graph(n);
    if (!conjugate) {
        for (size_t i = 0; i < xs.size(); ++i) graph.set_color(static_cast<int>(i), Color::short_v);
        for (size_t i = 0; i < ys.size(); ++i)
            graph.set_color(static_cast<int>(xs.size() + i), Color::long_v);
    }
    if (G.degree() <= 64) {
        for (size_t i = 0; i < xs.size(); ++i)
            graph.set_label(static_cast<int>(i), xs[i].to_cycle_string());
        for (size_t i = 0; i < ys.size(); ++i)
            graph.set_label(static_cast<int>(xs.size() + i), ys[i].to_cycle_string());
    }

    // close each seed pair under conjugation by the generators
    for (const auto& [a, b] : ri.edge_seeds) {
        if (!index.count(a) || !index.count(b))
            throw std::domain_error("seeded_graph: seed pair lies outside the vertex classes");
        std::vector<std::pair<Perm, Perm>> frontier{{a, b}};
        std::unordered_set<size_t> seen; // hash of ordered index pair
        auto key = [&](const Perm& u, const Perm& v) {
            int i = index.at(u), j = index.at(v);
            if (i > j) std::swap(i, j);
            return static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j);
        };
        seen.insert(key(a, b));
        graph.add_edge(index.at(a), index.at(b));
        for (size_t q = 0; q < frontier.size(); ++q) {
            auto [u, v] = frontier[q];
            for (const auto& s : G.generators()) {
                Perm u2 = u.conjugated_by(s), v2 = v.conjugated_by(s);
                if (seen.insert(key(u2, v2)).second) {
                    graph.add_edge(index.at(u2), index.at(v2));
                    frontier.emplace_back(std::move(u2), std::move(v2));
                }
            }
        }
    }
    return graph;
}

struct Hypothesis {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct RecognitionReport {
    std::string pipeline;
    std::vector<Hypothesis> hypotheses;
    int graph_size = 0;
    int short_count = 0, long_count = 0;
    std::string verdict = "INCONCLUSIVE";
    std::map<std::string, std::string> certificates; // witnesses and order computations

    bool check(const std::string& name, bool pass, const std::string& witness) {
        hypotheses.push_back({name, pass, witness});
        return pass;
    }

    bool all_passed() const {
        for (const auto& h : hypotheses)
            if (!h.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["pipeline"] = pipeline;
        j["verdict"] = verdict;
        nlohmann::json hs = nlohmann::json::array();
        for (const auto& h : hypotheses)
            hs.push_back({{"name", h.name}, {"pass", h.pass}, {"witness", h.witness}});
        j["hypotheses"] = std::move(hs);
        j["graph"] = {{"n", graph_size}, {"short", short_count}, {"long", long_count}};
        nlohmann::json certs = nlohmann::json::object();
        for (const auto& [key, value] : certificates) certs[key] = value;
        j["certificates"] = std::move(certs);
        return j;
    }
};

namespace detail {

// kernel of the conjugation action of G on a list of elements; by the
// generation hypothesis this is the center
inline long long conjugation_kernel_order(const PermGroup& G, const std::vector<Perm>& elems) {
    std::unordered_map<Perm, int, PermHash> index;
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
    std::vector<Perm> action_gens;
    for (const auto& s : G.generators()) {
        std::vector<int> img(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) {
            auto it = index.find(elems[i].conjugated_by(s));
            if (it == index.end())
                throw std::domain_error("conjugation action does not preserve the class list");
            img[i] = it->second;
        }
        action_gens.push_back(Perm::from_images(std::move(img)));
    }
    PermGroup image(static_cast<int>(elems.size()), std::move(action_gens));
    return G.order() / image.order();
}

inline long long binom2(long long m) { return m * (m - 1) / 2; }

} // namespace detail

// Symmetric-group recognition from transposition-like data: builds the
// seeded graph, checks it is connected and locally K(n,2), identifies it as
// K(n+2,2), and certifies orders. Verdict SYM(n+2) only when every check
// passes.
inline RecognitionReport recognize_sym(const RecognitionInput& ri, int n) {
    if (n < 7) throw std::domain_error("recognize_sym: the theorem requires n >= 7");
    RecognitionReport rep;
    rep.pipeline = "sym";

    const PermGroup& G = ri.group;
    std::vector<Perm> cls = G.conjugacy_class(ri.x);
    rep.check("x is an involution", ri.x.is_involution(), ri.x.to_cycle_string());
    rep.check("y is conjugate to x", std::find(cls.begin(), cls.end(), ri.y) != cls.end(),
              ri.y.to_cycle_string());

    long long want_class = detail::binom2(n + 2);
    if (!rep.check("class size C(n+2,2)", static_cast<long long>(cls.size()) == want_class,
                   "|x^G| = " + std::to_string(cls.size()) + ", expected " +
                       std::to_string(want_class)))
        return rep;

    Graph gamma = seeded_graph(ri);
    rep.graph_size = gamma.size();
    rep.check("seeded graph connected", gamma.is_connected(),
              std::to_string(gamma.components().size()) + " component(s)");

    LocalProfile lp = local_profile(gamma);
    Graph local_want = kneser_graph(n, 2);
    bool locally_kneser = lp.homogeneous && lp.delta &&
                          *lp.delta == canonical_form(local_want);
    rep.check("locally K(" + std::to_string(n) + ",2)", locally_kneser,
              lp.homogeneous ? "local graphs homogeneous" : "local graphs differ");

    auto witness = isomorphism(gamma, kneser_graph(n + 2, 2));
    rep.check("graph is K(" + std::to_string(n + 2) + ",2)", witness.has_value(), "");
    if (witness)
        rep.certificates["graph_isomorphism"] = Perm::from_images(*witness).to_cycle_string();

    long long kernel = detail::conjugation_kernel_order(G, cls);
    rep.check("conjugation action faithful", kernel == 1,
              "kernel order " + std::to_string(kernel));

    long long expect = 1;
    for (int k = 2; k <= n + 2; ++k) expect *= k;
    long long order = G.order();
    rep.check("|G| = (n+2)!", order == expect,
              std::to_string(order) + " vs " + std::to_string(expect));
    rep.certificates["group_order"] = std::to_string(order);

    // orbit-stabilizer consistency on the class of x
    long long cent = G.centralizer(ri.x).order();
    rep.check("|G| = |x^G| * |C_G(x)|",
              order == static_cast<long long>(cls.size()) * cent,
              std::to_string(cls.size()) + " * " + std::to_string(cent));
    rep.certificates["centralizer_order"] = std::to_string(cent);

    if (rep.all_passed()) rep.verdict = "SYM(" + std::to_string(n + 2) + ")";
    return rep;
}

// W(F4) recognition: builds the bichromatic seeded graph, requires it to be
// locally like W(F4), fires one of the tightness triggers, identifies the
// graph against the two 24-vertex candidates, and certifies the group by
// centralizer orders, center size, total order, and the Coxeter-relator
// quotient argument.
inline RecognitionReport recognize_f4(const RecognitionInput& ri) {
    const PermGroup& G = ri.group;
    {
        std::vector<Perm> cls = G.conjugacy_class(ri.x);
        if (std::find(cls.begin(), cls.end(), ri.y) != cls.end())
            throw std::domain_error("recognize_f4: x and y must not be conjugate");
    }
    RecognitionReport rep;
    rep.pipeline = "f4";

    Graph gamma = seeded_graph(ri);
    rep.graph_size = gamma.size();
    rep.short_count = static_cast<int>(gamma.vertices_of_color(Color::short_v).size());
    rep.long_count = static_cast<int>(gamma.vertices_of_color(Color::long_v).size());

    rep.check("seeded graph connected", gamma.is_connected(),
              std::to_string(gamma.components().size()) + " component(s)");
    rep.check("short and long counts equal", rep.short_count == rep.long_count,
              std::to_string(rep.short_count) + " short, " + std::to_string(rep.long_count) +
                  " long");

    F4LocalCheck local = is_locally_like_f4(gamma);
    if (!rep.check("locally like W(F4)", local.ok, local.reason)) return rep;

    MuProfile mu = mu_profile(gamma);
    bool trig_mu3 = mu.mu_constant && mu.mu_value == 3;
    bool trig_24 = gamma.size() == 24;
    bool trig_tight = is_tightly_connected(gamma);
    bool trig_diam = gamma.diameter() == 2;
    std::string fired;
    if (trig_mu3) fired += "mu=3 ";
    if (trig_24) fired += "|G|=24 ";
    if (trig_tight) fired += "tightly-connected ";
    if (trig_diam) fired += "diameter-2";
    if (!rep.check("a tightness trigger fired", trig_mu3 || trig_24 || trig_tight || trig_diam,
                   fired.empty() ? "none of mu=3, 24 vertices, tight, diameter 2" : fired))
        return rep;

    std::string form = canonical_form(gamma);
    bool is_g24a = form == canonical_form(named_graph(NamedGraph::g24a));
    bool is_g24b = !is_g24a && form == canonical_form(named_graph(NamedGraph::g24b));
    if (!rep.check("graph is G24a or G24b", is_g24a || is_g24b,
                   is_g24a ? "G24a (the Weyl graph)" : (is_g24b ? "G24b" : "neither")))
        return rep;
    if (auto witness =
            isomorphism(gamma, named_graph(is_g24a ? NamedGraph::g24a : NamedGraph::g24b)))
        rep.certificates["graph_isomorphism"] = Perm::from_images(*witness).to_cycle_string();

    long long cx = G.centralizer(ri.x).order();
    long long cy = G.centralizer(ri.y).order();
    rep.check("|C_G(x)| = 96", cx == 96, std::to_string(cx));
    rep.check("|C_G(y)| = 96", cy == 96, std::to_string(cy));
    rep.certificates["centralizer_orders"] = std::to_string(cx) + ", " + std::to_string(cy);

    std::vector<Perm> all;
    for (const Perm& e : G.conjugacy_class(ri.x)) all.push_back(e);
    for (const Perm& e : G.conjugacy_class(ri.y)) all.push_back(e);
    long long kernel = detail::conjugation_kernel_order(G, all);
    rep.check("|Z(G)| in {1,2}", kernel == 1 || kernel == 2,
              "conjugation kernel order " + std::to_string(kernel));

    long long order = G.order();
    rep.check("|G| = 1152", order == 1152, std::to_string(order));
    rep.certificates["group_order"] = std::to_string(order);

    // quotient certificate: some choice of reflections satisfies the F4
    // Coxeter relators, and the presented group already has order 1152
    CoxeterMatrix f4 = CoxeterMatrix::catalog("F4");
    GroupPresentation pres = coxeter_presentation(f4);
    std::vector<Perm> longs = G.conjugacy_class(ri.y);
    std::vector<Perm> shorts = G.conjugacy_class(ri.x);
    std::optional<std::vector<Perm>> assignment;
    auto ord = [&](const Perm& a, const Perm& b) { return (a * b).order(); };
    for (const auto& g0 : longs) {
        for (const auto& g1 : longs) {
            if (ord(g0, g1) != 3) continue;
            for (const auto& g2 : shorts) {
                if (ord(g1, g2) != 4 || ord(g0, g2) != 2) continue;
                for (const auto& g3 : shorts) {
                    if (ord(g2, g3) != 3 || ord(g1, g3) != 2 || ord(g0, g3) != 2) continue;
                    assignment = std::vector<Perm>{g0, g1, g2, g3};
                    break;
                }
                if (assignment) break;
            }
            if (assignment) break;
        }
        if (assignment) break;
    }
    bool relators_ok =
        assignment.has_value() && verify_relations(G, pres.relators, *assignment);
    rep.check("F4 Coxeter relators satisfied", relators_ok,
              assignment ? "reflection assignment found" : "no Coxeter quadruple found");
    if (assignment) {
        std::string words;
        for (const auto& p : *assignment) words += (words.empty() ? "" : ", ") + p.to_cycle_string();
        rep.certificates["coxeter_generators"] = words;
    }

    // quotient + order certify the isomorphism only if the quadruple
    // generates the whole group
    long long generated =
        assignment ? PermGroup(G.degree(), *assignment).order() : 0;
    rep.check("reflection quadruple generates G", generated == order,
              std::to_string(generated) + " of " + std::to_string(order));

    long long presented = coset_enumerate(pres, {}, 100'000).count;
    rep.check("presented F4 group has order 1152", presented == 1152,
              std::to_string(presented));

    if (rep.all_passed()) rep.verdict = is_g24a ? "WF4" : "GAMMA24B";
    return rep;
}

} // namespace weyl
