#include <catch2/catch_amalgamated.hpp>

#include "reflection_closure_oracle.hpp"
#include "weyl/canonical.hpp"
#include "weyl/todd_coxeter.hpp"
#include "weyl/weyl_graphs.hpp"

using namespace weyl;

namespace {
long long classical_order(char family, int n) {
    auto fact = [](int k) {
        long long r = 1;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    switch (family) {
        case 'A': return fact(n + 1);
        case 'B':
        case 'C': return (1LL << n) * fact(n);
        case 'D': return (1LL << (n - 1)) * fact(n);
        default: throw std::logic_error("no classical order");
    }
}
} // namespace

TEST_CASE("coset counts over the trivial subgroup equal the group order") {
    SECTION("dihedral groups: I2(m) has order 2m") {
        for (int m = 3; m <= 9; ++m) {
            GroupPresentation p =
                coxeter_presentation(CoxeterMatrix::catalog("I2(" + std::to_string(m) + ")"));
            CHECK(coset_enumerate(p).count == 2 * m);
        }
    }
    SECTION("classical families at small rank, plus A5 and D5") {
        for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4",
                                 "D4", "D5"}) {
            GroupPresentation p = coxeter_presentation(CoxeterMatrix::catalog(name));
            CHECK(coset_enumerate(p).count == classical_order(name[0], name[1] - '0'));
        }
    }
    SECTION("F4 enumerates to 1152 and G2 to 12") {
        CHECK(coset_enumerate(coxeter_presentation(CoxeterMatrix::catalog("F4"))).count == 1152);
        CHECK(coset_enumerate(coxeter_presentation(CoxeterMatrix::catalog("G2"))).count == 12);
    }
    SECTION("H3 and H4 against the exact Q(sqrt5) reflection closure") {
        long long h3 = oracle::coxeter_group_order_q5(CoxeterMatrix::catalog("H3").m);
        long long h4 = oracle::coxeter_group_order_q5(CoxeterMatrix::catalog("H4").m);
        CHECK(h3 == 120);
        CHECK(coset_enumerate(coxeter_presentation(CoxeterMatrix::catalog("H3"))).count == h3);
        CHECK(coset_enumerate(coxeter_presentation(CoxeterMatrix::catalog("H4"))).count == h4);
    }
}

TEST_CASE("a reducible system presents the doubled dihedral group") {
    // <a,b,c | a2, b2, c2, (ac)2, (bc)2, (ab)5> is Dih5 x Z/2 of order 20
    GroupPresentation p = parse_presentation(
        "gens: a b c; rels: a^2, b^2, c^2, (a c)^2, (b c)^2, (a b)^5");
    CHECK(coset_enumerate(p).count == 20);
}

TEST_CASE("cosets of a nontrivial subgroup") {
    // Sym4 = A3 over the parabolic <s1, s2> has index 4
    GroupPresentation p = coxeter_presentation(CoxeterMatrix::catalog("A3"));
    CHECK(coset_enumerate(p, {Word{1}, Word{2}}).count == 4);
    CHECK(coset_enumerate(p, {Word{1}}).count == 12);
    // over the whole group the index is 1
    CHECK(coset_enumerate(p, {Word{1}, Word{2}, Word{3}}).count == 1);
}

TEST_CASE("the coset bound aborts divergent enumerations") {
    GroupPresentation infinite;
    infinite.ngens = 2;
    infinite.add_relator({1, 1});
    infinite.add_relator({2, 2}); // infinite dihedral group
    CHECK_THROWS_AS(coset_enumerate(infinite, {}, 5000), resource_error);
}

TEST_CASE("generator actions of the enumerated image") {
    SECTION("images are involutions and |st| = m_{s,t}") {
        for (const char* name : {"A3", "B3", "F4", "H3", "I2(6)"}) {
            CoxeterMatrix cm = CoxeterMatrix::catalog(name);
            CosetTable tbl = coset_enumerate(coxeter_presentation(cm));
            std::vector<Perm> g = tbl.generator_actions();
            for (int i = 0; i < cm.rank; ++i) {
                CHECK(g[i].is_involution());
                for (int j = i + 1; j < cm.rank; ++j) CHECK((g[i] * g[j]).order() == cm.m[i][j]);
            }
        }
    }
    SECTION("the image of the regular representation has the full order") {
        CosetTable tbl = coset_enumerate(coxeter_presentation(CoxeterMatrix::catalog("B3")));
        CHECK(tbl.permutation_image().order() == 48);
    }
}

TEST_CASE("verify_relations certifies quotients") {
    PermGroup sym3 = PermGroup::symmetric(3);
    Perm a = Perm::parse_cycles("(1 2)", 3);
    Perm b = Perm::parse_cycles("(2 3)", 3);
    std::vector<Word> sym3_relators{{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}};
    CHECK(verify_relations(sym3, sym3_relators, {a, b}));
    // (ab)^2 = 1 fails for the non-commuting pair
    CHECK_FALSE(verify_relations(sym3, {{1, 2, 1, 2}}, {a, b}));
    // images must be group elements
    CHECK_THROWS_AS(verify_relations(PermGroup(3, {Perm::parse_cycles("(1 2 3)", 3)}),
                                     sym3_relators, {a, b}),
                    std::domain_error);
}

TEST_CASE("reflection graphs") {
    SECTION("H3: 15 vertices in five triangles") {
        Graph g = reflection_graph(CoxeterMatrix::catalog("H3"), {});
        CHECK(g.size() == 15);
        auto comps = g.components();
        CHECK(comps.size() == 5);
        for (const auto& c : comps) {
            CHECK(c.size() == 3);
            CHECK(g.is_clique(c));
        }
    }
    SECTION("H4: 60 vertices, connected, locally W(H3)") {
        Graph h4 = reflection_graph(CoxeterMatrix::catalog("H4"), {});
        CHECK(h4.size() == 60);
        CHECK(h4.is_connected());
        Graph h3 = reflection_graph(CoxeterMatrix::catalog("H3"), {});
        for (int v : {0, 17, 59})
            CHECK(is_isomorphic(h4.local_graph(v), h3, false));
    }
    SECTION("the F4 Dynkin reflection graph is the Weyl graph, colors included") {
        Graph g = reflection_graph(CoxeterMatrix::catalog("F4"), {0, 3});
        CHECK(is_isomorphic(g, weyl_graph("F4")));
    }
    SECTION("crystallographic reflection graphs match Weyl graphs") {
        for (const char* name : {"B3", "C3", "A4"}) {
            Graph g = reflection_graph(CoxeterMatrix::catalog(name), {});
            CHECK(is_isomorphic(g, weyl_graph(name), g.is_colored()));
        }
    }
    SECTION("W(I2(m)): m isolated vertices for odd m, m/2 edges for even m") {
        for (int m = 3; m <= 8; ++m) {
            Graph g = reflection_graph(CoxeterMatrix::catalog("I2(" + std::to_string(m) + ")"), {});
            Graph expect(m);
            if (m % 2 == 0)
                for (int k = 0; k < m / 2; ++k) expect.add_edge(2 * k, 2 * k + 1);
            CHECK(is_isomorphic(g, expect, false));
        }
    }
    SECTION("class representative bounds checked") {
        CHECK_THROWS_AS(reflection_graph(CoxeterMatrix::catalog("A3"), {5}), std::domain_error);
    }
}
