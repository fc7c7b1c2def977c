#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <thread>

#include "weyl/perm_group.hpp"
#include "weyl/root_system.hpp"
#include "weyl/weyl_graphs.hpp"

using namespace weyl;

namespace {

// Oracle: all of Sym_n by exhausting image tables.
std::vector<Perm> all_of_sym(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

long long falling_factorial(long long n, long long k) {
    long long r = 1;
    for (long long i = 0; i < k; ++i) r *= n - i;
    return r;
}

} // namespace

TEST_CASE("orbits") {
    PermGroup sym5 = PermGroup::symmetric(5);

    SECTION("conjugation orbit of a transposition has C(5,2) elements") {
        auto orb = sym5.conjugacy_class(Perm::parse_cycles("(1 2)", 5));
        CHECK(orb.size() == 10);
    }
    SECTION("trivial group fixes a point") {
        PermGroup triv = PermGroup::trivial(5);
        CHECK(triv.point_orbit(3).size() == 1);
    }
    SECTION("orbit is deterministic BFS over generators in order") {
        PointOrbit orb = sym5.point_orbit(0);
        CHECK(orb.points[0] == 0);
        CHECK(orb.size() == 5);
        PointOrbit again = sym5.point_orbit(0);
        CHECK(orb.points == again.points);
    }
    SECTION("out-of-range point rejected") {
        CHECK_THROWS_AS(sym5.point_orbit(7), std::domain_error);
    }
    SECTION("W(F4) splits the 24 reflection-vertex pairs into 12 + 12 only at the root level") {
        RootSystem f4 = RootSystem::build("F4");
        PermGroup w = f4.weyl_group();
        // orbit of a short root covers exactly the 24 short roots (12 pairs)
        int short_idx = -1;
        for (size_t i = 0; i < f4.size(); ++i)
            if (f4.roots()[i].length_class == Color::short_v) {
                short_idx = static_cast<int>(i);
                break;
            }
        PointOrbit orb = w.point_orbit(short_idx);
        CHECK(orb.size() == 24);
        for (int p : orb.points) CHECK(f4.roots()[p].length_class == Color::short_v);
    }
    SECTION("W(F4) on the 24 reflection vertices: the orbit of a short vertex is the 12 "
            "short vertices") {
        RootSystem f4 = RootSystem::build("F4");
        std::vector<Perm> pair_gens;
        {
            PermGroup w = f4.weyl_group();
            for (const auto& g : w.generators()) pair_gens.push_back(induced_pair_perm(f4, g));
        }
        Graph wf4 = weyl_graph("F4");
        PermGroup action(wf4.size(), pair_gens);
        int short_vertex = wf4.vertices_of_color(Color::short_v)[0];
        PointOrbit orb = action.point_orbit(short_vertex);
        CHECK(orb.size() == 12);
        for (int v : orb.points) CHECK(wf4.color(v) == Color::short_v);
    }
}

TEST_CASE("stabilizers and the orbit-stabilizer formula") {
    PermGroup sym5 = PermGroup::symmetric(5);

    SECTION("centralizer of a transposition in Sym5 has order 12") {
        PermGroup c = sym5.centralizer(Perm::parse_cycles("(1 2)", 5));
        CHECK(c.order() == 12);
    }
    SECTION("stabilizer of a fixed point of every generator is everything") {
        std::vector<Perm> gens{Perm::parse_cycles("(1 2)", 5), Perm::parse_cycles("(1 2 3)", 5)};
        PermGroup g(5, gens);
        CHECK(g.point_stabilizer(4).order() == g.order());
    }
    SECTION("|G| = |stab| * |orbit| over all points of several groups") {
        std::vector<PermGroup> groups;
        groups.push_back(PermGroup::symmetric(6));
        groups.push_back(PermGroup(6, {Perm::parse_cycles("(1 2 3)(4 5)", 6)}));
        groups.push_back(RootSystem::build("B3").weyl_group());
        for (const auto& g : groups)
            for (int x = 0; x < g.degree(); ++x)
                CHECK(g.order() ==
                      g.point_stabilizer(x).order() * static_cast<long long>(g.point_orbit(x).size()));
    }
}

TEST_CASE("centralizers in Sym9 and W(F4)") {
    SECTION("Sym9: centralizer of (1 2) is <x> x Sym7, order 10080") {
        PermGroup sym9 = PermGroup::symmetric(9);
        CHECK(sym9.centralizer(Perm::parse_cycles("(1 2)", 9)).order() == 2 * 5040);
    }
    SECTION("centralizer of the identity is the whole group") {
        PermGroup sym5 = PermGroup::symmetric(5);
        CHECK(sym5.centralizer(Perm::identity(5)).order() == 120);
    }
    SECTION("W(F4): centralizer of a short reflection has order 96") {
        // 1152 / 12 by orbit-stabilizer over the 12-element class,
        // |<x> x W(B3)| = 2*48 cross-check
        RootSystem f4 = RootSystem::build("F4");
        PermGroup w = f4.weyl_group();
        int short_idx = -1;
        for (size_t i = 0; i < f4.size(); ++i)
            if (f4.roots()[i].length_class == Color::short_v) {
                short_idx = static_cast<int>(i);
                break;
            }
        Perm refl = f4.reflection_permutation(short_idx);
        CHECK(w.conjugacy_class(refl).size() == 12);
        CHECK(w.centralizer(refl).order() == 1152 / 12);
        CHECK(w.centralizer(refl).order() == 2 * 48);
    }
    SECTION("degree mismatch rejected") {
        CHECK_THROWS_AS(PermGroup::symmetric(5).centralizer(Perm::identity(4)),
                        std::domain_error);
    }
}

TEST_CASE("group orders") {
    CHECK(PermGroup::symmetric(5).order() == 120);
    CHECK(RootSystem::build("F4").weyl_group().order() == 1152);
    CHECK(RootSystem::build("B4").weyl_group().order() == 16 * 24); // 2^4 4!
}

TEST_CASE("membership through the stabilizer chain") {
    PermGroup g(6, {Perm::parse_cycles("(1 2 3 4 5 6)", 6)}); // Z/6
    CHECK(g.contains(Perm::parse_cycles("(1 3 5)(2 4 6)", 6)));
    CHECK_FALSE(g.contains(Perm::parse_cycles("(1 2)", 6)));
    PermGroup alt4(4, {Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(2 3 4)", 4)});
    CHECK(alt4.order() == 12);
    CHECK_FALSE(alt4.contains(Perm::parse_cycles("(1 2)", 4)));
}

TEST_CASE("element enumeration budget") {
    PermGroup sym6 = PermGroup::symmetric(6);
    CHECK(sym6.elements().size() == 720);
    CHECK_THROWS_AS(sym6.elements(100), resource_error);
}

TEST_CASE("involution census") {
    SECTION("Sym6 against the exhaustive oracle and the falling-factorial formula") {
        // oracle: enumerate Sym6 directly and bucket involutions by the
        // number of 2-cycles
        std::map<int, long long> oracle;
        for (const Perm& p : all_of_sym(6)) {
            if (!p.is_involution()) continue;
            int two_cycles = 0;
            for (int i = 0; i < 6; ++i)
                if (p(i) > i) ++two_cycles;
            ++oracle[two_cycles];
        }
        REQUIRE(oracle.size() == 3);
        CHECK(oracle[1] == 15);
        CHECK(oracle[2] == 45);
        CHECK(oracle[3] == 15);
        for (int k = 1; k <= 3; ++k)
            CHECK(oracle[k] == falling_factorial(6, 2 * k) / (falling_factorial(k, k) * (1 << k)));

        auto census = PermGroup::symmetric(6).involution_census();
        REQUIRE(census.size() == 3);
        std::multiset<long long> sizes;
        for (auto& [rep, size] : census) {
            CHECK(rep.is_involution());
            sizes.insert(size);
        }
        CHECK(sizes == std::multiset<long long>{15, 45, 15});
    }
    SECTION("census sizes match the formula for Sym_n, n <= 8") {
        for (int n = 2; n <= 8; ++n) {
            auto census = PermGroup::symmetric(n).involution_census();
            std::multiset<long long> got, want;
            for (auto& [rep, size] : census) got.insert(size);
            for (int k = 1; 2 * k <= n; ++k)
                want.insert(falling_factorial(n, 2 * k) / (falling_factorial(k, k) * (1 << k)));
            CHECK(got == want);
        }
    }
    SECTION("a 3-cycle group has no involutions") {
        PermGroup z3(3, {Perm::parse_cycles("(1 2 3)", 3)});
        CHECK(z3.involution_census().empty());
    }
    SECTION("W(F4) census includes the two reflection classes of size 12") {
        RootSystem f4 = RootSystem::build("F4");
        PermGroup w = f4.weyl_group();
        auto census = w.involution_census();
        long long total = 0;
        for (auto& [rep, size] : census) total += size;
        int short_idx = -1, long_idx = -1;
        for (size_t i = 0; i < f4.size(); ++i) {
            if (f4.roots()[i].length_class == Color::short_v && short_idx < 0)
                short_idx = static_cast<int>(i);
            if (f4.roots()[i].length_class == Color::long_v && long_idx < 0)
                long_idx = static_cast<int>(i);
        }
        Perm sref = f4.reflection_permutation(short_idx);
        Perm lref = f4.reflection_permutation(long_idx);
        CHECK(w.conjugacy_class(sref).size() == 12);
        CHECK(w.conjugacy_class(lref).size() == 12);
        // the two reflection classes are disjoint and both in the census
        bool found_short = false, found_long = false;
        for (auto& [rep, size] : census) {
            auto cls = w.conjugacy_class(rep);
            if (std::find(cls.begin(), cls.end(), sref) != cls.end()) found_short = size == 12;
            if (std::find(cls.begin(), cls.end(), lref) != cls.end()) found_long = size == 12;
        }
        CHECK(found_short);
        CHECK(found_long);
        // census covers every involution of the 1152-element group
        long long involutions = 0;
        for (const Perm& e : w.elements())
            if (e.is_involution()) ++involutions;
        CHECK(total == involutions);
    }
}

TEST_CASE("shared groups are safe to query concurrently") {
    // the stabilizer-chain cache is the only mutable state; hammer it from
    // two threads on one shared object
    RootSystem f4 = RootSystem::build("F4");
    PermGroup w = f4.weyl_group();
    Perm probe = f4.reflection_permutation(0);
    std::vector<long long> orders(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            orders[t] = w.order();
            (void)w.contains(probe);
            (void)w.point_orbit(0);
        });
    for (auto& th : threads) th.join();
    for (long long o : orders) CHECK(o == 1152);
}

TEST_CASE("conjugacy class members are reachable through recorded transversals") {
    PermGroup sym5 = PermGroup::symmetric(5);
    Perm x = Perm::parse_cycles("(1 2)", 5);
    ElementOrbit orb = sym5.conjugation_orbit(x);
    for (const Perm& e : orb.elements) {
        const Perm& u = orb.transversal.at(e);
        CHECK(x.conjugated_by(u) == e);
    }
}
