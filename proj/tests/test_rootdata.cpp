#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rootdata/rootdata.hpp"

using namespace dahazeta;
using namespace dahazeta::rootdata;

TEST_CASE("weight <-> diagram") {
    CHECK(weight_diagram({1, 1}) == YoungDiagram{2, 1});      // omega_1 + omega_2 in A_2
    CHECK(weight_diagram({1, 0, 0}) == YoungDiagram{1});      // omega_1
    CHECK(weight_diagram({0, 2, 0}) == YoungDiagram{2, 2});   // 2 omega_2 in A_3
    CHECK(diagram_weight({2, 1}, 2) == Weight{1, 1});
    CHECK_THROWS(diagram_weight({2, 1, 1}, 2));
    CHECK_THROWS(weight_diagram({1, -1}));
    // round trip on random dominant weights
    std::mt19937 gen(3);
    std::uniform_int_distribution<int> d(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Weight b{d(gen), d(gen), d(gen), d(gen)};
        if (weight_diagram(b).empty()) continue;
        CHECK(diagram_weight(weight_diagram(b), 4) == b);
    }
}

TEST_CASE("pairings") {
    CHECK(pairing({1}, {1}) == Rat(1, 2));               // (omega_1, omega_1) in A_1
    CHECK(pairing_root({1, 0}, 1, 2) == 1);              // (omega_1, alpha_1)
    CHECK(rho_pairing({1, 0}) == Rat(1));                // (rho, omega_1) = n/2 at n = 2
    CHECK(rho_pairing({2}) == Rat(1));                   // A_1: 2 * 1/2
    CHECK(norm2({2, 0}) == Rat(4) - Rat(4, 3));          // 2 omega_1 in A_2
    CHECK_THROWS(pairing({1}, {1, 0}));
    // two routes to (b, rho) agree
    std::mt19937 gen(5);
    std::uniform_int_distribution<int> d(0, 4);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            Weight b(n);
            for (auto& x : b) x = d(gen);
            CHECK(rho_pairing(b) == rho_pairing_two_ways(b));
        }
}

TEST_CASE("dominance and cones") {
    Weight b = diagram_weight({2, 1}, 2);
    auto cone = dominance_cone(b);
    // below (2,1) in A_2: itself and (1,1,1) ~ 0-weight
    CHECK(cone.size() == 2);
    CHECK(dominance_leq(Weight{0, 0}, b));
    CHECK(!dominance_leq(b, Weight{0, 0}));
    // (2): cone below 2*omega_1 in A_3 is {(2), (1,1)}
    auto cone2 = dominance_cone(diagram_weight({2}, 3));
    CHECK(cone2.size() == 2);
}

TEST_CASE("orbits and the Weyl action") {
    auto orb = weyl_orbit(Weight{1, 0});
    CHECK(orb.size() == 3);  // minuscule in A_2
    auto orb2 = weyl_orbit(Weight{0, 1, 0});
    CHECK(orb2.size() == 6);  // wedge^2 of C^4
    // s_i relations
    Weight b{2, -1, 3};
    CHECK(simple_reflect(1, simple_reflect(1, b)) == b);
    auto s1s2s1 = simple_reflect(1, simple_reflect(2, simple_reflect(1, b)));
    auto s2s1s2 = simple_reflect(2, simple_reflect(1, simple_reflect(2, b)));
    CHECK(s1s2s1 == s2s1s2);
    CHECK(iota(Weight{2, 0, 1}) == Weight{1, 0, 2});
}

TEST_CASE("permutations and reduced words") {
    for (int n = 1; n <= 5; ++n) {
        auto w0 = longest_element(n);
        CHECK(perm_length(w0) == n * (n + 1) / 2);
        auto word = reduced_word(w0);
        CHECK(static_cast<int>(word.size()) == perm_length(w0));
        // recompose
        Perm p(n + 1);
        for (int i = 0; i <= n; ++i) p[i] = i;
        for (auto it = word.begin(); it != word.end(); ++it) {
            // left-to-right word letters: p := p * s_i
            std::swap(p[*it - 1], p[*it]);
        }
        CHECK(p == w0);
        for (int r = 1; r <= n; ++r) {
            auto ur = u_r_perm(r, n);
            CHECK(static_cast<int>(reduced_word(ur).size()) == perm_length(ur));
            CHECK(perm_length(ur) == r * (n + 1 - r));
            // u_r sends omega_r to the antidominant chamber
            Weight w(n, 0);
            w[r - 1] = 1;
            Weight img = apply_perm(ur, w);
            CHECK(!is_dominant(img));
            CHECK(dominant_rep(img) == iota(w));
        }
    }
}

TEST_CASE("diagram operations") {
    CHECK(diagram_union({2}, {1, 1}) == YoungDiagram{2, 1});
    CHECK(diagram_transpose({2, 1}) == YoungDiagram{2, 1});
    CHECK(diagram_transpose({2, 2}) == YoungDiagram{2, 2});
    CHECK(diagram_transpose({3, 1}) == YoungDiagram{2, 1, 1});
    // union is a lattice join
    std::mt19937 gen(9);
    std::uniform_int_distribution<int> d(1, 4);
    auto rnd = [&] {
        YoungDiagram l{d(gen) + 2, d(gen)};
        std::sort(l.rbegin(), l.rend());
        return l;
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK(diagram_union(a, b) == diagram_union(b, a));
        CHECK(diagram_union(a, diagram_union(b, c)) == diagram_union(diagram_union(a, b), c));
        CHECK(diagram_union(a, a) == a);
    }
    // arms and legs: hooks of (2,1)
    YoungDiagram l{2, 1};
    CHECK(arm(l, 0, 0) == 1);
    CHECK(leg(l, 0, 0) == 1);
    CHECK(arm(l, 0, 1) == 0);
    CHECK(leg(l, 0, 1) == 0);
    CHECK(arm(l, 1, 0) == 0);
    CHECK(leg(l, 1, 0) == 0);
}
