#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circpoly/weights.hpp"

using namespace circpoly;

static WeightSystem ws_of(std::initializer_list<long> v) {
    std::vector<Int> n;
    for (long x : v) n.emplace_back(x);
    return build_weight_system(n);
}

TEST_CASE("cofactor gcds and minimality") {
    auto w1 = ws_of({6, 10, 15});
    CHECK(w1.cofactor_gcds() == std::vector<Int>{5, 3, 2});
    CHECK(w1.minimal());

    auto w2 = ws_of({2, 3, 5});
    CHECK(w2.cofactor_gcds() == std::vector<Int>{1, 1, 1});
    CHECK_FALSE(w2.minimal());

    auto w3 = ws_of({1, 1});
    CHECK(w3.cofactor_gcds() == std::vector<Int>{1, 1});
    CHECK(w3.minimal());

    auto w4 = ws_of({2, 2, 1});
    CHECK(w4.cofactor_gcds() == std::vector<Int>{1, 1, 2});
    CHECK(w4.minimal());
    CHECK(w4.squarefree_mask() == 0b011);
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(ws_of({5}), std::invalid_argument);
    CHECK_THROWS_AS(ws_of({4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(ws_of({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ws_of({-2, 3}), std::invalid_argument);
}

TEST_CASE("any coprime pair is minimal") {
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 12; ++b) {
            if (gcd(Int(a), Int(b)) != 1) continue;
            auto ws = ws_of({a, b});
            CHECK(ws.minimal());
            CHECK(ws.d(0) == b);
            CHECK(ws.d(1) == a);
        }
}

TEST_CASE("basis elements") {
    auto ws = ws_of({6, 10, 15});
    auto basis = basis_elements(ws);
    REQUIRE(basis.size() == 5);
    // l_i = e_i + eb_i
    CHECK(basis[0] == LatticePoint({1, 0, 0}, {1, 0, 0}));
    CHECK(basis[1] == LatticePoint({0, 1, 0}, {0, 1, 0}));
    CHECK(basis[2] == LatticePoint({0, 0, 1}, {0, 0, 1}));
    // eta_1 = 3 e_2 + 5 eb_1, eta_2 = 2 e_3 + 3 eb_2
    CHECK(basis[3] == LatticePoint({0, 3, 0}, {5, 0, 0}));
    CHECK(basis[4] == LatticePoint({0, 0, 2}, {0, 3, 0}));
    for (const auto& p : basis) CHECK(ws.in_lattice(p));

    auto w2 = ws_of({2, 3});
    CHECK(basis_eta(w2, 0) == LatticePoint({0, 2}, {3, 0}));

    auto w3 = ws_of({1, 1});
    CHECK(basis_eta(w3, 0) == LatticePoint({0, 1}, {1, 0}));

    CHECK_THROWS_AS(basis_elements(ws_of({2, 3, 5})), std::invalid_argument);
}

TEST_CASE("to_basis_coords on the v_ij expansions") {
    auto ws = ws_of({6, 10, 15});
    // v_13 = 5 e_1 + 2 eb_3
    auto c = to_basis_coords(ws, LatticePoint({5, 0, 0}, {0, 0, 2}));
    CHECK(c.eta == std::vector<Int>{-1, -1});
    CHECK(c.ell == std::vector<Int>{5, 3, 2});
    // v_31 = 2 e_3 + 5 eb_1
    c = to_basis_coords(ws, LatticePoint({0, 0, 2}, {5, 0, 0}));
    CHECK(c.eta == std::vector<Int>{1, 1});
    CHECK(c.ell == std::vector<Int>{0, -3, 0});
    // basis element round trip
    c = to_basis_coords(ws, basis_ell(ws, 1));
    CHECK(c.eta == std::vector<Int>{0, 0});
    CHECK(c.ell == std::vector<Int>{0, 1, 0});

    CHECK_THROWS_AS(to_basis_coords(ws, LatticePoint({1, 0, 0}, {0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("basis coordinate round trip on random lattice points") {
    std::mt19937 rng(20260817);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (auto weights : {std::vector<Int>{6, 10, 15}, {2, 3}, {1, 1}, {2, 2, 1}, {6, 10, 15, 30}}) {
        WeightSystem ws(weights);
        const int k = ws.k();
        for (int trial = 0; trial < 200; ++trial) {
            BasisCoords c;
            for (int i = 0; i + 1 < k; ++i) c.eta.emplace_back(coef(rng));
            for (int i = 0; i < k; ++i) c.ell.emplace_back(coef(rng));
            auto x = from_basis_coords(ws, c);
            CHECK(ws.in_lattice(x));
            CHECK(to_basis_coords(ws, x) == c);
        }
    }
}

TEST_CASE("iota") {
    auto w1 = ws_of({2, 3});
    CHECK(iota(w1, {3, -2}) == std::vector<Int>{1, -1});
    auto w2 = ws_of({6, 10, 15});
    CHECK(iota(w2, {5, -3, 0}) == std::vector<Int>{1, -1, 0});
    CHECK(iota(w2, {0, 0, 0}) == std::vector<Int>{0, 0, 0});
    CHECK_THROWS_AS(iota(w2, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("iota inverse on a spanning set") {
    for (auto weights : {std::vector<Int>{6, 10, 15}, {2, 3}, {2, 2, 1}, {6, 10, 15, 30}}) {
        WeightSystem ws(weights);
        const int k = ws.k();
        for (int i = 0; i + 1 < k; ++i) {
            std::vector<Int> t(k, 0);
            t[i] = 1;
            t[i + 1] = -1;
            CHECK(iota(ws, iota_inverse(ws, t)) == t);
        }
    }
}

TEST_CASE("extend_weights") {
    auto ws = ws_of({6, 10, 15});
    auto ext = extend_weights(ws, 1);
    CHECK(ext.weights() == std::vector<Int>{6, 10, 15, 30});
    CHECK(ext.cofactor_gcds() == std::vector<Int>{5, 3, 2, 1});
    CHECK(ext.minimal());

    auto e2 = extend_weights(ws_of({1, 1}), 2);
    CHECK(e2.weights() == std::vector<Int>{1, 1, 1, 1});
    CHECK(e2.cofactor_gcds() == std::vector<Int>{1, 1, 1, 1});

    auto e3 = extend_weights(ws_of({2, 3}), 1);
    CHECK(e3.weights() == std::vector<Int>{2, 3, 6});
    CHECK(e3.cofactor_gcds() == std::vector<Int>{3, 2, 1});
    CHECK(e3.minimal());

    CHECK_THROWS_AS(extend_weights(ws_of({2, 3, 5}), 1), std::invalid_argument);
}

TEST_CASE("d_pair accessor") {
    auto ws = ws_of({6, 10, 15});
    CHECK(ws.d_pair(0, 1) == 5);
    CHECK(ws.d_pair(1, 0) == 3);
    CHECK(ws.d_pair(2, 2) == 1);
    CHECK(ws.d_pair(0, 0) == 1);
}
