#include "doctest.h"
#include "sigmakit/ffield.hpp"
#include "support.hpp"

using namespace sigmakit;

TEST_CASE("prime field arithmetic and embedding to higher levels") {
    FieldTower tower(5, 1);
    TowerElem two = tower.from_int(2), three = tower.from_int(3);
    CHECK(two + three == tower.zero());
    CHECK(two * three == tower.one());
    CHECK((two / three) * three == two);
    CHECK(tower.embed(two, 4) * tower.embed(three, 4) == tower.one(4));
    CHECK(two.to_string() == "p=5,e=1,t=1:[2]");
}

TEST_CASE("embeddings compose along divisor chains") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(47);
    for (auto [s, u, t] : {std::array<unsigned, 3>{1, 2, 4}, {1, 2, 6}, {1, 3, 6}, {2, 4, 8},
                           {2, 6, 12}, {3, 6, 12}}) {
        for (int i = 0; i < 5; ++i) {
            TowerElem x = testsupport::random_elem(rng, tower, s);
            CHECK(tower.embed(tower.embed(x, u), t) == tower.embed(x, t));
        }
    }
}

TEST_CASE("embedding is a field homomorphism") {
    FieldTower tower(3, 2);
    testsupport::Rng rng(53);
    for (int i = 0; i < 10; ++i) {
        TowerElem x = testsupport::random_elem(rng, tower, 2);
        TowerElem y = testsupport::random_elem(rng, tower, 2);
        CHECK(tower.embed(x + y, 4) == tower.embed(x, 4) + tower.embed(y, 4));
        CHECK(tower.embed(x * y, 4) == tower.embed(x, 4) * tower.embed(y, 4));
    }
    CHECK(tower.embed(tower.one(1), 4) == tower.one(4));
}

TEST_CASE("frobenius is sigma = x -> x^q and commutes with embedding") {
    FieldTower tower(3, 2);  // q = 9
    testsupport::Rng rng(59);
    for (int i = 0; i < 8; ++i) {
        TowerElem x = testsupport::random_elem(rng, tower, 2);
        CHECK(frobenius(x, 1) == x.pow(9));
        CHECK(frobenius(x, 2) == x.pow(81));
        CHECK(tower.embed(frobenius(x, 1), 4) == frobenius(tower.embed(x, 4), 1));
        TowerElem y = testsupport::random_elem(rng, tower, 2);
        CHECK(frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1));
        CHECK(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
    }
    // sigma restricted to level 1 is the identity
    TowerElem a = tower.from_int(2, 1);
    CHECK(frobenius(a, 1) == a);
}

TEST_CASE("moduli are deterministic and irreducible") {
    FieldTower t1(5, 1), t2(5, 1);
    for (unsigned t = 1; t <= 4; ++t) {
        CHECK(t1.modulus(t) == t2.modulus(t));
        CHECK(fp::is_irreducible(t1.modulus(t), 5));
        CHECK(fp::degree(t1.modulus(t)) == int(t));
    }
}

TEST_CASE("least generator generates the unit group") {
    FieldTower tower(5, 1);
    for (unsigned t : {1u, 2u, 3u}) {
        TowerElem g = tower.least_generator(t);
        mpz_class n = tower.unit_order(t);
        CHECK(g.pow(n) == tower.one(t));
        // order is exactly n
        for (mpz_class d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            CHECK(!(g.pow(d) == tower.one(t)));
        }
        CHECK(tower.dlog(g, g) == 1);
        CHECK(tower.dlog(tower.one(t), g) == 0);
    }
    CHECK(tower.least_generator(1) == tower.from_int(2));
}

TEST_CASE("dlog inverts powering") {
    FieldTower tower(3, 1);
    TowerElem g = tower.least_generator(3);
    for (long k : {0L, 1L, 5L, 19L, 25L})
        CHECK(tower.dlog(g.pow(k), g) == mpz_class(k) % tower.unit_order(3));
}

TEST_CASE("factor_poly reconstructs products over extension levels") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(61);
    for (unsigned t : {1u, 2u}) {
        for (int trial = 0; trial < 10; ++trial) {
            TowerPoly f = {testsupport::random_elem(rng, tower, t),
                           testsupport::random_unit(rng, tower, t)};
            TowerPoly g = {testsupport::random_elem(rng, tower, t),
                           testsupport::random_elem(rng, tower, t),
                           testsupport::random_unit(rng, tower, t)};
            TowerPoly prod = tp_mul(f, g);
            TowerPoly rebuilt = {tower.one(t)};
            for (const auto& fac : factor_poly(prod, tower)) {
                for (int k = 0; k < fac.multiplicity; ++k) rebuilt = tp_mul(rebuilt, fac.poly);
                // factors are monic and nontrivial
                CHECK(fac.poly.back() == tower.one(t));
                CHECK(tp_degree(fac.poly) >= 1);
            }
            // rebuilt is the monic part of prod
            TowerElem lc = prod.back();
            TowerPoly monic_prod = prod;
            for (auto& c : monic_prod) c = c / lc;
            CHECK(tp_degree(rebuilt) == tp_degree(monic_prod));
            for (std::size_t i = 0; i < rebuilt.size(); ++i)
                CHECK(rebuilt[i] == monic_prod[i]);
        }
    }
}

TEST_CASE("roots of binomials land where theory says") {
    FieldTower tower(5, 1);
    // x^2 - 2 has no root in F_5 but two in F_25
    TowerPoly f1 = {tower.from_int(-2, 1), tower.zero(1), tower.one(1)};
    CHECK(tp_roots(f1, tower).empty());
    TowerPoly f2 = {tower.embed(tower.from_int(-2, 1), 2), tower.zero(2), tower.one(2)};
    auto roots = tp_roots(f2, tower);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(r * r == tower.embed(tower.from_int(2, 1), 2));
}

TEST_CASE("factorization over F_2 levels (trace-map splitting)") {
    FieldTower tower(2, 1);
    TowerPoly f = {tower.one(3), tower.one(3), tower.zero(3), tower.one(3)};  // x^3+x+1
    // splits into linears over F_8
    auto fs = factor_poly(f, tower);
    CHECK(fs.size() == 3);
    for (const auto& fac : fs) CHECK(tp_degree(fac.poly) == 1);
}

TEST_CASE("k^[n] is a product ring with the twisted shift") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(67);
    for (std::size_t n : {1u, 2u, 3u}) {
        std::vector<TowerElem> xc, yc;
        for (std::size_t i = 0; i < n; ++i) {
            xc.push_back(testsupport::random_elem(rng, tower, 2));
            yc.push_back(testsupport::random_elem(rng, tower, 2));
        }
        KnElem x(xc), y(yc);
        CHECK(kn_sigma(x * y) == kn_sigma(x) * kn_sigma(y));
        CHECK(kn_sigma(x + y) == kn_sigma(x) + kn_sigma(y));
        // sigma^n on k^[n] acts componentwise as frobenius^n
        KnElem sn = x;
        for (std::size_t i = 0; i < n; ++i) sn = kn_sigma(sn);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(sn.component(i) == frobenius(x.component(i), unsigned(n)));
    }
}

TEST_CASE("diagonal embedding intertwines sigma") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(71);
    for (std::size_t n : {2u, 3u}) {
        TowerElem a = testsupport::random_elem(rng, tower, 2);
        CHECK(kn_sigma(KnElem::diagonal(a, n)) == KnElem::diagonal(frobenius(a, 1), n));
        CHECK(kn_project_last(KnElem::diagonal(a, n)) == a);
    }
}

TEST_CASE("kn_embed is a morphism of difference rings") {
    FieldTower tower(5, 1);
    testsupport::Rng rng(73);
    for (std::size_t n : {1u, 2u}) {
        for (std::size_t l : {2u, 3u}) {
            std::vector<TowerElem> xc, yc;
            for (std::size_t i = 0; i < n; ++i) {
                xc.push_back(testsupport::random_elem(rng, tower, 2));
                yc.push_back(testsupport::random_elem(rng, tower, 2));
            }
            KnElem x(xc), y(yc);
            CHECK(kn_embed(x * y, l) == kn_embed(x, l) * kn_embed(y, l));
            CHECK(kn_embed(kn_sigma(x), l) == kn_sigma(kn_embed(x, l)));
            CHECK(kn_embed(x, l).n() == n * l);
        }
    }
}

TEST_CASE("caps are enforced") {
    TowerCaps caps;
    caps.level_cap = 3;
    caps.dlog_cap = 100;
    FieldTower tower(5, 1, caps);
    CHECK_THROWS_AS(tower.modulus(4), FieldError);
    CHECK_THROWS_AS(tower.least_generator(3), FieldError);  // 5^3 = 125 > 100
    CHECK_THROWS_AS(FieldTower(4, 1), FieldError);
}
