#include "doctest.h"
#include "sigmakit/fp_poly.hpp"
#include "support.hpp"

using namespace sigmakit::fp;

namespace {

Poly random_fp_poly(testsupport::Rng& rng, int deg, std::uint64_t p) {
    Poly f(std::size_t(deg) + 1);
    for (auto& c : f) c = rng.next() % p;
    while (f.back() == 0) f.back() = rng.next() % p;
    return f;
}

}  // namespace

TEST_CASE("division invariants") {
    testsupport::Rng rng(5);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull}) {
        for (int i = 0; i < 50; ++i) {
            Poly f = random_fp_poly(rng, int(rng.range(0, 6)), p);
            Poly g = random_fp_poly(rng, int(rng.range(0, 4)), p);
            Poly q, r;
            divmod(f, g, p, q, r);
            CHECK(add(mul(q, g, p), r, p) == f);
            CHECK(degree(r) < degree(g));
        }
    }
}

TEST_CASE("factor reconstructs and flags are consistent") {
    testsupport::Rng rng(7);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int i = 0; i < 40; ++i) {
            Poly f = random_fp_poly(rng, int(rng.range(1, 6)), p);
            auto fs = factor(f, p);
            Poly prod = {f.back()};  // leading unit
            for (const auto& fac : fs) {
                CHECK(is_irreducible(fac.poly, p));
                for (int k = 0; k < fac.multiplicity; ++k) prod = mul(prod, fac.poly, p);
            }
            CHECK(prod == f);
            if (fs.size() == 1 && fs[0].multiplicity == 1)
                CHECK(is_irreducible(f, p) == (degree(f) >= 1));
        }
    }
}

TEST_CASE("deterministic factor order") {
    Poly f = {4, 0, 1};  // x^2 + 4 = (x+1)(x+4) mod 5
    auto fs = factor(f, 5);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == Poly{1, 1});
    CHECK(fs[1].poly == Poly{4, 1});
}

TEST_CASE("char-p squarefree structure") {
    // (x+1)^2 * x over F_2 and a perfect p-th power over F_3
    Poly f = mul(mul(Poly{1, 1}, Poly{1, 1}, 2), Poly{0, 1}, 2);
    auto fs = factor(f, 2);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].multiplicity + fs[1].multiplicity == 3);

    Poly g = {1, 0, 0, 1};  // x^3 + 1 = (x+1)^3 mod 3
    fs = factor(g, 3);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].poly == Poly{1, 1});
    CHECK(fs[0].multiplicity == 3);
}

TEST_CASE("least irreducible moduli are canonical") {
    CHECK(least_irreducible(1, 5) == Poly{0, 1});
    Poly m2 = least_irreducible(2, 5);
    CHECK(is_irreducible(m2, 5));
    // no lexicographically earlier monic irreducible of degree 2 exists
    for (std::uint64_t c0 = 0; c0 <= m2[0]; ++c0) {
        for (std::uint64_t c1 = 0; c1 < (c0 == m2[0] ? m2[1] : 5); ++c1)
            CHECK(!is_irreducible(Poly{c0, c1, 1}, 5));
    }
    for (std::uint64_t p : {2ull, 3ull, 7ull})
        for (int d = 1; d <= 5; ++d) CHECK(is_irreducible(least_irreducible(d, p), p));
}

TEST_CASE("pow_mod_poly matches iterated multiplication") {
    Poly m = least_irreducible(3, 7);
    Poly x = {0, 1};
    Poly acc = {1};
    for (int e = 0; e < 20; ++e) {
        CHECK(pow_mod_poly(x, e, m, 7) == acc);
        acc = mod(mul(acc, x, 7), m, 7);
    }
}
