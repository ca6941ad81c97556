#include "doctest.h"
#include "sigmakit/diag_group.hpp"
#include "support.hpp"

using namespace sigmakit;

namespace {
SigmaPoly P(const char* text) { return SigmaPoly::parse(text); }
}  // namespace

TEST_CASE("analyze of one-relator groups") {
    GroupReport r = analyze(DiagGroup::one_relator(P("s-2")));
    CHECK(r.sigma_dim == 0);
    CHECK(r.order == 1);
    CHECK(r.connected == TriState::True);
    CHECK(r.almost_simple == TriState::True);

    r = analyze(DiagGroup::one_relator(P("2s-2")));
    CHECK(r.order == 1);
    CHECK(r.connected == TriState::False);
    CHECK(r.almost_simple == TriState::False);

    r = analyze(DiagGroup::one_relator(P("s^2-1")));
    CHECK(r.order == 2);
    CHECK(r.connected == TriState::True);
    CHECK(r.almost_simple == TriState::False);
}

TEST_CASE("order equals relator degree for primitive relators") {
    testsupport::Rng rng(41);
    int checked = 0;
    while (checked < 25) {
        SigmaPoly alpha = testsupport::random_poly(rng, 5, 9);
        if (alpha.degree() < 1 || content_primitive(alpha).content != 1) continue;
        GroupReport r = analyze(DiagGroup::one_relator(alpha));
        CHECK(r.order == alpha.degree());
        ++checked;
    }
}

TEST_CASE("G_n keeps the order and scales the sigma-dimension") {
    DiagGroup g = DiagGroup::one_relator(P("s^3 - s + 2"));
    GroupReport base = analyze(g);
    for (std::size_t n = 1; n <= 4; ++n) {
        GroupReport rn = analyze(gn(g, n));
        CHECK(rn.order == base.order);
        CHECK(rn.sigma_dim == n * base.sigma_dim);
    }
}

TEST_CASE("jordan_holder factors are canonical and additive") {
    FactorSeries s = jordan_holder(DiagGroup::one_relator(P("2s^2-2")));
    REQUIRE(s.factors.size() == 3);
    CHECK(s.factors[0].relator == P("2"));
    CHECK(s.factors[0].is_order_zero_piece());
    CHECK(s.factors[1].relator == P("s-1"));
    CHECK(s.factors[2].relator == P("s+1"));

    // additivity of degrees over almost-simple pieces
    testsupport::Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        SigmaPoly alpha = testsupport::random_poly(rng, 5, 9);
        if (alpha.degree() < 1) continue;
        DiagGroup g = DiagGroup::one_relator(alpha);
        long total = 0;
        SigmaPoly prod(1);
        for (const auto& f : jordan_holder(g).factors) {
            if (!f.is_order_zero_piece()) total += f.relator.degree();
            prod = prod * f.relator;
        }
        CHECK(total == *analyze(g).order);
        CHECK((prod == alpha || prod == -alpha));
    }
}

TEST_CASE("jordan_holder rejects unsupported input") {
    CHECK_THROWS_AS(jordan_holder(DiagGroup::one_relator(P("1"))), GroupError);
    CHECK_THROWS_AS(jordan_holder(DiagGroup{ZSigmaModule::free_module(1), ""}), GroupError);
}

TEST_CASE("almost-simplicity tracks irreducibility of the relator") {
    CHECK(is_almost_simple(DiagGroup::one_relator(P("s^2+1"))));
    CHECK(!is_almost_simple(DiagGroup::one_relator(P("s^2-1"))));
    CHECK(!is_almost_simple(DiagGroup::one_relator(P("3s-3"))));
}
