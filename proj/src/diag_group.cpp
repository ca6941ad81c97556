#include "sigmakit/diag_group.hpp"

namespace sigmakit {

namespace {

// the single relator of a one-relator presentation, or nullopt
std::optional<SigmaPoly> one_relator_of(const ZSigmaModule& m) {
    if (m.shape() != ModuleShape::Cyclic) return std::nullopt;
    std::vector<SigmaPoly> gens;
    for (const auto& g : m.cyclic_ideal())
        if (!g.is_zero()) gens.push_back(g);
    if (gens.size() != 1) return std::nullopt;
    return gens[0];
}

}  // namespace

GroupReport analyze(const DiagGroup& g) {
    GroupReport r;
    r.sigma_dim = rank_zsigma(g.module);
    r.order = rank_z(g.module);
    try {
        r.connected = has_z_torsion(g.module) ? TriState::False : TriState::True;
    } catch (const ModuleError&) {
        r.connected = TriState::Unsupported;
    }
    auto alpha = one_relator_of(g.module);
    if (alpha && alpha->degree() >= 1) {
        r.almost_simple = is_irreducible(*alpha) ? TriState::True : TriState::False;
    } else {
        r.almost_simple = TriState::Unsupported;
    }
    return r;
}

bool is_almost_simple(const DiagGroup& g) {
    auto alpha = one_relator_of(g.module);
    if (!alpha || alpha->degree() < 1)
        throw GroupError("UnsupportedShape: almost-simplicity needs a one-relator group with a "
                         "positive-degree relator");
    return is_irreducible(*alpha);
}

DiagGroup gn(const DiagGroup& g, std::size_t n) {
    return DiagGroup{restrict_scalars(g.module, n),
                     g.label.empty() ? "" : g.label + "_" + std::to_string(n)};
}

FactorSeries jordan_holder(const DiagGroup& g) {
    auto alpha = one_relator_of(g.module);
    if (!alpha) throw GroupError("UnsupportedShape: Jordan-Hoelder needs a one-relator group");
    if (alpha->degree() < 1) throw GroupError("NotPositiveOrder: relator has degree zero");
    FactorSeries series;
    for (const auto& [factor, mult] : factor_z(*alpha))
        for (int i = 0; i < mult; ++i) series.factors.push_back({factor});
    return series;
}

}  // namespace sigmakit
