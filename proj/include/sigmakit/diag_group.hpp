#ifndef SIGMAKIT_DIAG_GROUP_HPP
#define SIGMAKIT_DIAG_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigmakit/zsig_module.hpp"

namespace sigmakit {

struct GroupError : std::runtime_error {
    explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

/// A diagonalizable difference-algebraic group, presented contravariantly by
/// its character module.
struct DiagGroup {
    ZSigmaModule module;
    std::string label;

    static DiagGroup one_relator(const SigmaPoly& alpha, std::string label = "") {
        return DiagGroup{ZSigmaModule::cyclic({alpha}), std::move(label)};
    }
};

enum class TriState { False, True, Unsupported };

struct GroupReport {
    std::size_t sigma_dim = 0;
    std::optional<long> order;  // nullopt = infinite
    TriState connected = TriState::Unsupported;
    TriState almost_simple = TriState::Unsupported;
};

GroupReport analyze(const DiagGroup& g);

/// almost-simplicity for one-relator groups with a positive-degree relator
bool is_almost_simple(const DiagGroup& g);

/// the group G_n over the difference field (k, sigma^n)
DiagGroup gn(const DiagGroup& g, std::size_t n);

struct FactorEntry {
    // OrderZeroPiece: prime stored as a constant polynomial, degree 0.
    // AlmostSimple: irreducible relator of positive degree.
    SigmaPoly relator;
    bool is_order_zero_piece() const { return relator.degree() == 0; }
};

struct FactorSeries {
    std::vector<FactorEntry> factors;
};

/// Jordan-Hoelder factor multiset of a one-relator group of finite positive
/// order; canonical ordering, multiplicities expanded.
FactorSeries jordan_holder(const DiagGroup& g);

}  // namespace sigmakit

#endif
