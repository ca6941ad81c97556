#ifndef SIGMAKIT_ZSIG_MODULE_HPP
#define SIGMAKIT_ZSIG_MODULE_HPP

#include <optional>
#include <vector>

#include "sigmakit/qpoly.hpp"
#include "sigmakit/zsig.hpp"

namespace sigmakit {

struct ModuleError : std::runtime_error {
    explicit ModuleError(const std::string& what) : std::runtime_error(what) {}
};

enum class ModuleShape { General, Cyclic, SumOfCyclics };

/// Finitely presented Z[s]-module: g generators, relation rows
/// sum_k row[k] * e_k = 0.
class ZSigmaModule {
  public:
    ZSigmaModule(std::size_t generators, std::vector<std::vector<SigmaPoly>> relations,
                 ModuleShape shape = ModuleShape::General,
                 std::vector<std::vector<std::size_t>> blocks = {});

    static ZSigmaModule free_module(std::size_t generators);
    static ZSigmaModule cyclic(std::vector<SigmaPoly> ideal_generators);
    static ZSigmaModule sum_of_cyclics(std::vector<std::vector<SigmaPoly>> ideals);

    std::size_t generators() const { return generators_; }
    const std::vector<std::vector<SigmaPoly>>& relations() const { return relations_; }
    ModuleShape shape() const { return shape_; }
    // for SumOfCyclics: block b is the list of relation-row indices whose
    // single nonzero entry sits on generator b
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

    // ideal generators of a cyclic presentation (shape Cyclic)
    std::vector<SigmaPoly> cyclic_ideal() const;

  private:
    std::size_t generators_;
    std::vector<std::vector<SigmaPoly>> relations_;
    ModuleShape shape_;
    std::vector<std::vector<std::size_t>> blocks_;
};

/// rank over Z[s] after base change to Q(s): g - rank of the relation matrix
std::size_t rank_zsigma(const ZSigmaModule& m);

/// rank over Z of M (x) Q; nullopt encodes infinity
std::optional<long> rank_z(const ZSigmaModule& m);

/// Z-torsion detection for the supported shapes
bool has_z_torsion(const ZSigmaModule& m);

/// restriction of scalars from Z[s] to Z[s^n]; the result is a presentation
/// over Z[tau] with tau = s^n
ZSigmaModule restrict_scalars(const ZSigmaModule& m, std::size_t n);

struct HullResult {
    // OneRelator(alpha) when set; OrderZero otherwise
    std::optional<SigmaPoly> alpha;
};

HullResult one_relator_hull(const std::vector<SigmaPoly>& ideal_generators);

// --- exposed machinery (also used by tests and the group layer) ---

using QMatrix = std::vector<std::vector<QPoly>>;

struct SmithQSigma {
    QMatrix d;  // diagonal, monic entries, divisibility chain
    QMatrix u;
    QMatrix v;  // u * r * v = d
};

/// Smith normal form over Q[s] with deterministic pivoting (lowest degree,
/// then lexicographically smallest monic coefficient sequence).
SmithQSigma smith_qsigma(const QMatrix& r);

QMatrix qmatrix_from_relations(const ZSigmaModule& m);
QMatrix qmatrix_identity(std::size_t n);
QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b);

struct LatticeSignature {
    std::size_t free_rank;
    std::vector<Int> invariant_factors;  // entries > 1 only, sorted
    bool operator==(const LatticeSignature&) const = default;
};

/// One step of the sigma-truncated integer lattice: generators sigma^i e_k
/// for i <= depth, relations = all sigma-shifts of the presentation rows
/// that fit within the truncation.
LatticeSignature lattice_signature(const ZSigmaModule& m, std::size_t depth);

/// Stabilized signature (two consecutive unchanged extensions); throws
/// ModuleError on cap overrun.
LatticeSignature stabilized_lattice(const ZSigmaModule& m);

}  // namespace sigmakit

#endif
