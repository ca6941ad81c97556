#ifndef SIGMAKIT_SOLVERS_HPP
#define SIGMAKIT_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigmakit/ffield.hpp"
#include "sigmakit/zsig.hpp"

namespace sigmakit {

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

using KMatrix = std::vector<std::vector<TowerElem>>;

KMatrix kmat_identity(FieldTower& tower, std::size_t m, unsigned level);
KMatrix kmat_mul(const KMatrix& a, const KMatrix& b);
KMatrix kmat_frobenius(const KMatrix& a, unsigned d);
bool kmat_equal(const KMatrix& a, const KMatrix& b);
bool kmat_invertible(const KMatrix& a);

/// sigma^d(Y) = A * Y with A invertible over some tower level
struct LinDiffEq {
    KMatrix A;
    unsigned d = 1;
};

/// rows beta_i applied to r unknowns; row i states
/// prod_j x_j^(beta_ij) = constants[i]
struct MultTorsor {
    std::vector<std::vector<SigmaPoly>> exponents;  // m x r
    std::vector<TowerElem> constants;               // length m, invertible
};

/// sigma^m(x) + lambda_{m-1} sigma^{m-1}(x) + ... + lambda_0 x = a,
/// lambda_0 != 0
struct AdditiveEq {
    std::vector<TowerElem> lambdas;
    TowerElem rhs;
};

struct SolveOutcome {
    enum class Status { Found, ExhaustedBounds };
    Status status = Status::ExhaustedBounds;
    unsigned n = 0;
    unsigned level = 0;
    std::vector<KnElem> witness;  // multiplicative/additive: one entry per unknown
    KMatrix matrix_witness;       // linear: the solution Y
    unsigned tried_n = 0;
    unsigned max_level = 0;
    std::string report;

    bool found() const { return status == Status::Found; }
};

/// coefficient matrix of the l-fold composition:
/// sigma^(dl)(Y) = sigma^((l-1)d)(A) ... sigma^d(A) A Y
LinDiffEq fold_linear(const LinDiffEq& eq, unsigned l);

/// lift a solution Z of the folded equation to a k^[dl] solution of the
/// original one; entry (i,j) of the result is the KnElem of length d*l whose
/// components realize the displayed tuple
std::vector<std::vector<KnElem>> unfold_linear_solution(const KMatrix& Z, const LinDiffEq& eq,
                                                        unsigned l);

/// solve sigma^d(Y) = A Y over a finite tower level (n = 1 by Lang-Steinberg)
SolveOutcome lang_solve(FieldTower& tower, const LinDiffEq& eq);

/// companion matrix of size m*d reducing the power-d equation to step 1
KMatrix block_companion(FieldTower& tower, const LinDiffEq& eq);

/// recover an m x m solution of the power-d equation from an invertible
/// solution Z of the step-1 system for block_companion(eq)
KMatrix block_companion_extract(const LinDiffEq& eq, const KMatrix& Z);

/// rewrite a torsor over (k, sigma) as one over (k, sigma^n) in n*r unknowns
/// z_{v,j} (column index v*r + j); polynomial variable of the output reads
/// as tau = sigma^n
MultTorsor unfold_mult_system(const MultTorsor& T, unsigned n);

SolveOutcome mult_solve(FieldTower& tower, const MultTorsor& T, unsigned max_n,
                        unsigned level_cap);

SolveOutcome solve_additive(FieldTower& tower, const AdditiveEq& eq);

/// wrapper over mult_solve with the finite-case default bound for max_n
SolveOutcome torsor_search(FieldTower& tower, const MultTorsor& T,
                           std::optional<unsigned> max_n = std::nullopt);

/// canonical representative of a modulo {c^(alpha(q)) : c unit at level t}
TowerElem h1_canonical(FieldTower& tower, const SigmaPoly& alpha, const TowerElem& a);

}  // namespace sigmakit

#endif
