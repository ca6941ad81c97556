#include "sigmakit/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigmakit/int_lattice.hpp"
#include "sigmakit/zsig_module.hpp"

namespace sigmakit {

namespace {

FieldTower* tower_of(const KMatrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x.tower()) return x.tower();
    throw SolverError("empty matrix");
}

unsigned common_level(const KMatrix& a) {
    unsigned t = 1;
    for (const auto& row : a)
        for (const auto& x : row) t = unsigned(std::lcm<std::uint64_t>(t, x.level()));
    return t;
}

KMatrix lift_matrix(FieldTower& tower, const KMatrix& a, unsigned t) {
    KMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = tower.embed(x, t);
    return out;
}

// column echelon bookkeeping over a tower level; returns true (and updates
// the basis) when v is independent from the rows already stored
bool echelon_insert(std::vector<std::vector<TowerElem>>& basis, std::vector<TowerElem> v) {
    for (const auto& b : basis) {
        std::size_t piv = 0;
        while (piv < b.size() && b[piv].is_zero()) ++piv;
        if (piv == b.size()) continue;
        if (!v[piv].is_zero()) {
            TowerElem c = v[piv] / b[piv];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - c * b[i];
        }
    }
    bool nonzero = false;
    for (const auto& x : v)
        if (!x.is_zero()) {
            nonzero = true;
            break;
        }
    if (nonzero) basis.push_back(std::move(v));
    return nonzero;
}

// kernel basis of an n x n matrix over F_p (columns = images of basis vectors)
std::vector<std::vector<std::uint64_t>> fp_kernel(std::vector<std::vector<std::uint64_t>> M,
                                                  std::uint64_t p) {
    std::size_t n = M.size();
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[row]);
        std::uint64_t inv = fp::inv_mod(M[row][col], p);
        for (std::size_t j = 0; j < n; ++j) M[row][j] = fp::mul_mod(M[row][j], inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || M[i][col] == 0) continue;
            std::uint64_t f = M[i][col];
            for (std::size_t j = 0; j < n; ++j)
                M[i][j] = fp::sub_mod(M[i][j], fp::mul_mod(f, M[row][j], p), p);
        }
        pivot_of_col[col] = long(row);
        ++row;
    }
    std::vector<std::vector<std::uint64_t>> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<std::uint64_t> v(n, 0);
        v[free_col] = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (pivot_of_col[col] < 0) continue;
            v[col] = fp::sub_mod(0, M[std::size_t(pivot_of_col[col])][free_col], p);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

KMatrix kmat_identity(FieldTower& tower, std::size_t m, unsigned level) {
    KMatrix out(m, std::vector<TowerElem>(m, tower.zero(level)));
    for (std::size_t i = 0; i < m; ++i) out[i][i] = tower.one(level);
    return out;
}

KMatrix kmat_mul(const KMatrix& a, const KMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    FieldTower* tw = tower_of(a);
    KMatrix out(n, std::vector<TowerElem>(m, tw->zero(1)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            TowerElem acc = tw->zero(1);
            for (std::size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
            out[i][j] = acc;
        }
    return out;
}

KMatrix kmat_frobenius(const KMatrix& a, unsigned d) {
    KMatrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = frobenius(x, d);
    return out;
}

bool kmat_equal(const KMatrix& a, const KMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

bool kmat_invertible(const KMatrix& a) {
    std::vector<std::vector<TowerElem>> basis;
    for (const auto& row : a)
        if (!echelon_insert(basis, row)) return false;
    return true;
}

LinDiffEq fold_linear(const LinDiffEq& eq, unsigned l) {
    if (l < 1) throw SolverError("fold_linear needs l >= 1");
    KMatrix acc = eq.A;
    for (unsigned j = 1; j < l; ++j) acc = kmat_mul(kmat_frobenius(eq.A, j * eq.d), acc);
    return {std::move(acc), eq.d * l};
}

std::vector<std::vector<KnElem>> unfold_linear_solution(const KMatrix& Z, const LinDiffEq& eq,
                                                        unsigned l) {
    FieldTower* tw = tower_of(eq.A);
    unsigned d = eq.d;
    std::size_t m = eq.A.size();
    LinDiffEq folded = fold_linear(eq, l);
    if (!kmat_equal(kmat_frobenius(Z, d * l), kmat_mul(folded.A, Z)))
        throw SolverError("NotASolution: Z does not solve the folded equation");

    // component (l-1-j)*d + (d-1-i) of the result holds sigma^i(P_j Z), where
    // P_j is the j-fold twisted product of A (P_0 = I)
    std::size_t n = std::size_t(d) * l;
    std::vector<KMatrix> comps(n);
    KMatrix P = kmat_identity(*tw, m, common_level(eq.A));
    for (unsigned j = 0; j < l; ++j) {
        if (j > 0) P = kmat_mul(kmat_frobenius(eq.A, (j - 1) * d), P);
        KMatrix PZ = kmat_mul(P, Z);
        for (unsigned i = 0; i < d; ++i)
            comps[(std::size_t(l) - 1 - j) * d + (d - 1 - i)] = kmat_frobenius(PZ, i);
    }
    std::vector<std::vector<KnElem>> out;
    out.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<KnElem> row;
        row.reserve(m);
        for (std::size_t c = 0; c < m; ++c) {
            std::vector<TowerElem> entry;
            entry.reserve(n);
            for (std::size_t k = 0; k < n; ++k) entry.push_back(comps[k][r][c]);
            row.push_back(KnElem(std::move(entry)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// kernel of the F_p-linear map v -> frobenius(v, d) - A v on the
// m-component coordinate space of tower level t, as columns of TowerElems
std::vector<std::vector<TowerElem>> sigma_kernel_columns(FieldTower& tower, const KMatrix& A0,
                                                         unsigned d, unsigned t) {
    std::size_t m = A0.size();
    unsigned e = tower.e();
    std::uint64_t p = tower.p();
    KMatrix A = lift_matrix(tower, A0, t);
    std::size_t dim = m * std::size_t(e) * t;
    std::vector<std::vector<std::uint64_t>> M(dim, std::vector<std::uint64_t>(dim, 0));
    for (std::size_t comp = 0; comp < m; ++comp) {
        for (unsigned coef = 0; coef < e * t; ++coef) {
            std::vector<std::uint64_t> cs(std::size_t(e) * t, 0);
            cs[coef] = 1;
            TowerElem x(&tower, t, std::move(cs));
            TowerElem fx = frobenius(x, d);
            std::size_t col = comp * e * t + coef;
            for (std::size_t r = 0; r < m; ++r) {
                TowerElem img = A[r][comp] * x;
                if (r == comp) img = fx - img;
                else img = -img;
                const auto& ic = img.coeffs();
                for (unsigned j = 0; j < e * t; ++j) M[r * e * t + j][col] = ic[j];
            }
        }
    }
    auto kernel = fp_kernel(std::move(M), p);
    std::vector<std::vector<TowerElem>> cols;
    cols.reserve(kernel.size());
    for (const auto& v : kernel) {
        std::vector<TowerElem> col;
        col.reserve(m);
        for (std::size_t comp = 0; comp < m; ++comp) {
            std::vector<std::uint64_t> cs(v.begin() + long(comp * e * t),
                                          v.begin() + long((comp + 1) * e * t));
            col.push_back(TowerElem(&tower, t, std::move(cs)));
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

SolveOutcome lang_solve(FieldTower& tower, const LinDiffEq& eq) {
    std::size_t m = eq.A.size();
    unsigned t0 = common_level(eq.A);
    SolveOutcome out;
    // a full invertible solution in L_t forces Y = P_s Y with s the order of
    // sigma^d on L_t and P_s the twisted s-fold product of A, so P_s = I is a
    // necessary condition; checking it at the base level makes the level scan
    // cheap
    std::vector<KMatrix> prods = {eq.A};
    auto twisted_product = [&](std::size_t s) -> const KMatrix& {
        while (prods.size() < s)
            prods.push_back(kmat_mul(kmat_frobenius(prods.back(), eq.d), eq.A));
        return prods[s - 1];
    };
    for (unsigned mult = 1;; ++mult) {
        unsigned t = t0 * mult;
        if (t > tower.caps().level_cap) break;
        out.max_level = t;
        std::size_t s = t / std::gcd(t, eq.d);
        if (!kmat_equal(twisted_product(s), kmat_identity(tower, m, t0))) continue;
        auto cols = sigma_kernel_columns(tower, eq.A, eq.d, t);
        std::vector<std::vector<TowerElem>> basis;
        KMatrix Y(m, std::vector<TowerElem>(m, tower.zero(t)));
        std::size_t found = 0;
        for (auto& col : cols) {
            if (!echelon_insert(basis, col)) continue;
            for (std::size_t r = 0; r < m; ++r) Y[r][found] = col[r];
            if (++found == m) break;
        }
        if (found == m) {
            if (!kmat_equal(kmat_frobenius(Y, eq.d),
                            kmat_mul(lift_matrix(tower, eq.A, t), Y)))
                throw SolverError("lang_solve: witness failed re-verification");
            if (!kmat_invertible(Y)) throw SolverError("lang_solve: witness not invertible");
            out.status = SolveOutcome::Status::Found;
            out.n = 1;
            out.level = t;
            out.matrix_witness = std::move(Y);
            return out;
        }
    }
    out.status = SolveOutcome::Status::ExhaustedBounds;
    out.tried_n = 1;
    out.report = "CapExceeded: no full solution space up to level cap";
    return out;
}

KMatrix block_companion(FieldTower& tower, const LinDiffEq& eq) {
    std::size_t m = eq.A.size();
    unsigned d = eq.d;
    unsigned t = common_level(eq.A);
    std::size_t size = m * d;
    KMatrix B(size, std::vector<TowerElem>(size, tower.zero(t)));
    for (unsigned blk = 0; blk + 1 < d; ++blk)
        for (std::size_t i = 0; i < m; ++i) B[blk * m + i][(blk + 1) * m + i] = tower.one(t);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) B[(std::size_t(d) - 1) * m + i][j] = eq.A[i][j];
    return B;
}

KMatrix block_companion_extract(const LinDiffEq& eq, const KMatrix& Z) {
    std::size_t m = eq.A.size();
    std::size_t size = Z.size();
    // first m rows of Z, column by column, taking the lexicographically
    // first m columns whose projections are independent
    std::vector<std::vector<TowerElem>> basis;
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < size && chosen.size() < m; ++c) {
        std::vector<TowerElem> proj;
        proj.reserve(m);
        for (std::size_t r = 0; r < m; ++r) proj.push_back(Z[r][c]);
        if (echelon_insert(basis, proj)) chosen.push_back(c);
    }
    if (chosen.size() < m)
        throw SolverError("NoIndependentColumns: invertible Z expected");
    KMatrix Y(m, std::vector<TowerElem>(m, Z[0][0]));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) Y[r][c] = Z[r][chosen[c]];
    return Y;
}

MultTorsor unfold_mult_system(const MultTorsor& T, unsigned n) {
    if (n < 1) throw SolverError("unfold needs n >= 1");
    std::size_t m = T.exponents.size();
    std::size_t r = m ? T.exponents[0].size() : 0;
    MultTorsor out;
    out.exponents.reserve(m * n);
    out.constants.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (unsigned t = 0; t < n; ++t) {
            // row sigma^t * beta_i in the unknowns z_{v,j}, column v*r + j,
            // with sigma^(u*n+v) acting as tau^u on z_{v,j}
            std::vector<std::vector<Int>> cols(n * r);
            for (std::size_t j = 0; j < r; ++j) {
                SigmaPoly beta = T.exponents[i][j].shifted(t);
                const auto& cs = beta.coeffs();
                for (std::size_t k = 0; k < cs.size(); ++k) {
                    if (cs[k] == 0) continue;
                    std::size_t u = k / n, v = k % n;
                    auto& col = cols[v * r + j];
                    if (col.size() <= u) col.resize(u + 1, Int(0));
                    col[u] += cs[k];
                }
            }
            std::vector<SigmaPoly> row;
            row.reserve(n * r);
            for (auto& c : cols) row.push_back(SigmaPoly(std::move(c)));
            out.exponents.push_back(std::move(row));
            out.constants.push_back(frobenius(T.constants[i], t));
        }
    }
    return out;
}

namespace {

KnElem apply_beta(const KnElem& x, const SigmaPoly& beta) {
    KnElem acc = x.pow(0);  // all-ones
    KnElem shifted = x;
    const auto& cs = beta.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k > 0) shifted = kn_sigma(shifted);
        if (cs[k] != 0) acc = acc * shifted.pow(cs[k]);
    }
    return acc;
}

}  // namespace

SolveOutcome mult_solve(FieldTower& tower, const MultTorsor& T, unsigned max_n,
                        unsigned level_cap) {
    std::size_t m = T.exponents.size();
    if (m == 0) throw SolverError("multiplicative system needs at least one row");
    std::size_t r = T.exponents[0].size();
    for (const auto& c : T.constants)
        if (c.is_zero()) throw SolverError("constants must be invertible");

    unsigned base_level = 1;
    for (const auto& c : T.constants)
        base_level = unsigned(std::lcm<std::uint64_t>(base_level, c.level()));
    mpz_class q = tower.field_size(1);  // q = p^e

    SolveOutcome out;
    std::ostringstream diag;
    for (unsigned n = 1; n <= max_n; ++n) {
        out.tried_n = n;
        MultTorsor U = unfold_mult_system(T, n);
        std::size_t R = U.exponents.size(), C = n * r;
        mpz_class qn;
        mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
        IntMatrix E(R, std::vector<mpz_class>(C));
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t u = 0; u < C; ++u) E[i][u] = U.exponents[i][u].eval(qn);
        SmithZ snf = smith_z(E);

        unsigned t = base_level;
        bool row_obstruction = false;
        while (t <= level_cap && !row_obstruction) {
            out.max_level = std::max(out.max_level, t);
            mpz_class N = tower.unit_order(t);
            std::vector<TowerElem> b;
            b.reserve(R);
            for (const auto& c : U.constants) b.push_back(tower.embed(c, t));
            // transformed constants b'_i = prod_j b_j^{u_ij}
            std::vector<TowerElem> bp;
            bp.reserve(R);
            for (std::size_t i = 0; i < R; ++i) {
                TowerElem acc = tower.one(t);
                for (std::size_t j = 0; j < R; ++j) {
                    mpz_class e;
                    mpz_mod(e.get_mpz_t(), snf.u[i][j].get_mpz_t(), N.get_mpz_t());
                    if (e != 0) acc = acc * b[j].pow(e);
                }
                bp.push_back(acc);
            }
            long failing = -1;
            mpz_class failing_d;
            for (std::size_t i = 0; i < R; ++i) {
                mpz_class di = (i < C) ? snf.d[i][i] : mpz_class(0);
                if (di == 0) {
                    if (!(bp[i] == tower.one(t))) {
                        // an exact consistency row; no extension can fix it
                        row_obstruction = true;
                        diag << "n=" << n << ": inconsistent degenerate row; ";
                        break;
                    }
                } else {
                    mpz_class g0 = gcd(di, N);
                    if (!(bp[i].pow(N / g0) == tower.one(t))) {
                        failing = long(i);
                        failing_d = di;
                        break;
                    }
                }
            }
            if (row_obstruction) break;
            if (failing >= 0) {
                // jump to the splitting extension of z^d = b'
                unsigned room = level_cap / t;
                if (room < 2) {
                    diag << "n=" << n << ": level cap leaves no splitting extension; ";
                    break;
                }
                if (!failing_d.fits_ulong_p() || failing_d > 512) {
                    diag << "n=" << n << ": binomial degree too large; ";
                    break;
                }
                TowerPoly binom(std::size_t(failing_d.get_ui()) + 1, tower.zero(t));
                binom[0] = -bp[std::size_t(failing)];
                binom[binom.size() - 1] = tower.one(t);
                unsigned ext = tp_least_splitting_degree(binom, tower, room);
                if (ext <= 1) {
                    diag << "n=" << n << ": no splitting extension within the level cap; ";
                    break;
                }
                t *= ext;
                continue;
            }
            // solvable at this level; build the witness through dlog + SNF
            TowerElem g = tower.least_generator(t);
            std::vector<mpz_class> dl(R);
            for (std::size_t j = 0; j < R; ++j) dl[j] = tower.dlog(b[j], g);
            std::vector<mpz_class> c(R);
            for (std::size_t i = 0; i < R; ++i) {
                mpz_class acc = 0;
                for (std::size_t j = 0; j < R; ++j) acc += snf.u[i][j] * dl[j];
                mpz_mod(c[i].get_mpz_t(), acc.get_mpz_t(), N.get_mpz_t());
            }
            std::vector<mpz_class> y(C, mpz_class(0));
            for (std::size_t i = 0; i < std::min(R, C); ++i) {
                mpz_class di = snf.d[i][i];
                if (di == 0) continue;
                mpz_class g0 = gcd(di, N);
                mpz_class n2 = N / g0, inv;
                if (mpz_invert(inv.get_mpz_t(), mpz_class(di / g0).get_mpz_t(),
                               n2.get_mpz_t()) == 0)
                    throw SolverError("mult_solve: internal inversion failure");
                mpz_class yi = (c[i] / g0) * inv;
                mpz_mod(yi.get_mpz_t(), yi.get_mpz_t(), n2.get_mpz_t());
                y[i] = yi;
            }
            std::vector<mpz_class> x(C, mpz_class(0));
            for (std::size_t u = 0; u < C; ++u) {
                mpz_class acc = 0;
                for (std::size_t i = 0; i < C; ++i) acc += snf.v[u][i] * y[i];
                mpz_mod(x[u].get_mpz_t(), acc.get_mpz_t(), N.get_mpz_t());
            }
            std::vector<TowerElem> z;
            z.reserve(C);
            for (std::size_t u = 0; u < C; ++u) z.push_back(g.pow(x[u]));
            // component dictionary: unknown j becomes the KnElem
            // (z_{n-1,j}, ..., z_{0,j})
            std::vector<KnElem> witness;
            witness.reserve(r);
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<TowerElem> comps;
                comps.reserve(n);
                for (std::size_t v = n; v-- > 0;) comps.push_back(z[v * r + j]);
                witness.push_back(KnElem(std::move(comps)));
            }
            for (std::size_t i = 0; i < m; ++i) {
                KnElem lhs = KnElem::diagonal(tower.one(t), n);
                for (std::size_t j = 0; j < r; ++j)
                    lhs = lhs * apply_beta(witness[j], T.exponents[i][j]);
                KnElem rhs = KnElem::diagonal(tower.embed(T.constants[i], t), n);
                if (!(lhs == rhs))
                    throw SolverError("mult_solve: witness failed re-verification");
            }
            out.status = SolveOutcome::Status::Found;
            out.n = n;
            out.level = t;
            out.witness = std::move(witness);
            return out;
        }
        if (!row_obstruction && t > level_cap) diag << "n=" << n << ": level cap reached; ";
    }
    out.status = SolveOutcome::Status::ExhaustedBounds;
    out.report = diag.str().empty() ? "no n admitted a solution within bounds" : diag.str();
    return out;
}

SolveOutcome solve_additive(FieldTower& tower, const AdditiveEq& eq) {
    std::size_t m = eq.lambdas.size();
    if (m == 0) throw SolverError("additive equation needs m >= 1");
    if (eq.lambdas[0].is_zero()) throw SolverError("lambda_0 must be nonzero");
    unsigned t = unsigned(std::lcm<std::uint64_t>(common_level({eq.lambdas}), eq.rhs.level()));
    // companion system for the vector (x, sigma(x), ..., sigma^{m-1}(x), 1)
    KMatrix Cm(m + 1, std::vector<TowerElem>(m + 1, tower.zero(t)));
    for (std::size_t i = 0; i + 1 < m; ++i) Cm[i][i + 1] = tower.one(t);
    for (std::size_t i = 0; i < m; ++i) Cm[m - 1][i] = -tower.embed(eq.lambdas[i], t);
    Cm[m - 1][m] = tower.embed(eq.rhs, t);
    Cm[m][m] = tower.one(t);
    // only one affine solution is needed: scan levels for a kernel vector of
    // sigma - Cm whose last coordinate is nonzero (that coordinate is
    // sigma-fixed by the shape of the last row), instead of demanding the
    // full invertible solution space, whose level can be much larger
    SolveOutcome out;
    for (unsigned mult = 1;; ++mult) {
        unsigned tl = t * mult;
        if (tl > tower.caps().level_cap) break;
        out.max_level = tl;
        auto cols = sigma_kernel_columns(tower, Cm, 1, tl);
        for (const auto& col : cols) {
            if (col[m].is_zero()) continue;
            TowerElem scale = col[m].inverse();
            TowerElem x = col[0] * scale;
            // re-verify L(x) = a
            TowerElem acc = frobenius(x, unsigned(m));
            for (std::size_t i = 0; i < m; ++i)
                acc = acc + tower.embed(eq.lambdas[i], tl) * frobenius(x, unsigned(i));
            if (!(acc == tower.embed(eq.rhs, tl)))
                throw SolverError("solve_additive: witness failed re-verification");
            out.status = SolveOutcome::Status::Found;
            out.n = 1;
            out.level = tl;
            out.witness = {KnElem({x})};
            return out;
        }
    }
    out.status = SolveOutcome::Status::ExhaustedBounds;
    out.tried_n = 1;
    out.report = "CapExceeded: no affine solution up to level cap";
    return out;
}

SolveOutcome torsor_search(FieldTower& tower, const MultTorsor& T,
                           std::optional<unsigned> max_n) {
    unsigned bound = 8;
    if (max_n) {
        bound = *max_n;
    } else {
        // finite-case bound: lcm(1..|M|) when the presented group is finite
        try {
            ZSigmaModule mod(T.exponents.empty() ? 0 : T.exponents[0].size(), T.exponents);
            if (rank_zsigma(mod) == 0) {
                LatticeSignature sig = stabilized_lattice(mod);
                if (sig.free_rank == 0) {
                    mpz_class size = 1;
                    for (const auto& f : sig.invariant_factors) size *= f;
                    if (size.fits_ulong_p() && size.get_ui() <= 24) {
                        mpz_class l = 1;
                        for (unsigned long k = 2; k <= size.get_ui(); ++k)
                            l = lcm(l, mpz_class(k));
                        if (l.fits_ulong_p())
                            bound = std::max<unsigned>(8, unsigned(l.get_ui()));
                    }
                }
            }
        } catch (const ModuleError&) {
            // fall back to the flat default
        }
    }
    return mult_solve(tower, T, bound, tower.caps().level_cap);
}

TowerElem h1_canonical(FieldTower& tower, const SigmaPoly& alpha, const TowerElem& a) {
    if (a.is_zero()) throw SolverError("h1_canonical needs a nonzero constant");
    unsigned t = a.level();
    mpz_class N = tower.unit_order(t);
    mpz_class v = alpha.eval(tower.field_size(1));
    if (v == 0) return a;
    // drop the p-part: p-powering is bijective on the units
    mpz_class p(static_cast<unsigned long>(tower.p()));
    v = abs(v);
    while (v % p == 0) v /= p;
    mpz_class g0 = gcd(v, N);
    TowerElem g = tower.least_generator(t);
    mpz_class d = tower.dlog(a, g);
    mpz_mod(d.get_mpz_t(), d.get_mpz_t(), g0.get_mpz_t());
    return g.pow(d);
}

}  // namespace sigmakit
