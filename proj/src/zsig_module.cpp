#include "sigmakit/zsig_module.hpp"

#include <algorithm>

#include "sigmakit/int_lattice.hpp"

namespace sigmakit {

ZSigmaModule::ZSigmaModule(std::size_t generators, std::vector<std::vector<SigmaPoly>> relations,
                           ModuleShape shape, std::vector<std::vector<std::size_t>> blocks)
    : generators_(generators), relations_(std::move(relations)), shape_(shape),
      blocks_(std::move(blocks)) {
    if (generators_ == 0) throw ModuleError("module needs at least one generator");
    for (const auto& row : relations_)
        if (row.size() != generators_) throw ModuleError("relation row has wrong width");
    if (shape_ == ModuleShape::Cyclic && generators_ != 1)
        throw ModuleError("cyclic presentation must have one generator");
}

ZSigmaModule ZSigmaModule::free_module(std::size_t generators) {
    return ZSigmaModule(generators, {}, ModuleShape::General);
}

ZSigmaModule ZSigmaModule::cyclic(std::vector<SigmaPoly> ideal_generators) {
    std::vector<std::vector<SigmaPoly>> rows;
    rows.reserve(ideal_generators.size());
    for (auto& g : ideal_generators) rows.push_back({g});
    return ZSigmaModule(1, std::move(rows), ModuleShape::Cyclic);
}

ZSigmaModule ZSigmaModule::sum_of_cyclics(std::vector<std::vector<SigmaPoly>> ideals) {
    std::size_t g = ideals.size();
    std::vector<std::vector<SigmaPoly>> rows;
    std::vector<std::vector<std::size_t>> blocks(g);
    for (std::size_t b = 0; b < g; ++b)
        for (auto& gen : ideals[b]) {
            std::vector<SigmaPoly> row(g);
            row[b] = gen;
            blocks[b].push_back(rows.size());
            rows.push_back(std::move(row));
        }
    return ZSigmaModule(g, std::move(rows), ModuleShape::SumOfCyclics, std::move(blocks));
}

std::vector<SigmaPoly> ZSigmaModule::cyclic_ideal() const {
    if (shape_ != ModuleShape::Cyclic) throw ModuleError("not a cyclic presentation");
    std::vector<SigmaPoly> gens;
    for (const auto& row : relations_) gens.push_back(row[0]);
    return gens;
}

namespace {

// deterministic pivot preference on Z[s] entries
bool pivot_less(const SigmaPoly& a, const SigmaPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return SigmaPoly::lex_less(a, b);
}

void reduce_row_content(std::vector<SigmaPoly>& row) {
    Int g(0);
    for (const auto& e : row)
        for (const Int& c : e.coeffs()) {
            Int t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            g = t;
        }
    if (g <= 1) return;
    for (auto& e : row) {
        std::vector<Int> c(e.coeffs());
        for (Int& x : c) x /= g;
        e = SigmaPoly(std::move(c));
    }
}

}  // namespace

std::size_t rank_zsigma(const ZSigmaModule& m) {
    auto rows = m.relations();
    std::size_t g = m.generators();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < g && rank < rows.size(); ++col) {
        std::size_t best = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            if (best == rows.size() || pivot_less(rows[i][col], rows[best][col])) best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            SigmaPoly a = rows[rank][col], b = rows[i][col];
            for (std::size_t j = 0; j < g; ++j) rows[i][j] = a * rows[i][j] - b * rows[rank][j];
            reduce_row_content(rows[i]);
        }
        ++rank;
    }
    return g - rank;
}

QMatrix qmatrix_from_relations(const ZSigmaModule& m) {
    QMatrix r;
    for (const auto& row : m.relations()) {
        std::vector<QPoly> qrow;
        qrow.reserve(row.size());
        for (const auto& e : row) qrow.push_back(QPoly(e));
        r.push_back(std::move(qrow));
    }
    return r;
}

QMatrix qmatrix_identity(std::size_t n) {
    QMatrix m(n, std::vector<QPoly>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = QPoly(mpq_class(1));
    return m;
}

QMatrix qmatrix_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    QMatrix c(n, std::vector<QPoly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][l] * b[l][j];
        }
    return c;
}

SmithQSigma smith_qsigma(const QMatrix& r) {
    std::size_t rows = r.size();
    std::size_t cols = rows ? r[0].size() : 0;
    SmithQSigma s{r, qmatrix_identity(rows), qmatrix_identity(cols)};
    QMatrix& d = s.d;

    auto pivot_pref = [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return QPoly::lex_less(a, b);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const QPoly& c) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] = d[dst][j] + c * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] = s.u[dst][j] + c * s.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const QPoly& c) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] = d[i][dst] + c * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][dst] = s.v[i][dst] + c * s.v[i][src];
    };
    auto scale_row = [&](std::size_t i, const mpq_class& c) {
        QPoly f{mpq_class(c)};
        for (std::size_t j = 0; j < cols; ++j) d[i][j] = f * d[i][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[i][j] = f * s.u[i][j];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d[i][j].is_zero()) continue;
                if (pi == rows || pivot_pref(d[i][j], d[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        if (pi != t) {
            std::swap(d[t], d[pi]);
            std::swap(s.u[t], s.u[pi]);
        }
        if (pj != t) {
            for (auto& row : d) std::swap(row[t], row[pj]);
            for (auto& row : s.v) std::swap(row[t], row[pj]);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (d[i][t].is_zero()) continue;
            QPoly q, rem;
            divmod(d[i][t], d[t][t], q, rem);
            add_row(i, t, -q);
            if (!d[i][t].is_zero()) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (d[t][j].is_zero()) continue;
            QPoly q, rem;
            divmod(d[t][j], d[t][t], q, rem);
            add_col(j, t, -q);
            if (!d[t][j].is_zero()) clean = false;
        }
        if (!clean) continue;

        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j) {
                QPoly q, rem;
                divmod(d[i][j], d[t][t], q, rem);
                if (!rem.is_zero()) {
                    add_row(t, i, QPoly(mpq_class(1)));
                    divides_all = false;
                }
            }
        if (!divides_all) continue;

        scale_row(t, 1 / d[t][t].leading());
        ++t;
    }
    return s;
}

std::optional<long> rank_z(const ZSigmaModule& m) {
    if (m.relations().empty()) return std::nullopt;  // free of positive rank
    SmithQSigma s = smith_qsigma(qmatrix_from_relations(m));
    std::size_t g = m.generators();
    std::size_t nonzero = 0;
    long degree_sum = 0;
    for (std::size_t i = 0; i < s.d.size() && i < g; ++i) {
        if (s.d[i][i].is_zero()) continue;
        ++nonzero;
        degree_sum += s.d[i][i].degree();
    }
    if (nonzero < g) return std::nullopt;
    return degree_sum;
}

LatticeSignature lattice_signature(const ZSigmaModule& m, std::size_t depth) {
    std::size_t g = m.generators();
    std::size_t cols = (depth + 1) * g;
    IntMatrix rows;
    for (const auto& rel : m.relations()) {
        int dmax = -1;
        for (const auto& e : rel) dmax = std::max(dmax, e.degree());
        if (dmax < 0) continue;
        for (std::size_t t = 0; t + static_cast<std::size_t>(dmax) <= depth; ++t) {
            std::vector<mpz_class> row(cols, 0);
            for (std::size_t k = 0; k < g; ++k)
                for (std::size_t i = 0; i < rel[k].coeffs().size(); ++i)
                    row[(i + t) * g + k] = rel[k].coeffs()[i];
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return {cols, {}};
    SmithZ s = smith_z(rows);
    LatticeSignature sig{cols, {}};
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < s.d.size() && i < cols; ++i) {
        if (s.d[i][i] == 0) continue;
        ++nonzero;
        if (s.d[i][i] > 1) sig.invariant_factors.push_back(s.d[i][i]);
    }
    sig.free_rank = cols - nonzero;
    std::sort(sig.invariant_factors.begin(), sig.invariant_factors.end());
    return sig;
}

LatticeSignature stabilized_lattice(const ZSigmaModule& m) {
    std::size_t total_degree = 0;
    for (const auto& rel : m.relations()) {
        int dmax = 0;
        for (const auto& e : rel) dmax = std::max(dmax, e.degree());
        total_degree += static_cast<std::size_t>(std::max(dmax, 0));
    }
    std::size_t start = std::max<std::size_t>(total_degree, 1);
    std::size_t cap = 4 * (m.generators() + std::max<std::size_t>(total_degree, 1));
    LatticeSignature prev = lattice_signature(m, start);
    std::size_t stable = 0;
    for (std::size_t depth = start + 1; depth <= start + cap; ++depth) {
        LatticeSignature cur = lattice_signature(m, depth);
        stable = (cur == prev) ? stable + 1 : 0;
        if (stable >= 2) return cur;
        prev = std::move(cur);
    }
    throw ModuleError("lattice stabilization cap exceeded (depth cap " +
                      std::to_string(start + cap) + ")");
}

namespace {

bool torsion_of_ideal(const std::vector<SigmaPoly>& gens) {
    std::vector<SigmaPoly> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return false;  // Z[s] itself
    if (nonzero.size() == 1) {
        // principal case: Z-torsion iff the generator has content > 1
        return content_primitive(nonzero[0]).content > 1;
    }
    return stabilized_lattice(ZSigmaModule::cyclic(nonzero)).invariant_factors.size() > 0;
}

}  // namespace

bool has_z_torsion(const ZSigmaModule& m) {
    switch (m.shape()) {
        case ModuleShape::Cyclic:
            return torsion_of_ideal(m.cyclic_ideal());
        case ModuleShape::SumOfCyclics: {
            for (std::size_t b = 0; b < m.generators(); ++b) {
                std::vector<SigmaPoly> gens;
                for (std::size_t row : m.blocks()[b]) gens.push_back(m.relations()[row][b]);
                if (torsion_of_ideal(gens)) return true;
            }
            return false;
        }
        case ModuleShape::General: {
            if (rank_zsigma(m) != 0)
                throw ModuleError(
                    "UnsupportedShape: torsion test needs a cyclic shape or rank_zsigma = 0");
            return stabilized_lattice(m).invariant_factors.size() > 0;
        }
    }
    throw ModuleError("unreachable");
}

namespace {

// rewrite sigma^(t) * f on generator k into Z[tau]-entries over the split
// generators z_{v,k} (tau = sigma^n); entry index k*n + v
void add_shifted_relation(const std::vector<SigmaPoly>& rel, std::size_t t, std::size_t n,
                          std::size_t g, std::vector<SigmaPoly>& out_row) {
    for (std::size_t k = 0; k < g; ++k) {
        for (std::size_t i = 0; i < rel[k].coeffs().size(); ++i) {
            const Int& c = rel[k].coeffs()[i];
            if (c == 0) continue;
            std::size_t power = i + t;
            std::size_t u = power / n, v = power % n;
            out_row[k * n + v] = out_row[k * n + v] + c * SigmaPoly::sigma_power(u);
        }
    }
}

}  // namespace

ZSigmaModule restrict_scalars(const ZSigmaModule& m, std::size_t n) {
    if (n == 0) throw ModuleError("restriction of scalars needs n >= 1");
    std::size_t g = m.generators();
    std::size_t ng = n * g;
    std::vector<std::vector<SigmaPoly>> rows;
    for (const auto& rel : m.relations())
        for (std::size_t t = 0; t < n; ++t) {
            std::vector<SigmaPoly> row(ng);
            add_shifted_relation(rel, t, n, g, row);
            rows.push_back(std::move(row));
        }

    // eliminate generators carrying a unit constant coefficient
    std::vector<bool> gen_alive(ng, true), row_alive(rows.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < rows.size() && !changed; ++r) {
            if (!row_alive[r]) continue;
            for (std::size_t j = 0; j < ng && !changed; ++j) {
                if (!gen_alive[j]) continue;
                const SigmaPoly& e = rows[r][j];
                if (e.degree() != 0 || abs(e.coeff(0)) != 1) continue;
                Int u = e.coeff(0);
                for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                    if (!row_alive[r2] || r2 == r || rows[r2][j].is_zero()) continue;
                    SigmaPoly c = rows[r2][j];
                    for (std::size_t k = 0; k < ng; ++k)
                        rows[r2][k] = rows[r2][k] - u * (c * rows[r][k]);
                }
                gen_alive[j] = false;
                row_alive[r] = false;
                changed = true;
            }
        }
    }

    std::vector<std::size_t> gen_map(ng, 0);
    std::size_t new_g = 0;
    for (std::size_t j = 0; j < ng; ++j)
        if (gen_alive[j]) gen_map[j] = new_g++;
    std::vector<std::vector<SigmaPoly>> new_rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!row_alive[r]) continue;
        std::vector<SigmaPoly> row(new_g);
        bool nonzero = false;
        for (std::size_t j = 0; j < ng; ++j) {
            if (!gen_alive[j]) continue;
            row[gen_map[j]] = rows[r][j];
            if (!rows[r][j].is_zero()) nonzero = true;
        }
        if (nonzero) new_rows.push_back(std::move(row));
    }
    if (new_g == 0) {
        // everything eliminated: the trivial module; keep one generator with
        // relation 1 so downstream ranks stay well-defined
        return ZSigmaModule::cyclic({SigmaPoly(1)});
    }

    // shape detection: one nonzero entry per relation row -> sum of cyclics
    bool all_single = true;
    for (const auto& row : new_rows) {
        std::size_t nz = 0;
        for (const auto& e : row)
            if (!e.is_zero()) ++nz;
        if (nz > 1) all_single = false;
    }
    if (all_single && !new_rows.empty()) {
        std::vector<std::vector<SigmaPoly>> ideals(new_g);
        for (const auto& row : new_rows)
            for (std::size_t j = 0; j < new_g; ++j)
                if (!row[j].is_zero()) ideals[j].push_back(row[j]);
        if (new_g == 1) return ZSigmaModule::cyclic(std::move(ideals[0]));
        return ZSigmaModule::sum_of_cyclics(std::move(ideals));
    }
    return ZSigmaModule(new_g, std::move(new_rows), ModuleShape::General);
}

HullResult one_relator_hull(const std::vector<SigmaPoly>& ideal_generators) {
    SigmaPoly acc;
    bool any = false;
    for (const auto& g : ideal_generators) {
        if (g.is_zero()) continue;
        acc = any ? gcd_q(acc, g) : content_primitive(g).primitive;
        any = true;
    }
    if (!any) throw ModuleError("AllZero: hull of the zero ideal");
    if (acc.degree() >= 1) return {acc};
    return {std::nullopt};
}

}  // namespace sigmakit
