#include "sigmakit/int_lattice.hpp"

#include <stdexcept>

namespace sigmakit {

IntMatrix identity_z(std::size_t n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix mul_z(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMatrix c(n, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

SmithZ smith_z(const IntMatrix& a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SmithZ s{a, identity_z(rows), identity_z(cols)};
    IntMatrix& d = s.d;

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : s.v) std::swap(row[i], row[j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += c * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] += c * s.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& c) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += c * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.v[i][dst] += c * s.v[i][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : s.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // deterministic pivot: smallest |entry| != 0, row-major tie-break
        std::size_t pi = t, pj = t;
        mpz_class best(0);
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                mpz_class v = abs(d[i][j]);
                if (best == 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);
        if (d[t][t] < 0) negate_row(t);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (d[i][t] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
            add_row(i, t, -q);
            if (d[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (d[t][j] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
            add_col(j, t, -q);
            if (d[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; pick a new pivot

        // pivot must divide every remaining entry, else absorb a violator
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[t][t].get_mpz_t())) {
                    add_row(t, i, 1);
                    divides_all = false;
                }
        if (divides_all) ++t;
    }
    return s;
}

}  // namespace sigmakit
