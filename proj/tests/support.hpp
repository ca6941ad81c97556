#ifndef SIGMAKIT_TESTS_SUPPORT_HPP
#define SIGMAKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sigmakit/ffield.hpp"
#include "sigmakit/int_lattice.hpp"
#include "sigmakit/solvers.hpp"
#include "sigmakit/zsig.hpp"

namespace testsupport {

// deterministic splitmix64 stream; tests must not depend on library RNG state
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

inline sigmakit::SigmaPoly random_poly(Rng& rng, int max_degree, long height,
                                       bool force_degree = false) {
    int deg = force_degree ? max_degree : int(rng.range(0, max_degree));
    std::vector<sigmakit::Int> coeffs(std::size_t(deg) + 1);
    for (auto& c : coeffs) c = rng.range(-height, height);
    while (coeffs.back() == 0) coeffs.back() = rng.range(-height, height);
    return sigmakit::SigmaPoly(std::move(coeffs));
}

inline sigmakit::TowerElem random_elem(Rng& rng, sigmakit::FieldTower& tower, unsigned t) {
    std::vector<std::uint64_t> cs(std::size_t(tower.e()) * t);
    for (auto& c : cs) c = rng.next() % tower.p();
    return sigmakit::TowerElem(&tower, t, std::move(cs));
}

inline sigmakit::TowerElem random_unit(Rng& rng, sigmakit::FieldTower& tower, unsigned t) {
    while (true) {
        sigmakit::TowerElem x = random_elem(rng, tower, t);
        if (!x.is_zero()) return x;
    }
}

inline sigmakit::KMatrix random_invertible(Rng& rng, sigmakit::FieldTower& tower, std::size_t m,
                                           unsigned t) {
    while (true) {
        sigmakit::KMatrix a(m, std::vector<sigmakit::TowerElem>(m, tower.zero(t)));
        for (auto& row : a)
            for (auto& x : row) x = random_elem(rng, tower, t);
        if (sigmakit::kmat_invertible(a)) return a;
    }
}

// --- independent factorization oracle (Kronecker interpolation) ---

namespace detail {

inline std::vector<sigmakit::Int> divisors_signed(const sigmakit::Int& v) {
    std::vector<sigmakit::Int> out;
    sigmakit::Int a = abs(v);
    for (sigmakit::Int d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        if (d * d != a) {
            out.push_back(a / d);
            out.push_back(-(a / d));
        }
    }
    return out;
}

inline bool divide_exact_z(const sigmakit::SigmaPoly& f, const sigmakit::SigmaPoly& g,
                           sigmakit::SigmaPoly& q) {
    // exact division in Z[s], or failure
    if (g.is_zero()) return false;
    std::vector<sigmakit::Int> rem = f.coeffs();
    std::vector<sigmakit::Int> quot(
        f.degree() >= g.degree() ? std::size_t(f.degree() - g.degree()) + 1 : 0,
        sigmakit::Int(0));
    while (int(rem.size()) - 1 >= g.degree()) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (int(rem.size()) - 1 < g.degree()) break;
        if (rem.back() % g.leading() != 0) return false;
        sigmakit::Int c = rem.back() / g.leading();
        std::size_t shift = rem.size() - std::size_t(g.degree()) - 1;
        quot[shift] = c;
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) rem[shift + i] -= c * g.coeffs()[i];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    q = sigmakit::SigmaPoly(std::move(quot));
    return f == q * g;
}

// smallest-degree nonconstant factor of a primitive polynomial, or nullopt
inline std::optional<sigmakit::SigmaPoly> kronecker_split(const sigmakit::SigmaPoly& f) {
    int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        // integer roots come out of the d = 1 divisor enumeration as well,
        // but a zero value needs special casing
        std::vector<std::vector<sigmakit::Int>> choices;
        std::vector<sigmakit::Int> points;
        for (int x = 0; x <= d; ++x) {
            sigmakit::Int v = f.eval(x);
            if (v == 0) {
                sigmakit::SigmaPoly root(std::vector<sigmakit::Int>{-sigmakit::Int(x), 1});
                return root;
            }
            points.push_back(x);
            choices.push_back(divisors_signed(v));
        }
        // sign normalization: g divides iff -g divides, so the divisor of
        // f(0) can be taken positive
        std::erase_if(choices[0], [](const sigmakit::Int& v) { return v < 0; });
        // Lagrange basis for the point set, scaled by a common denominator
        // so each divisor combination only needs integer arithmetic
        sigmakit::Int denom = 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
            sigmakit::Int di = 1;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (j != i) di *= points[i] - points[j];
            denom = denom / gcd(denom, di) * di;
        }
        denom = abs(denom);
        std::vector<std::vector<sigmakit::Int>> basis(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<sigmakit::Int> b = {1};
            sigmakit::Int di = 1;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                std::vector<sigmakit::Int> next(b.size() + 1, sigmakit::Int(0));
                for (std::size_t k = 0; k < b.size(); ++k) {
                    next[k] += b[k] * (-points[j]);
                    next[k + 1] += b[k];
                }
                b = std::move(next);
                di *= points[i] - points[j];
            }
            sigmakit::Int scale = denom / di;
            for (auto& c : b) c *= scale;
            basis[i] = std::move(b);
        }
        std::vector<std::size_t> idx(points.size(), 0);
        std::vector<sigmakit::Int> scaled(points.size());
        while (true) {
            for (auto& c : scaled) c = 0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                const sigmakit::Int& v = choices[i][idx[i]];
                for (std::size_t k = 0; k < basis[i].size(); ++k) scaled[k] += v * basis[i][k];
            }
            bool integral = true;
            for (const auto& c : scaled)
                if (c % denom != 0) {
                    integral = false;
                    break;
                }
            if (integral && scaled.back() != 0) {
                std::vector<sigmakit::Int> ic(scaled.size());
                for (std::size_t k = 0; k < scaled.size(); ++k) ic[k] = scaled[k] / denom;
                sigmakit::SigmaPoly cand(std::move(ic));
                sigmakit::SigmaPoly q;
                if (cand.degree() == d && divide_exact_z(f, cand, q)) return cand;
            }
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// complete factorization by Kronecker interpolation + trial division on the
// content; same canonical presentation as the library for easy comparison
inline std::vector<sigmakit::ZFactor> kronecker_factor(const sigmakit::SigmaPoly& f) {
    std::vector<sigmakit::SigmaPoly> raw;
    sigmakit::ContentPrimitive cp = sigmakit::content_primitive(f);
    sigmakit::Int c = cp.content;
    for (sigmakit::Int d = 2; d * d <= c; ++d)
        while (c % d == 0) {
            raw.push_back(sigmakit::SigmaPoly(d));
            c /= d;
        }
    if (c > 1) raw.push_back(sigmakit::SigmaPoly(c));
    std::vector<sigmakit::SigmaPoly> stack = {cp.primitive};
    while (!stack.empty()) {
        sigmakit::SigmaPoly g = stack.back();
        stack.pop_back();
        if (g.degree() < 1) continue;
        auto split = detail::kronecker_split(g);
        if (!split) {
            // normalize sign
            if (g.leading() < 0) g = -g;
            raw.push_back(g);
            continue;
        }
        sigmakit::SigmaPoly q;
        detail::divide_exact_z(g, *split, q);
        stack.push_back(*split);
        stack.push_back(q);
    }
    std::sort(raw.begin(), raw.end(), sigmakit::SigmaPoly::lex_less);
    std::vector<sigmakit::ZFactor> out;
    for (const auto& g : raw) {
        if (!out.empty() && out.back().factor == g) ++out.back().multiplicity;
        else out.push_back({g, 1});
    }
    return out;
}

// --- independent torsion oracle: truncated integer lattice ---

inline bool truncated_torsion(const sigmakit::SigmaPoly& alpha, std::size_t depth) {
    std::size_t deg = std::size_t(alpha.degree());
    sigmakit::IntMatrix rows;
    for (std::size_t shift = 0; shift + deg < depth; ++shift) {
        std::vector<mpz_class> row(depth, 0);
        for (std::size_t i = 0; i <= deg; ++i) row[shift + i] = alpha.coeff(i);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return false;
    sigmakit::SmithZ snf = sigmakit::smith_z(rows);
    for (std::size_t i = 0; i < std::min(rows.size(), depth); ++i)
        if (snf.d[i][i] > 1) return true;
    return false;
}

// stabilized over two consecutive depths; brute force, independent of the
// content criterion
inline bool torsion_oracle(const sigmakit::SigmaPoly& alpha) {
    std::size_t deg = std::size_t(alpha.degree());
    bool prev = truncated_torsion(alpha, deg + 2);
    for (std::size_t depth = deg + 3; depth < deg + 10; ++depth) {
        bool cur = truncated_torsion(alpha, depth);
        if (cur == prev) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace testsupport

#endif
