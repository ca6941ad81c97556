#include "sigmakit/fp_poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sigmakit::fp {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow_mod(a % p, p - 2, p);
}

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
        r[i] = add_mod(a, b, p);
    }
    normalize(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
        r[i] = sub_mod(a, b, p);
    }
    normalize(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(f[i], g[j], p), p);
    }
    normalize(r);
    return r;
}

Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p) {
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], c % p, p);
    normalize(r);
    return r;
}

Poly monic(const Poly& f, std::uint64_t p) {
    if (f.empty()) return f;
    return scale(f, inv_mod(f.back(), p), p);
}

void divmod(const Poly& f, const Poly& g, std::uint64_t p, Poly& q, Poly& r) {
    if (g.empty()) throw std::domain_error("division by zero polynomial");
    r = f;
    normalize(r);
    q.assign(r.size() >= g.size() && !r.empty() ? r.size() - g.size() + 1 : 0, 0);
    std::uint64_t inv_lc = inv_mod(g.back(), p);
    while (!r.empty() && r.size() >= g.size()) {
        std::size_t shift = r.size() - g.size();
        std::uint64_t c = mul_mod(r.back(), inv_lc, p);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            r[i + shift] = sub_mod(r[i + shift], mul_mod(c, g[i], p), p);
        normalize(r);
    }
    normalize(q);
}

Poly mod(const Poly& f, const Poly& g, std::uint64_t p) {
    Poly q, r;
    divmod(f, g, p, q, r);
    return r;
}

Poly gcd(Poly f, Poly g, std::uint64_t p) {
    while (!g.empty()) {
        Poly r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f, p);
}

Poly derivative(const Poly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul_mod(f[i], i % p, p);
    normalize(r);
    return r;
}

Poly pow_mod_poly(const Poly& base, const mpz_class& e, const Poly& modulus, std::uint64_t p) {
    Poly r{1 % p};
    normalize(r);
    Poly b = mod(base, modulus, p);
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = mod(mul(r, b, p), modulus, p);
        b = mod(mul(b, b, p), modulus, p);
        n >>= 1;
    }
    return r;
}

namespace {

Poly x_poly() { return Poly{0, 1}; }

// x^(p^k) mod f, by repeated p-th powering
Poly frobenius_power(const Poly& f, std::uint64_t p, int k) {
    Poly r = mod(x_poly(), f, p);
    for (int i = 0; i < k; ++i) r = pow_mod_poly(r, mpz_class(static_cast<unsigned long>(p)), f, p);
    return r;
}

// squarefree decomposition over F_p (Yun adapted to char p): returns list of
// (squarefree part, exponent)
std::vector<std::pair<Poly, int>> squarefree_decompose(Poly f, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    f = monic(f, p);
    int pth_multiplier = 1;
    while (degree(f) > 0) {
        Poly d = derivative(f, p);
        if (d.empty()) {
            // f is a polynomial in x^p: take p-th root and recurse
            Poly root((f.size() - 1) / p + 1, 0);
            for (std::size_t i = 0; i < root.size(); ++i) root[i] = f[i * p];
            // coefficients are p-th powers of the root's coefficients; in F_p
            // the p-th power map is the identity on elements? No: it is the
            // Frobenius, which is the identity on F_p. So root is exact.
            f = std::move(root);
            normalize(f);
            pth_multiplier *= static_cast<int>(p);
            continue;
        }
        Poly g = gcd(f, d, p);
        Poly w, r;
        divmod(f, g, p, w, r);  // w: product of squarefree factors
        int mult = 1;
        while (degree(w) > 0) {
            Poly y = gcd(w, g, p);
            Poly part, rr;
            divmod(w, y, p, part, rr);
            if (degree(part) > 0) out.push_back({monic(part, p), mult * pth_multiplier});
            Poly g2, r2;
            divmod(g, y, p, g2, r2);
            g = std::move(g2);
            w = std::move(y);
            ++mult;
        }
        f = std::move(g);
    }
    return out;
}

// distinct-degree decomposition of a squarefree monic f: list of
// (product-of-irreducibles-of-degree-d, d)
std::vector<std::pair<Poly, int>> distinct_degree(Poly f, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    Poly h = mod(x_poly(), f, p);
    int d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * d > degree(f)) {
            out.push_back({f, degree(f)});
            break;
        }
        h = pow_mod_poly(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        Poly g = gcd(sub(h, x_poly(), p), f, p);
        if (degree(g) > 0) {
            out.push_back({g, d});
            Poly q, r;
            divmod(f, g, p, q, r);
            f = monic(q, p);
            h = mod(h, f, p);
        }
    }
    return out;
}

// enumerate polynomials of degree < n over F_p in a fixed order, skipping
// constants first (index 0 -> x, then x+1, ...)
Poly nth_candidate(std::uint64_t idx, int n, std::uint64_t p) {
    // interpret idx+p in base p, coefficients low-degree-first (skips the
    // first p constant polynomials)
    std::uint64_t v = idx + p;
    Poly c;
    while (v) {
        c.push_back(v % p);
        v /= p;
    }
    (void)n;
    normalize(c);
    return c;
}

// split a product of irreducibles of equal degree d, derandomized
void equal_degree_split(const Poly& f, int d, std::uint64_t p, std::vector<Poly>& out) {
    if (degree(f) == d) {
        out.push_back(f);
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    for (std::uint64_t idx = 0;; ++idx) {
        Poly a = nth_candidate(idx, degree(f), p);
        Poly g;
        if (p == 2) {
            // trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod f
            Poly t = mod(a, f, p);
            Poly acc = t;
            for (int i = 1; i < d; ++i) {
                t = mod(mul(t, t, p), f, p);
                acc = add(acc, t, p);
            }
            g = gcd(acc, f, p);
        } else {
            mpz_class e = (pd - 1) / 2;
            Poly u = pow_mod_poly(a, e, f, p);
            g = gcd(sub(u, Poly{1}, p), f, p);
        }
        if (degree(g) > 0 && degree(g) < degree(f)) {
            Poly q, r;
            divmod(f, g, p, q, r);
            equal_degree_split(monic(g, p), d, p, out);
            equal_degree_split(monic(q, p), d, p, out);
            return;
        }
    }
}

}  // namespace

std::vector<Factor> factor(const Poly& f, std::uint64_t p) {
    if (f.empty()) throw std::domain_error("factor: zero polynomial");
    std::vector<Factor> out;
    if (degree(f) == 0) return out;
    for (auto& [sf, mult] : squarefree_decompose(f, p)) {
        for (auto& [prod, d] : distinct_degree(sf, p)) {
            std::vector<Poly> irr;
            equal_degree_split(prod, d, p, irr);
            std::sort(irr.begin(), irr.end());
            for (auto& g : irr) out.push_back({g, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        return a.poly < b.poly;
    });
    return out;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // f is irreducible iff it has no irreducible factor of degree <= n/2;
    // gcd(x^(p^k) - x, f) collects the factors of degree dividing k, so one
    // shared Frobenius chain with early exit suffices
    Poly h = mod(x_poly(), f, p);
    for (int k = 1; 2 * k <= n; ++k) {
        h = pow_mod_poly(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        Poly g = gcd(sub(h, x_poly(), p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

Poly least_irreducible(int d, std::uint64_t p) {
    // monic degree d; enumerate the d free coefficients low-degree-first in
    // lexicographic order
    std::vector<std::uint64_t> c(d, 0);
    if (d >= 2) c[0] = 1;  // constant term 0 means a factor of x
    while (true) {
        Poly f(c.begin(), c.end());
        f.resize(d + 1, 0);
        f[d] = 1;
        if (is_irreducible(f, p)) return f;
        int i = d - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible found");
        ++c[i];
    }
}

}  // namespace sigmakit::fp
