#include "sigmakit/zsig.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sigmakit/fp_poly.hpp"

namespace sigmakit {

std::string SigmaPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "s";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Int(text.substr(start, pos - start));
    }

    // term := uint ['*'] [s-part] | s-part
    SigmaPoly parse_term() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("expected term", pos);
        Int c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = parse_uint();
            have_coeff = true;
            accept('*');
        }
        if (peek('s')) {
            ++pos;
            std::size_t power = 1;
            if (accept('^')) {
                Int e = parse_uint();
                if (!e.fits_ulong_p()) throw ParseError("exponent too large", pos);
                power = e.get_ui();
            }
            return c * SigmaPoly::sigma_power(power);
        }
        if (!have_coeff) throw ParseError("expected coefficient or 's'", pos);
        return SigmaPoly(c);
    }

    SigmaPoly parse_poly() {
        SigmaPoly acc;
        bool negate = false;
        skip_ws();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        while (true) {
            SigmaPoly t = parse_term();
            acc = negate ? acc - t : acc + t;
            skip_ws();
            if (pos >= text.size()) break;
            if (accept('-'))
                negate = true;
            else if (accept('+'))
                negate = false;
            else
                throw ParseError("unexpected character", pos);
        }
        return acc;
    }
};

}  // namespace

SigmaPoly SigmaPoly::parse(const std::string& text) {
    Parser parser(text);
    parser.skip_ws();
    if (parser.pos >= text.size()) throw ParseError("empty polynomial", 0);
    return parser.parse_poly();
}

bool SigmaPoly::lex_less(const SigmaPoly& a, const SigmaPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

ContentPrimitive content_primitive(const SigmaPoly& f) {
    if (f.is_zero()) throw ZsigError("ZeroPolynomial: content of zero polynomial");
    Int c(0);
    for (const Int& a : f.coeffs()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        c = g;
    }
    std::vector<Int> prim(f.coeffs());
    for (Int& a : prim) a /= c;
    if (prim.back() < 0)
        for (Int& a : prim) a = -a;
    return {c, SigmaPoly(std::move(prim))};
}

namespace {

// pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r, over Z
SigmaPoly pseudo_rem(SigmaPoly f, const SigmaPoly& g) {
    int dg = g.degree();
    const Int& lg = g.leading();
    while (!f.is_zero() && f.degree() >= dg) {
        int shift = f.degree() - dg;
        Int lf = f.leading();
        f = lg * f - lf * g.shifted(static_cast<std::size_t>(shift));
    }
    return f;
}

}  // namespace

SigmaPoly gcd_q(const SigmaPoly& f, const SigmaPoly& g) {
    if (f.is_zero() && g.is_zero()) throw ZsigError("BothZero: gcd of two zero polynomials");
    if (f.is_zero()) return gcd_q(g, f);
    if (g.is_zero()) {
        SigmaPoly pp = content_primitive(f).primitive;
        return pp.degree() == 0 ? SigmaPoly(1) : pp;
    }
    SigmaPoly a = content_primitive(f).primitive;
    SigmaPoly b = content_primitive(g).primitive;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        SigmaPoly r = pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? SigmaPoly() : content_primitive(r).primitive;
    }
    return a.degree() == 0 ? SigmaPoly(1) : a;
}

bool divides_q(const SigmaPoly& g, const SigmaPoly& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (f.degree() < g.degree()) return false;
    return pseudo_rem(f, g).is_zero();
}

namespace {

SigmaPoly derivative(const SigmaPoly& f) {
    if (f.degree() <= 0) return SigmaPoly();
    std::vector<Int> c(static_cast<std::size_t>(f.degree()), Int(0));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        c[i - 1] = f.coeffs()[i] * static_cast<long>(i);
    return SigmaPoly(std::move(c));
}

// exact division over Z; throws if not exact (callers guarantee divisibility
// or use try_divide_exact)
bool try_divide_exact(const SigmaPoly& f, const SigmaPoly& g, SigmaPoly& quotient) {
    if (f.is_zero()) {
        quotient = SigmaPoly();
        return true;
    }
    if (g.is_zero() || f.degree() < g.degree()) return false;
    std::vector<Int> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Int(0));
    SigmaPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Int lr = r.leading();
        if (!mpz_divisible_p(lr.get_mpz_t(), g.leading().get_mpz_t())) return false;
        Int c = lr / g.leading();
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        q[shift] = c;
        r = r - c * g.shifted(shift);
    }
    if (!r.is_zero()) return false;
    quotient = SigmaPoly(std::move(q));
    return true;
}

SigmaPoly divide_exact(const SigmaPoly& f, const SigmaPoly& g) {
    SigmaPoly q;
    if (!try_divide_exact(f, g, q)) throw ZsigError("internal: division not exact");
    return q;
}

fp::Poly reduce_mod_p(const SigmaPoly& f, std::uint64_t p) {
    fp::Poly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int m = f.coeffs()[i] % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        r[i] = m.get_ui();
    }
    fp::normalize(r);
    return r;
}

SigmaPoly lift_from_fp(const fp::Poly& f) {
    std::vector<Int> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = Int(static_cast<unsigned long>(f[i]));
    return SigmaPoly(std::move(c));
}

SigmaPoly reduce_sym(const SigmaPoly& f, const Int& modulus) {
    std::vector<Int> c(f.coeffs());
    Int half = modulus / 2;
    for (Int& a : c) {
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
        if (a > half) a -= modulus;
    }
    return SigmaPoly(std::move(c));
}

SigmaPoly reduce_nonneg(const SigmaPoly& f, const Int& modulus) {
    std::vector<Int> c(f.coeffs());
    for (Int& a : c) mpz_mod(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    return SigmaPoly(std::move(c));
}

// One linear Hensel step: f = G*H mod p^m with G monic, lc(H) = lc(f) mod
// p^m, and s*G + t*H = 1 mod p. Returns the refined pair mod p^(m+1).
void hensel_step(const SigmaPoly& f, SigmaPoly& G, SigmaPoly& H, const fp::Poly& s,
                 const fp::Poly& t, std::uint64_t p, const Int& pm) {
    SigmaPoly diff = f - G * H;
    std::vector<Int> ec(diff.coeffs());
    for (Int& a : ec) a /= pm;
    fp::Poly e = reduce_mod_p(SigmaPoly(std::move(ec)), p);
    fp::Poly gp = reduce_mod_p(G, p);
    fp::Poly hp = reduce_mod_p(H, p);
    fp::Poly r = fp::mod(fp::mul(t, e, p), gp, p);
    fp::Poly num = fp::sub(e, fp::mul(r, hp, p), p);
    fp::Poly u, rem;
    fp::divmod(num, gp, p, u, rem);  // exact
    G = G + reduce_nonneg(Int(pm) * lift_from_fp(r), pm * static_cast<long>(p));
    H = H + reduce_nonneg(Int(pm) * lift_from_fp(u), pm * static_cast<long>(p));
    G = reduce_nonneg(G, pm * static_cast<long>(p));
    H = reduce_nonneg(H, pm * static_cast<long>(p));
}

// Lift a pair (G0 monic, H0 with lc = lc(f)) from mod p to mod p^K.
void hensel_lift_pair(const SigmaPoly& f, fp::Poly G0, fp::Poly H0, std::uint64_t p, int K,
                      SigmaPoly& G, SigmaPoly& H) {
    // Bezout s*G0 + t*H0 = 1 over F_p via extended Euclid
    fp::Poly r0 = G0, r1 = H0;
    fp::Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        fp::Poly q, r;
        fp::divmod(r0, r1, p, q, r);
        fp::Poly s2 = fp::sub(s0, fp::mul(q, s1, p), p);
        fp::Poly t2 = fp::sub(t0, fp::mul(q, t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant (G0, H0 coprime)
    std::uint64_t inv = fp::inv_mod(r0[0], p);
    fp::Poly s = fp::scale(s0, inv, p);
    fp::Poly t = fp::scale(t0, inv, p);
    G = lift_from_fp(G0);
    H = lift_from_fp(H0);
    Int pm(static_cast<long>(p));
    for (int m = 1; m < K; ++m) {
        hensel_step(f, G, H, s, t, p, pm);
        pm *= static_cast<long>(p);
    }
}

// Lift the monic modular factors of f (squarefree mod p, lc(f) not divisible
// by p) to monic factors mod p^K with f = lc(f) * prod(out) mod p^K.
void hensel_lift_all(const SigmaPoly& f, const std::vector<fp::Poly>& factors, std::uint64_t p,
                     int K, const Int& pK, std::vector<SigmaPoly>& out) {
    if (factors.size() == 1) {
        Int lc = f.leading() % pK;
        if (lc < 0) lc += pK;
        Int lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pK.get_mpz_t());
        out.push_back(reduce_nonneg(lc_inv * f, pK));
        return;
    }
    std::size_t half = factors.size() / 2;
    fp::Poly G0{1};
    for (std::size_t i = 0; i < half; ++i) G0 = fp::mul(G0, factors[i], p);
    fp::Poly H0 = reduce_mod_p(f, p);
    {
        fp::Poly q, r;
        fp::divmod(H0, G0, p, q, r);
        H0 = q;  // remainder is zero
    }
    SigmaPoly G, H;
    hensel_lift_pair(f, G0, H0, p, K, G, H);
    std::vector<fp::Poly> left(factors.begin(), factors.begin() + half);
    std::vector<fp::Poly> right(factors.begin() + half, factors.end());
    hensel_lift_all(G, left, p, K, pK, out);
    hensel_lift_all(H, right, p, K, pK, out);
}

// Zassenhaus factorization of a primitive squarefree polynomial of degree
// >= 1 with positive leading coefficient.
std::vector<SigmaPoly> zassenhaus(const SigmaPoly& f) {
    if (f.degree() == 1) return {f};
    // prime selection: p coprime to lc, f squarefree mod p
    std::uint64_t p = 0;
    fp::Poly fp_poly;
    for (std::uint64_t cand : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                               37ULL, 41ULL, 43ULL, 47ULL, 53ULL, 59ULL, 61ULL, 67ULL, 71ULL,
                               73ULL, 79ULL, 83ULL, 89ULL, 97ULL, 101ULL, 103ULL}) {
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), cand)) continue;
        fp::Poly fm = reduce_mod_p(f, cand);
        if (fp::degree(fp::gcd(fm, fp::derivative(fm, cand), cand)) == 0) {
            p = cand;
            fp_poly = std::move(fm);
            break;
        }
    }
    if (p == 0) throw ZsigError("internal: no suitable prime for factorization");

    std::vector<fp::Poly> modular;
    for (auto& [g, mult] : fp::factor(fp_poly, p)) modular.push_back(g);
    if (modular.size() == 1) return {f};

    // coefficient bound for lc(f) * (any monic factor lifted to Z)
    Int height(0);
    for (const Int& c : f.coeffs()) height = std::max(height, Int(abs(c)));
    Int bound = abs(f.leading()) * height * (f.degree() + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree() + 1));
    int K = 1;
    Int pK(static_cast<long>(p));
    while (pK <= 2 * bound) {
        pK *= static_cast<long>(p);
        ++K;
    }

    std::vector<SigmaPoly> lifted;
    hensel_lift_all(f, modular, p, K, pK, lifted);

    std::vector<SigmaPoly> result;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    SigmaPoly rest = f;

    std::size_t sz = 1;
    while (2 * sz <= remaining.size()) {
        bool found = false;
        std::vector<std::size_t> pick(sz);
        // enumerate size-sz subsets of remaining in lexicographic order
        std::vector<std::size_t> idx(sz);
        for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            SigmaPoly cand(rest.leading());
            for (std::size_t i : idx) cand = reduce_nonneg(cand * lifted[remaining[i]], pK);
            cand = reduce_sym(cand, pK);
            SigmaPoly g = content_primitive(cand).primitive;
            SigmaPoly q;
            if (try_divide_exact(rest, g, q)) {
                result.push_back(g);
                rest = q;
                std::vector<std::size_t> next;
                for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                    if (j < sz && idx[j] == i)
                        ++j;
                    else
                        next.push_back(remaining[i]);
                }
                remaining = std::move(next);
                found = true;
                break;
            }
            // advance combination
            std::size_t i = sz;
            while (i-- > 0) {
                if (idx[i] + (sz - i) < remaining.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = sz;  // exhausted
                    break;
                }
            }
            if (i == sz) break;
        }
        if (!found) ++sz;
    }
    if (rest.degree() >= 1) result.push_back(content_primitive(rest).primitive);
    return result;
}

bool is_prime_int(const Int& n) {
    Int a = abs(n);
    return mpz_probab_prime_p(a.get_mpz_t(), 40) > 0;
}

}  // namespace

std::vector<ZFactor> factor_z(const SigmaPoly& f) {
    if (f.is_zero()) throw ZsigError("ZeroPolynomial: cannot factor zero");
    if (f.degree() == 0 && abs(f.coeff(0)) == 1) throw ZsigError("UnitInput: cannot factor a unit");
    auto [content, primitive] = content_primitive(f);

    std::vector<ZFactor> out;
    // prime factors of the content
    Int c = content;
    for (Int q(2); c > 1; q += 1) {
        if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) continue;
        int mult = 0;
        while (mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) {
            c /= q;
            ++mult;
        }
        out.push_back({SigmaPoly(q), mult});
    }

    if (primitive.degree() >= 1) {
        // squarefree decomposition over Q via gcd with the derivative
        SigmaPoly g = primitive;
        std::vector<std::pair<SigmaPoly, int>> squarefree;
        SigmaPoly c1 = gcd_q(g, derivative(g));
        SigmaPoly w = divide_exact(g, c1.degree() == 0 ? SigmaPoly(1) : c1);
        w = content_primitive(w).primitive;
        SigmaPoly rest = c1.degree() == 0 ? SigmaPoly(1) : c1;
        int i = 1;
        while (w.degree() > 0) {
            SigmaPoly y = gcd_q(w, rest);
            if (y.degree() == 0) y = SigmaPoly(1);
            SigmaPoly part = divide_exact(w, y);
            if (part.degree() > 0) squarefree.push_back({content_primitive(part).primitive, i});
            if (rest.degree() > 0 && y.degree() > 0) {
                rest = content_primitive(divide_exact(rest, y)).primitive;
            } else if (y.degree() == 0) {
                rest = SigmaPoly(1);
            }
            w = y;
            ++i;
        }
        for (auto& [sf, mult] : squarefree)
            for (const SigmaPoly& irr : zassenhaus(sf)) {
                bool merged = false;
                for (auto& entry : out)
                    if (entry.factor == irr) {
                        entry.multiplicity += mult;
                        merged = true;
                    }
                if (!merged) out.push_back({irr, mult});
            }
    }

    std::sort(out.begin(), out.end(), [](const ZFactor& a, const ZFactor& b) {
        return SigmaPoly::lex_less(a.factor, b.factor);
    });
    return out;
}

bool is_irreducible(const SigmaPoly& f) {
    if (f.is_zero()) throw ZsigError("ZeroPolynomial: irreducibility of zero");
    if (f.degree() == 0) return is_prime_int(f.coeff(0));
    auto [content, primitive] = content_primitive(f);
    if (content != 1) return false;
    if (primitive.degree() == 1) return true;
    if (gcd_q(primitive, derivative(primitive)).degree() > 0) return false;
    return zassenhaus(primitive).size() == 1;
}

}  // namespace sigmakit
