#include "sigmakit/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sigmakit {

namespace {

std::uint64_t lcm_u(unsigned a, unsigned b) { return std::lcm<std::uint64_t>(a, b); }

bool coeff_lex_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

// --- TowerElem ---

TowerElem::TowerElem(FieldTower* tower, unsigned level, std::vector<std::uint64_t> coeffs)
    : tower_(tower), level_(level), coeffs_(std::move(coeffs)) {
    coeffs_.resize(std::size_t(tower->e()) * level, 0);
    for (auto& c : coeffs_) c %= tower->p();
}

TowerElem FieldTower::make(unsigned t, std::vector<std::uint64_t> coeffs) {
    check_level(t);
    modulus(t);  // force construction so arithmetic never misses it
    return TowerElem(this, t, std::move(coeffs));
}

void FieldTower::check_level(unsigned t) const {
    if (t == 0) throw FieldError("tower level must be >= 1");
    if (t > caps_.level_cap) throw FieldError("CapExceeded: tower level " + std::to_string(t));
}

namespace {

struct Lifted {
    FieldTower* tower;
    unsigned level;
    fp::Poly a, b;
};

Lifted lift_pair(const TowerElem& x, const TowerElem& y) {
    if (!x.tower() || !y.tower()) throw FieldError("uninitialized tower element");
    if (x.tower() != y.tower()) throw FieldError("elements of different towers");
    FieldTower* tw = x.tower();
    unsigned t = unsigned(lcm_u(x.level(), y.level()));
    TowerElem xl = tw->embed(x, t);
    TowerElem yl = tw->embed(y, t);
    fp::Poly a = xl.coeffs(), b = yl.coeffs();
    fp::normalize(a);
    fp::normalize(b);
    return {tw, t, std::move(a), std::move(b)};
}

}  // namespace

TowerElem TowerElem::operator-() const {
    std::vector<std::uint64_t> c = coeffs_;
    for (auto& v : c) v = fp::sub_mod(0, v, tower_->p());
    return TowerElem(tower_, level_, std::move(c));
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    Lifted l = lift_pair(a, b);
    return TowerElem(l.tower, l.level, fp::add(l.a, l.b, l.tower->p()));
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) {
    Lifted l = lift_pair(a, b);
    return TowerElem(l.tower, l.level, fp::sub(l.a, l.b, l.tower->p()));
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    Lifted l = lift_pair(a, b);
    fp::Poly prod = fp::mod(fp::mul(l.a, l.b, l.tower->p()), l.tower->modulus(l.level), l.tower->p());
    return TowerElem(l.tower, l.level, std::move(prod));
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }

bool operator==(const TowerElem& a, const TowerElem& b) {
    Lifted l = lift_pair(a, b);
    return l.a == l.b;
}

TowerElem TowerElem::pow(const mpz_class& e) const {
    if (!tower_) throw FieldError("uninitialized tower element");
    const fp::Poly& m = tower_->modulus(level_);
    fp::Poly base = coeffs_;
    fp::normalize(base);
    if (e < 0) {
        TowerElem inv = inverse();
        return inv.pow(-e);
    }
    fp::Poly r = fp::pow_mod_poly(base, e, m, tower_->p());
    return TowerElem(tower_, level_, std::move(r));
}

TowerElem TowerElem::inverse() const {
    if (is_zero()) throw FieldError("division by zero in tower field");
    return pow(tower_->unit_order(level_) - 1);
}

std::string TowerElem::to_string() const {
    std::ostringstream out;
    out << "p=" << tower_->p() << ",e=" << tower_->e() << ",t=" << level_ << ":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i];
    }
    out << ']';
    return out.str();
}

// --- FieldTower ---

FieldTower::FieldTower(std::uint64_t p, unsigned e, TowerCaps caps) : p_(p), e_(e), caps_(caps) {
    if (e == 0) throw FieldError("e must be >= 1");
    mpz_class pz(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw FieldError("p must be prime");
}

const fp::Poly& FieldTower::modulus(unsigned t) {
    check_level(t);
    auto it = moduli_.find(t);
    if (it != moduli_.end()) return it->second;
    fp::Poly m = fp::least_irreducible(int(e_) * int(t), p_);
    return moduli_.emplace(t, std::move(m)).first->second;
}

mpz_class FieldTower::field_size(unsigned t) const {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p_), e_ * t);
    return s;
}

TowerElem FieldTower::from_int(long v, unsigned t) {
    long r = v % long(p_);
    if (r < 0) r += long(p_);
    return make(t, {std::uint64_t(r)});
}

TowerElem FieldTower::gen(unsigned t) { return make(t, {0, 1}); }

TowerElem FieldTower::element_by_index(const mpz_class& idx, unsigned t) {
    check_level(t);
    std::vector<std::uint64_t> coeffs(std::size_t(e_) * t, 0);
    mpz_class rest = idx;
    for (auto& c : coeffs) {
        if (rest == 0) break;
        mpz_class q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                       static_cast<unsigned long>(p_));
        c = r.get_ui();
        rest = q;
    }
    if (rest != 0) throw FieldError("element index out of range for level");
    return make(t, std::move(coeffs));
}

const std::vector<std::uint64_t>& FieldTower::root_image(unsigned s, unsigned t) {
    if (t % s != 0) throw FieldError("NotASubfieldLevel");
    auto key = std::make_pair(s, t);
    auto it = roots_.find(key);
    if (it != roots_.end()) return it->second;

    std::vector<std::uint64_t> image;
    if (s == t) {
        image = {0, 1};
        image.resize(std::size_t(e_) * t, 0);
        return roots_.emplace(key, std::move(image)).first->second;
    }

    // roots of m_s in level t, in coefficient-lexicographic order
    const fp::Poly ms = modulus(s);
    TowerPoly lifted;
    lifted.reserve(ms.size());
    for (auto c : ms) lifted.push_back(make(t, {c}));
    std::vector<TowerElem> cands = tp_roots(lifted, *this);

    // proper divisors of s define sub-embeddings the choice must respect
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d < s; ++d)
        if (s % d == 0) divisors.push_back(d);

    for (const TowerElem& r : cands) {
        bool ok = true;
        for (unsigned d : divisors) {
            const std::vector<std::uint64_t> via_s = root_image(d, s);
            const std::vector<std::uint64_t> direct = root_image(d, t);
            // evaluate the level-s coordinates of gen(d)'s image at r
            TowerElem acc = zero(t);
            for (std::size_t i = via_s.size(); i-- > 0;)
                acc = acc * r + from_int(long(via_s[i]), t);
            if (acc.coeffs() != direct) {
                ok = false;
                break;
            }
        }
        if (ok) {
            image = r.coeffs();
            break;
        }
    }
    if (image.empty()) throw FieldError("no compatible root for embedding");
    return roots_.emplace(key, std::move(image)).first->second;
}

TowerElem FieldTower::embed(const TowerElem& x, unsigned t_target) {
    check_level(t_target);
    if (x.level() == t_target) return x;
    if (t_target % x.level() != 0) throw FieldError("NotASubfieldLevel");
    const std::vector<std::uint64_t>& root = root_image(x.level(), t_target);
    TowerElem r = make(t_target, root);
    TowerElem acc = zero(t_target);
    const auto& cs = x.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * r + from_int(long(cs[i]), t_target);
    return acc;
}

TowerElem FieldTower::least_generator(unsigned t) {
    check_level(t);
    auto it = generators_.find(t);
    if (it != generators_.end()) return make(t, it->second);
    mpz_class size = field_size(t);
    if (size > caps_.dlog_cap) throw FieldError("CapExceeded: field too large for generator search");
    mpz_class n = size - 1;
    std::vector<mpz_class> primes;
    mpz_class rest = n, d = 2;
    while (d * d <= rest) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
        ++d;
    }
    if (rest > 1) primes.push_back(rest);
    for (mpz_class idx = 1; idx < size; ++idx) {
        TowerElem g = element_by_index(idx, t);
        bool gen = true;
        for (const mpz_class& q : primes) {
            if (g.pow(n / q) == one(t)) {
                gen = false;
                break;
            }
        }
        if (gen) {
            generators_.emplace(t, g.coeffs());
            return g;
        }
    }
    throw FieldError("NotGenerator: no generator found");  // unreachable
}

mpz_class FieldTower::dlog(const TowerElem& a, const TowerElem& g) {
    if (a.is_zero()) throw FieldError("dlog of zero");
    unsigned t = unsigned(lcm_u(a.level(), g.level()));
    if (field_size(t) > caps_.dlog_cap) throw FieldError("CapExceeded: field too large for dlog");
    TowerElem al = embed(a, t), gl = embed(g, t);
    mpz_class n = unit_order(t);
    TowerElem acc = one(t);
    for (mpz_class k = 0; k < n; ++k) {
        if (acc == al) return k;
        acc = acc * gl;
    }
    throw FieldError("dlog: not in the cyclic group generated by g");
}

TowerElem frobenius(const TowerElem& x, unsigned d) {
    FieldTower* tw = x.tower();
    if (!tw) throw FieldError("uninitialized tower element");
    unsigned et = tw->e() * x.level();
    unsigned r = (std::uint64_t(tw->e()) * d) % et;
    TowerElem acc = x;
    mpz_class p(static_cast<unsigned long>(tw->p()));
    for (unsigned i = 0; i < r; ++i) acc = acc.pow(p);
    return acc;
}

// --- polynomials over a level ---

TowerPoly tp_normalize(TowerPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int tp_degree(const TowerPoly& f) { return int(f.size()) - 1; }

static TowerElem tp_zero_like(const TowerPoly& f) {
    return f.front().tower()->zero(f.front().level());
}

TowerPoly tp_mul(const TowerPoly& f, const TowerPoly& g) {
    if (f.empty() || g.empty()) return {};
    TowerPoly out(f.size() + g.size() - 1, tp_zero_like(f));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = out[i + j] + f[i] * g[j];
    return tp_normalize(std::move(out));
}

TowerPoly tp_sub(const TowerPoly& f, const TowerPoly& g) {
    TowerPoly out = f;
    if (out.size() < g.size()) out.resize(g.size(), g.empty() ? TowerElem() : tp_zero_like(g));
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = out[i] - g[i];
    return tp_normalize(std::move(out));
}

void tp_divmod(const TowerPoly& f, const TowerPoly& g, TowerPoly& q, TowerPoly& r) {
    if (g.empty()) throw FieldError("division by zero polynomial");
    // build into locals so q or r may alias f or g
    TowerPoly rem = f;
    TowerPoly quot;
    if (!f.empty() && f.size() >= g.size()) {
        TowerElem lead_inv = g.back().inverse();
        quot.assign(f.size() - g.size() + 1, tp_zero_like(f));
        while (!rem.empty() && rem.size() >= g.size()) {
            TowerElem c = rem.back() * lead_inv;
            std::size_t shift = rem.size() - g.size();
            quot[shift] = c;
            for (std::size_t i = 0; i < g.size(); ++i) rem[shift + i] = rem[shift + i] - c * g[i];
            rem = tp_normalize(std::move(rem));
        }
        quot = tp_normalize(std::move(quot));
    }
    q = std::move(quot);
    r = std::move(rem);
}

TowerElem tp_eval(const TowerPoly& f, const TowerElem& x) {
    TowerElem acc = x.tower()->zero(x.level());
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

namespace {

TowerPoly tp_mod(const TowerPoly& f, const TowerPoly& g) {
    TowerPoly q, r;
    tp_divmod(f, g, q, r);
    return r;
}

TowerPoly tp_monic(const TowerPoly& f) {
    if (f.empty()) return f;
    TowerElem inv = f.back().inverse();
    TowerPoly out = f;
    for (auto& c : out) c = c * inv;
    return out;
}

TowerPoly tp_gcd(TowerPoly a, TowerPoly b) {
    while (!b.empty()) {
        TowerPoly r = tp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return tp_monic(a);
}

TowerPoly tp_powmod(TowerPoly base, mpz_class e, const TowerPoly& m) {
    TowerPoly acc = {base.front().tower()->one(base.front().level())};
    base = tp_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = tp_mod(tp_mul(acc, base), m);
        base = tp_mod(tp_mul(base, base), m);
        e >>= 1;
    }
    return acc;
}

TowerPoly tp_derivative(const TowerPoly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    TowerPoly out;
    out.reserve(f.size() - 1);
    FieldTower* tw = f.front().tower();
    unsigned t = f.front().level();
    for (std::size_t i = 1; i < f.size(); ++i)
        out.push_back(f[i] * tw->from_int(long(i % p), t));
    return tp_normalize(std::move(out));
}

bool tp_coeff_less(const TowerPoly& a, const TowerPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].coeffs() != b[i].coeffs()) return coeff_lex_less(a[i].coeffs(), b[i].coeffs());
    }
    return false;
}

// candidate element of L_t[y] of degree < deg used for the deterministic
// equal-degree split; enumerated by a single index
TowerPoly edf_candidate(const mpz_class& idx, unsigned t, int deg, FieldTower& tower) {
    mpz_class size = tower.field_size(t);
    TowerPoly cand(std::size_t(deg), tower.zero(t));
    mpz_class rest = idx;
    for (auto& c : cand) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), size.get_mpz_t());
        c = tower.element_by_index(r, t);
        rest = q;
        if (rest == 0) break;
    }
    return tp_normalize(std::move(cand));
}

void equal_degree_factor(const TowerPoly& f, int d, FieldTower& tower,
                         std::vector<TowerPoly>& out) {
    int n = tp_degree(f);
    if (n == d) {
        out.push_back(tp_monic(f));
        return;
    }
    unsigned t = f.front().level();
    mpz_class size = tower.field_size(t);
    // indices below `size` encode constants, which can never split
    for (mpz_class idx = size;; ++idx) {
        TowerPoly cand = edf_candidate(idx, t, n, tower);
        if (tp_degree(cand) < 1) continue;
        TowerPoly g;
        if (tower.p() == 2) {
            // trace map over F_2
            TowerPoly tr = cand;
            TowerPoly cur = cand;
            unsigned bits = unsigned(d) * tower.e() * t;
            for (unsigned i = 1; i < bits; ++i) {
                cur = tp_mod(tp_mul(cur, cur), f);
                tr = tp_mod(tp_sub(tr, cur), f);  // add == sub in char 2
            }
            g = tp_gcd(f, tr);
        } else {
            mpz_class qd;
            mpz_pow_ui(qd.get_mpz_t(), size.get_mpz_t(), unsigned(d));
            TowerPoly u = tp_powmod(cand, (qd - 1) / 2, f);
            TowerPoly one = {tower.one(t)};
            g = tp_gcd(f, tp_sub(u, one));
        }
        if (tp_degree(g) > 0 && tp_degree(g) < n) {
            TowerPoly q, r;
            tp_divmod(f, g, q, r);
            equal_degree_factor(g, d, tower, out);
            equal_degree_factor(q, d, tower, out);
            return;
        }
    }
}

TowerPoly tp_pth_root(const TowerPoly& f, FieldTower& tower) {
    // coefficients at positions divisible by p; each needs a p-th root,
    // which is x^(p^(e*t - 1)) at level t
    unsigned t = f.front().level();
    mpz_class exp;
    mpz_ui_pow_ui(exp.get_mpz_t(), static_cast<unsigned long>(tower.p()), tower.e() * t - 1);
    TowerPoly out;
    for (std::size_t i = 0; i < f.size(); i += std::size_t(tower.p()))
        out.push_back(f[i].pow(exp));
    return tp_normalize(std::move(out));
}

void squarefree_parts(const TowerPoly& f, FieldTower& tower, int mult,
                      std::vector<std::pair<TowerPoly, int>>& out) {
    std::uint64_t p = tower.p();
    TowerPoly df = tp_derivative(f, p);
    if (df.empty()) {
        squarefree_parts(tp_pth_root(f, tower), tower, mult * int(p), out);
        return;
    }
    TowerPoly c = tp_gcd(f, df);
    TowerPoly w, r;
    tp_divmod(f, c, w, r);
    int i = 1;
    while (tp_degree(w) > 0) {
        TowerPoly y = tp_gcd(w, c);
        TowerPoly part, r2;
        tp_divmod(w, y, part, r2);
        if (tp_degree(part) > 0) out.emplace_back(tp_monic(part), i * mult);
        tp_divmod(c, y, c, r2);
        w = std::move(y);
        ++i;
    }
    if (tp_degree(c) > 0) squarefree_parts(c, tower, mult * int(p), out);
}

}  // namespace

std::vector<TowerFactor> factor_poly(const TowerPoly& f_in, FieldTower& tower) {
    TowerPoly f = tp_normalize(f_in);
    if (f.empty()) throw FieldError("ZeroPolynomial");
    std::vector<TowerFactor> result;
    if (tp_degree(f) == 0) return result;
    f = tp_monic(f);
    unsigned t = f.front().level();
    mpz_class size = tower.field_size(t);

    std::vector<std::pair<TowerPoly, int>> sqfree;
    squarefree_parts(f, tower, 1, sqfree);

    for (auto& [part, mult] : sqfree) {
        // distinct-degree splitting, then equal-degree splitting
        TowerPoly rem = part;
        TowerPoly h = {tower.zero(t), tower.one(t)};  // y
        int d = 0;
        while (tp_degree(rem) > 2 * d) {
            ++d;
            h = tp_powmod(h, size, rem);
            TowerPoly y = {tower.zero(t), tower.one(t)};
            TowerPoly g = tp_gcd(rem, tp_sub(h, y));
            if (tp_degree(g) > 0) {
                std::vector<TowerPoly> pieces;
                equal_degree_factor(g, d, tower, pieces);
                for (auto& piece : pieces) result.push_back({std::move(piece), mult});
                TowerPoly q, r;
                tp_divmod(rem, g, q, r);
                rem = std::move(q);
                if (tp_degree(rem) > 0) h = tp_mod(h, rem);
            }
        }
        // whatever survives the sweep is irreducible
        if (tp_degree(rem) > 0) result.push_back({tp_monic(rem), mult});
    }

    std::sort(result.begin(), result.end(), [](const TowerFactor& a, const TowerFactor& b) {
        return tp_coeff_less(a.poly, b.poly);
    });
    return result;
}

unsigned tp_least_splitting_degree(const TowerPoly& f_in, FieldTower& tower, unsigned max_r) {
    TowerPoly f = tp_normalize(f_in);
    if (tp_degree(f) < 2 || max_r < 2) return 0;
    unsigned t = f.front().level();
    std::uint64_t p = tower.p();
    mpz_class size = tower.field_size(t);
    // squarefree part (factor degrees are preserved by the p-th-root step
    // because Frobenius is bijective on every finite level)
    TowerPoly rem = tp_monic(f);
    for (;;) {
        TowerPoly df = tp_derivative(rem, p);
        if (!df.empty()) {
            TowerPoly c = tp_gcd(rem, df);
            TowerPoly q, r;
            tp_divmod(rem, c, q, r);
            rem = tp_monic(std::move(q));
            break;
        }
        rem = tp_pth_root(rem, tower);
        if (tp_degree(rem) < 2) return 0;
    }
    // incremental distinct-degree sieve up to max_r only
    TowerPoly h = {tower.zero(t), tower.one(t)};  // y
    h = tp_mod(h, rem);
    for (unsigned r = 1; r <= max_r && tp_degree(rem) > 0; ++r) {
        if (tp_degree(rem) <= 2 * int(r) - 1) {
            // the remainder is irreducible
            unsigned d = unsigned(tp_degree(rem));
            return (d >= 2 && d <= max_r) ? d : 0;
        }
        h = tp_powmod(h, size, rem);
        TowerPoly y = {tower.zero(t), tower.one(t)};
        TowerPoly g = tp_gcd(rem, tp_sub(h, y));
        if (tp_degree(g) > 0) {
            if (r >= 2) return r;
            TowerPoly q, rr;
            tp_divmod(rem, g, q, rr);
            rem = std::move(q);
            if (tp_degree(rem) > 0) h = tp_mod(h, rem);
        }
    }
    return 0;
}

std::vector<TowerElem> tp_roots(const TowerPoly& f, FieldTower& tower) {
    std::vector<TowerElem> roots;
    for (const TowerFactor& fac : factor_poly(f, tower)) {
        if (tp_degree(fac.poly) == 1) roots.push_back(-fac.poly[0]);
    }
    std::sort(roots.begin(), roots.end(), [](const TowerElem& a, const TowerElem& b) {
        return coeff_lex_less(a.coeffs(), b.coeffs());
    });
    return roots;
}

// --- k^[n] ---

KnElem KnElem::diagonal(const TowerElem& a, std::size_t n) {
    if (n == 0) throw FieldError("k^[n] element needs n >= 1");
    std::vector<TowerElem> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(frobenius(a, unsigned(n - 1 - i)));
    return KnElem(std::move(comps));
}

static void check_same_n(const KnElem& a, const KnElem& b) {
    if (a.n() != b.n()) throw FieldError("k^[n] arity mismatch");
}

KnElem operator+(const KnElem& a, const KnElem& b) {
    check_same_n(a, b);
    std::vector<TowerElem> out;
    out.reserve(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(a.component(i) + b.component(i));
    return KnElem(std::move(out));
}

KnElem operator-(const KnElem& a, const KnElem& b) {
    check_same_n(a, b);
    std::vector<TowerElem> out;
    out.reserve(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(a.component(i) - b.component(i));
    return KnElem(std::move(out));
}

KnElem operator*(const KnElem& a, const KnElem& b) {
    check_same_n(a, b);
    std::vector<TowerElem> out;
    out.reserve(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) out.push_back(a.component(i) * b.component(i));
    return KnElem(std::move(out));
}

bool operator==(const KnElem& a, const KnElem& b) {
    if (a.n() != b.n()) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
        if (a.component(i) != b.component(i)) return false;
    return true;
}

bool KnElem::is_unit() const {
    for (const auto& c : comps_)
        if (c.is_zero()) return false;
    return true;
}

KnElem KnElem::inverse() const {
    std::vector<TowerElem> out;
    out.reserve(n());
    for (const auto& c : comps_) out.push_back(c.inverse());
    return KnElem(std::move(out));
}

KnElem KnElem::pow(const mpz_class& e) const {
    std::vector<TowerElem> out;
    out.reserve(n());
    for (const auto& c : comps_) out.push_back(c.pow(e));
    return KnElem(std::move(out));
}

KnElem kn_sigma(const KnElem& x) {
    std::vector<TowerElem> out;
    out.reserve(x.n());
    out.push_back(frobenius(x.component(x.n() - 1), unsigned(x.n())));
    for (std::size_t i = 0; i + 1 < x.n(); ++i) out.push_back(x.component(i));
    return KnElem(std::move(out));
}

TowerElem kn_project_last(const KnElem& x) { return x.component(x.n() - 1); }

KnElem kn_embed(const KnElem& x, std::size_t l) {
    if (l == 0) throw FieldError("kn_embed needs l >= 1");
    std::size_t n = x.n();
    std::vector<TowerElem> out;
    out.reserve(n * l);
    for (std::size_t u = l; u-- > 0;)
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(frobenius(x.component(i), unsigned(n * u)));
    return KnElem(std::move(out));
}

}  // namespace sigmakit
