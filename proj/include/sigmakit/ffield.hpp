#ifndef SIGMAKIT_FFIELD_HPP
#define SIGMAKIT_FFIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigmakit/fp_poly.hpp"

namespace sigmakit {

struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

struct TowerCaps {
    // largest field enumerable by dlog / least_generator
    std::uint64_t dlog_cap = std::uint64_t(1) << 24;
    unsigned level_cap = 24;
};

class FieldTower;

/// An element of F_(q^t): coordinates w.r.t. the level-t modulus,
/// low-degree-first, length e*t.
class TowerElem {
  public:
    TowerElem() : tower_(nullptr), level_(0) {}
    TowerElem(FieldTower* tower, unsigned level, std::vector<std::uint64_t> coeffs);

    FieldTower* tower() const { return tower_; }
    unsigned level() const { return level_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (c) return false;
        return true;
    }

    TowerElem operator-() const;
    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
    // equality compares as field elements (lifting to a common level)
    friend bool operator==(const TowerElem& a, const TowerElem& b);
    friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

    TowerElem inverse() const;
    TowerElem pow(const mpz_class& e) const;

    std::string to_string() const;

  private:
    FieldTower* tower_;
    unsigned level_;
    std::vector<std::uint64_t> coeffs_;
};

/// Lazy tower of finite fields realizing the algebraic closure of F_p with
/// the Frobenius endomorphism sigma: x -> x^q, q = p^e. Level t is
/// F_p[y]/(m_t) with m_t the lex-least monic irreducible of degree e*t.
class FieldTower {
  public:
    FieldTower(std::uint64_t p, unsigned e, TowerCaps caps = {});

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    const TowerCaps& caps() const { return caps_; }

    const fp::Poly& modulus(unsigned t);
    mpz_class field_size(unsigned t) const;  // p^(e*t)
    mpz_class unit_order(unsigned t) const { return field_size(t) - 1; }

    TowerElem zero(unsigned t = 1) { return make(t, {}); }
    TowerElem one(unsigned t = 1) { return from_int(1, t); }
    TowerElem from_int(long v, unsigned t = 1);
    TowerElem gen(unsigned t);  // residue class of y at level t
    // element number idx in the fixed enumeration of level t (base-p digits,
    // low coordinate = least significant)
    TowerElem element_by_index(const mpz_class& idx, unsigned t);

    /// image of x at the target level; level(x) must divide t_target
    TowerElem embed(const TowerElem& x, unsigned t_target);

    /// least unit generating the level-t multiplicative group (cached)
    TowerElem least_generator(unsigned t);

    /// least x >= 0 with g^x = a; brute force, capped
    mpz_class dlog(const TowerElem& a, const TowerElem& g);

  private:
    friend class TowerElem;
    TowerElem make(unsigned t, std::vector<std::uint64_t> coeffs);
    void check_level(unsigned t) const;
    // image of gen(s) at level t (s | t), compatible across the divisor
    // lattice; cached
    const std::vector<std::uint64_t>& root_image(unsigned s, unsigned t);

    std::uint64_t p_;
    unsigned e_;
    TowerCaps caps_;
    std::map<unsigned, fp::Poly> moduli_;
    std::map<std::pair<unsigned, unsigned>, std::vector<std::uint64_t>> roots_;
    std::map<unsigned, std::vector<std::uint64_t>> generators_;
};

/// sigma^d on an element: x -> x^(q^d)
TowerElem frobenius(const TowerElem& x, unsigned d);

// --- polynomials over a tower level ---

/// dense polynomial with TowerElem coefficients (all at one level),
/// low-degree-first, normalized
using TowerPoly = std::vector<TowerElem>;

struct TowerFactor {
    TowerPoly poly;  // monic irreducible
    int multiplicity;
};

TowerPoly tp_normalize(TowerPoly f);
int tp_degree(const TowerPoly& f);
TowerPoly tp_mul(const TowerPoly& f, const TowerPoly& g);
TowerPoly tp_sub(const TowerPoly& f, const TowerPoly& g);
void tp_divmod(const TowerPoly& f, const TowerPoly& g, TowerPoly& q, TowerPoly& r);
TowerElem tp_eval(const TowerPoly& f, const TowerElem& x);

/// complete factorization over the coefficients' level; deterministic
/// (derandomized equal-degree splitting in a fixed enumeration order)
std::vector<TowerFactor> factor_poly(const TowerPoly& f, FieldTower& tower);

/// roots of f at its own level, sorted coefficient-lexicographically
std::vector<TowerElem> tp_roots(const TowerPoly& f, FieldTower& tower);

// smallest degree r with 2 <= r <= max_r of an irreducible factor of f over
// the level of f's coefficients, or 0 if there is none in that range
unsigned tp_least_splitting_degree(const TowerPoly& f, FieldTower& tower, unsigned max_r);

// --- the twisted product ring k^[n] ---

/// element of k^[n]; component 0 is a_1 (the "sigma^(n-1) slot"),
/// component n-1 is a_n (the identity slot)
class KnElem {
  public:
    KnElem(std::vector<TowerElem> components) : comps_(std::move(components)) {
        if (comps_.empty()) throw FieldError("k^[n] element needs n >= 1");
    }
    /// diagonal embedding of a field element: (sigma^(n-1)(a), ..., sigma(a), a)
    static KnElem diagonal(const TowerElem& a, std::size_t n);

    std::size_t n() const { return comps_.size(); }
    const TowerElem& component(std::size_t i) const { return comps_[i]; }
    const std::vector<TowerElem>& components() const { return comps_; }

    friend KnElem operator+(const KnElem& a, const KnElem& b);
    friend KnElem operator-(const KnElem& a, const KnElem& b);
    friend KnElem operator*(const KnElem& a, const KnElem& b);
    friend bool operator==(const KnElem& a, const KnElem& b);
    friend bool operator!=(const KnElem& a, const KnElem& b) { return !(a == b); }
    bool is_unit() const;
    KnElem inverse() const;
    KnElem pow(const mpz_class& e) const;

  private:
    std::vector<TowerElem> comps_;
};

/// the twisted cyclic shift (a_1,...,a_n) -> (sigma^n(a_n), a_1, ..., a_{n-1})
KnElem kn_sigma(const KnElem& x);

/// projection onto the last factor (a morphism of k-sigma^n-algebras)
TowerElem kn_project_last(const KnElem& x);

/// the canonical difference-ring morphism k^[n] -> k^[n*l]
KnElem kn_embed(const KnElem& x, std::size_t l);

}  // namespace sigmakit

#endif
