#ifndef SIGMAKIT_QPOLY_HPP
#define SIGMAKIT_QPOLY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "sigmakit/zsig.hpp"

namespace sigmakit {

// Polynomials over Q in the symbol s. Internal arithmetic type: never
// serialized. Normalized like SigmaPoly (empty = zero).
class QPoly {
  public:
    QPoly() = default;
    QPoly(const mpq_class& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    explicit QPoly(const SigmaPoly& f) {
        coeffs_.reserve(f.coeffs().size());
        for (const Int& c : f.coeffs()) coeffs_.push_back(mpq_class(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
    }
    const mpq_class& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading of zero");
        return coeffs_.back();
    }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    QPoly operator-() const {
        auto c = coeffs_;
        for (auto& x : c) x = -x;
        return QPoly(std::move(c));
    }
    friend QPoly operator+(const QPoly& f, const QPoly& g) {
        std::vector<mpq_class> c(std::max(f.coeffs_.size(), g.coeffs_.size()), mpq_class(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
        return QPoly(std::move(c));
    }
    friend QPoly operator-(const QPoly& f, const QPoly& g) { return f + (-g); }
    friend QPoly operator*(const QPoly& f, const QPoly& g) {
        if (f.is_zero() || g.is_zero()) return QPoly();
        std::vector<mpq_class> c(f.coeffs_.size() + g.coeffs_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
                c[i + j] += f.coeffs_[i] * g.coeffs_[j];
        return QPoly(std::move(c));
    }

    // division with remainder; g nonzero
    friend void divmod(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r) {
        if (g.is_zero()) throw std::domain_error("QPoly division by zero");
        r = f;
        std::vector<mpq_class> qc(
            f.degree() >= g.degree() ? static_cast<std::size_t>(f.degree() - g.degree()) + 1 : 0,
            mpq_class(0));
        while (!r.is_zero() && r.degree() >= g.degree()) {
            mpq_class c = r.leading() / g.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            qc[shift] = c;
            std::vector<mpq_class> rc = r.coeffs_;
            for (std::size_t i = 0; i < g.coeffs_.size(); ++i) rc[i + shift] -= c * g.coeffs_[i];
            r = QPoly(std::move(rc));
        }
        q = QPoly(std::move(qc));
    }

    QPoly monic() const {
        if (is_zero()) return *this;
        auto c = coeffs_;
        mpq_class lc = c.back();
        for (auto& x : c) x /= lc;
        return QPoly(std::move(c));
    }

    // monic-normalized lexicographic order on (degree, coefficients top-down)
    static bool lex_less(const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        QPoly am = a.monic(), bm = b.monic();
        for (int i = a.degree(); i >= 0; --i) {
            std::size_t k = static_cast<std::size_t>(i);
            if (am.coeff(k) != bm.coeff(k)) return am.coeff(k) < bm.coeff(k);
        }
        return false;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<mpq_class> coeffs_;
};

}  // namespace sigmakit

#endif
