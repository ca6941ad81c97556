#ifndef SIGMAKIT_ZSIG_HPP
#define SIGMAKIT_ZSIG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigmakit {

using Int = mpz_class;

struct ZsigError : std::runtime_error {
    explicit ZsigError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// An element of Z[s]: integer coefficients, index i holds the coefficient
/// of s^i. The zero polynomial has an empty coefficient vector; otherwise
/// the last entry is nonzero.
class SigmaPoly {
  public:
    SigmaPoly() = default;
    SigmaPoly(long constant) : SigmaPoly(Int(constant)) {}
    SigmaPoly(const Int& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit SigmaPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static SigmaPoly sigma_power(std::size_t t) {
        std::vector<Int> c(t + 1, Int(0));
        c[t] = 1;
        return SigmaPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// degree; -1 encodes the "-infinity" degree of the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    const Int& leading() const {
        if (coeffs_.empty()) throw ZsigError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool operator==(const SigmaPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const SigmaPoly& o) const { return !(*this == o); }

    SigmaPoly operator-() const {
        std::vector<Int> c(coeffs_);
        for (auto& x : c) x = -x;
        return SigmaPoly(std::move(c));
    }

    friend SigmaPoly operator+(const SigmaPoly& f, const SigmaPoly& g) {
        std::vector<Int> c(std::max(f.coeffs_.size(), g.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
        return SigmaPoly(std::move(c));
    }
    friend SigmaPoly operator-(const SigmaPoly& f, const SigmaPoly& g) { return f + (-g); }
    friend SigmaPoly operator*(const SigmaPoly& f, const SigmaPoly& g) {
        if (f.is_zero() || g.is_zero()) return SigmaPoly();
        std::vector<Int> c(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += f.coeffs_[i] * g.coeffs_[j];
        return SigmaPoly(std::move(c));
    }
    friend SigmaPoly operator*(const Int& n, const SigmaPoly& f) { return SigmaPoly(n) * f; }

    /// multiplication by s^t
    SigmaPoly shifted(std::size_t t) const {
        if (is_zero()) return SigmaPoly();
        std::vector<Int> c(coeffs_.size() + t, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + t] = coeffs_[i];
        return SigmaPoly(std::move(c));
    }

    /// exact evaluation at an integer point
    Int eval(const Int& t) const {
        Int acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    std::string to_string() const;
    static SigmaPoly parse(const std::string& text);

    /// strict total order: degree first, then coefficients from the top down
    static bool lex_less(const SigmaPoly& a, const SigmaPoly& b);

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

struct ContentPrimitive {
    Int content;          // gcd of coefficients, positive
    SigmaPoly primitive;  // content 1, positive leading coefficient
};

/// content/primitive-part split; f = +-content * primitive
ContentPrimitive content_primitive(const SigmaPoly& f);

/// Primitive generator of the gcd ideal of (f, g) in Q[s], with positive
/// leading coefficient. A constant gcd is returned as 1.
SigmaPoly gcd_q(const SigmaPoly& f, const SigmaPoly& g);

/// true iff g divides f in Q[s]
bool divides_q(const SigmaPoly& g, const SigmaPoly& f);

struct ZFactor {
    SigmaPoly factor;  // prime integer (as a constant) or primitive irreducible, lc > 0
    int multiplicity;
};

/// Complete factorization in Z[s]: prime integers from the content, then
/// primitive irreducible polynomials (Zassenhaus). The signed product of the
/// factors with multiplicities equals f up to sign.
std::vector<ZFactor> factor_z(const SigmaPoly& f);

/// Irreducibility in Z[s]: +-prime integer, or primitive of positive degree
/// and irreducible over Q.
bool is_irreducible(const SigmaPoly& f);

}  // namespace sigmakit

#endif
