#ifndef SIGMAKIT_FP_POLY_HPP
#define SIGMAKIT_FP_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace sigmakit::fp {

// Dense polynomials over F_p for word-sized primes. Coefficient vectors are
// normalized (no trailing zeros); the zero polynomial is the empty vector.
using Poly = std::vector<std::uint64_t>;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

void normalize(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
// division with remainder; divisor must be nonzero
void divmod(const Poly& f, const Poly& g, std::uint64_t p, Poly& q, Poly& r);
Poly mod(const Poly& f, const Poly& g, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);  // monic, or zero
Poly derivative(const Poly& f, std::uint64_t p);
Poly pow_mod_poly(const Poly& base, const mpz_class& e, const Poly& modulus, std::uint64_t p);

bool is_irreducible(const Poly& f, std::uint64_t p);

struct Factor {
    Poly poly;  // monic irreducible
    int multiplicity;
};

// Complete factorization of a nonzero polynomial over F_p into monic
// irreducibles (the leading unit is dropped). Derandomized: equal-degree
// splitting tries candidate elements in a fixed enumeration order.
std::vector<Factor> factor(const Poly& f, std::uint64_t p);

// lexicographically least monic irreducible of degree d over F_p
// (coefficient tuples compared low-degree-first)
Poly least_irreducible(int d, std::uint64_t p);

}  // namespace sigmakit::fp

#endif
