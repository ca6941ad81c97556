#ifndef SIGMAKIT_INT_LATTICE_HPP
#define SIGMAKIT_INT_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

namespace sigmakit {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct SmithZ {
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform, u * a * v = d
};

// Smith normal form over Z with deterministic pivoting (smallest absolute
// value, then row-major position).
SmithZ smith_z(const IntMatrix& a);

IntMatrix identity_z(std::size_t n);
IntMatrix mul_z(const IntMatrix& a, const IntMatrix& b);

}  // namespace sigmakit

#endif
