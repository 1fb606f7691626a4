#pragma once

#include <optional>
#include <vector>

#include "extpow/ring.hpp"

namespace extpow {

using ZMatrix = std::vector<std::vector<mpz_class>>;

/// Diagonal form U*A*V = S of an integer matrix with unimodular U, V.
/// The diagonal is not normalized to a divisibility chain; any exact
/// diagonalization suffices for solving.
struct SmithForm {
    ZMatrix U, V;
    std::vector<mpz_class> diag;
    std::size_t rows = 0, cols = 0;

    std::optional<std::vector<mpz_class>> solve(
        const std::vector<mpz_class>& b) const;
};

SmithForm smith_form(ZMatrix a);

std::optional<std::vector<mpz_class>> solve_integer(
    const ZMatrix& a, const std::vector<mpz_class>& b);

/// Exact solve of A x = b over Z, Z/k or a prime field.  Returns a solution
/// when one exists.  Gaussian elimination over fields, Smith form of the
/// integer lift otherwise.
std::optional<std::vector<RingElem>> solve_linear(
    const RingPtr& ring, const std::vector<std::vector<RingElem>>& a,
    const std::vector<RingElem>& b);

/// True when the columns of `a` are linearly independent over the ring
/// (only the trivial combination vanishes).  Supports Z, Z/k, fields.
bool columns_independent(const RingPtr& ring,
                         const std::vector<std::vector<RingElem>>& a);

}  // namespace extpow
