#pragma once

#include <cstdint>
#include <map>

#include "extpow/exterior.hpp"

namespace extpow {

/// Monomial over the N weight variables {x_I}: dense exponent vector indexed
/// by the context's rank order.
using WeightMonomial = std::vector<std::uint8_t>;

/// Polynomial in the weight variables.  `alternating` marks wedge-monomial
/// semantics (exponents 0/1, sign tracked by sorted-variable normalization);
/// both flavors share one sparse representation.
struct WeightPoly {
    CtxPtr ctx;
    RingPtr ring;
    bool alternating = false;
    std::map<WeightMonomial, RingElem> terms;

    static WeightPoly zero(CtxPtr ctx, RingPtr ring, bool alternating = false);

    /// Adds coeff * x_{v1}*...*x_{vd} for 0-based variable ranks; wedge
    /// semantics sorts with sign and drops repeats.
    void add_monomial(std::vector<std::size_t> vars, const RingElem& coeff);
    void add_term(const WeightMonomial& mono, const RingElem& coeff);

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // throws when inhomogeneous
    RingElem coeff(const WeightMonomial& mono) const;

    WeightPoly operator+(const WeightPoly& o) const;
    WeightPoly operator-() const;
    WeightPoly scaled(const RingElem& c) const;
    bool operator==(const WeightPoly& o) const;

    std::string to_string() const;
};

struct QuadricSystem {
    enum class Provenance { Form, PartitionIdeal, PlueckerSym, PlueckerAlt };

    CtxPtr ctx;
    RingPtr ring;
    Provenance provenance = Provenance::PlueckerSym;
    int degree = 2;
    bool alternating = false;
    std::vector<WeightPoly> generators;
};

/// The invariant form f_{n,m} (m | n): the signed sum over unordered
/// partitions of [n] into m-blocks; wedge-flavored for odd m.
WeightPoly build_form(const CtxPtr& ctx, const RingPtr& ring);

/// For m not dividing n: one copy of f_{ml,m} per ml-subset of [n].
QuadricSystem build_partition_ideal(const CtxPtr& ctx, const RingPtr& ring);

/// Generalized Pluecker quadrics: for each (m-1)-set S and (m+1)-set T the
/// signed sum of x_{S+t} * x_{T-t}; zero quadrics dropped, duplicates (up to
/// unit scaling) merged.  The alternating flavor takes wedge products.
QuadricSystem build_pluecker(const CtxPtr& ctx, const RingPtr& ring,
                             bool alternating = false);

/// p(g o x) where (g o x)_J = sum_K g_{J,K} x_K, expanded canonically;
/// wedge monomials transform through minors of g.
WeightPoly substitute_linear(const WeightPoly& p, const Matrix& g);

/// Gram matrix of a quadratic form (needs invertible 2 for the off-diagonal
/// halves).
Matrix gram_matrix(const WeightPoly& f);

}  // namespace extpow
