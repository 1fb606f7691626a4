#pragma once

#include <memory>

#include "extpow/ideal.hpp"
#include "extpow/weight_poly.hpp"

namespace extpow {

struct StabilizerReport {
    bool member = false;
    std::optional<RingElem> multiplier;          // lambda(g) for single forms
    std::optional<std::size_t> failing_generator;
};

/// Repeated span-membership queries against a fixed generator set: one
/// elimination up front, cheap reductions per query.
class SpanSolver {
public:
    explicit SpanSolver(const QuadricSystem& sys);
    bool contains(const WeightPoly& p) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// True iff p is an R-linear combination of the system's generators.
bool span_membership(const WeightPoly& p, const QuadricSystem& sys);

/// True iff only the trivial combination of generators vanishes.
bool system_independent(const QuadricSystem& sys);

/// Similarity test: g o f = lambda * f with lambda a unit.  Refused for
/// n = 2m with m >= 3, where the single form only certifies membership in
/// the ambient orthogonal/symplectic group.
StabilizerReport stabilizer_check(const WeightPoly& form, const Matrix& g);

/// Span stabilization: every translated generator stays in the span, for g
/// and for g^-1.
StabilizerReport stabilizer_check(const QuadricSystem& sys, const Matrix& g);

/// Congruence membership: reduce g modulo the ideal and test the canonical
/// stabilizer system for (n, m) over the quotient.
bool congruence_membership(const CtxPtr& ctx, const Matrix& g, const Ideal& A);

/// The canonical system choice used by congruence_membership.
std::string canonical_system_name(int n, int m);

}  // namespace extpow
