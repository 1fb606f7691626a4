#pragma once

#include <optional>
#include <vector>

#include "extpow/ring.hpp"

namespace extpow {

/// A finitely generated ideal.  Over Z the normal form is a single
/// non-negative gcd generator, over Z/k a single generator dividing k, over a
/// field 0 or 1.  Polynomial rings keep their generators verbatim and carry
/// no normal form.
struct Ideal {
    RingPtr ring;
    std::vector<RingElem> generators;
    std::optional<RingElem> normal_form;

    bool is_zero() const;
    bool is_unit() const;
};

Ideal ideal_generate(const RingPtr& ring, const std::vector<RingElem>& gens);

/// Membership for Z, Z/k and fields.  Polynomial-ring membership is
/// deliberately unsupported; degree-graded span questions live in the
/// invariants layer instead.
bool ideal_membership(const Ideal& ideal, const RingElem& x);

}  // namespace extpow
