#pragma once

#include "extpow/exterior.hpp"

namespace extpow {

/// z_{I,J}(xi,zeta) = t_{J,I}(zeta) * t_{I,J}(xi) * t_{J,I}(-zeta); the
/// generators of the relative elementary group for xi ranging over an ideal.
struct RelativeGenerator {
    WeightIndex I, J;
    RingElem xi, zeta;
};

Matrix relative_generator_matrix(const CtxPtr& ctx, const RingPtr& ring,
                                 const RelativeGenerator& z);
ExtWord relative_generator_word(const RelativeGenerator& z);

/// One factor C * b * C^-1 with C a word of whole wedge generators and b an
/// elementary transvection whose argument is a multiple of xi.
struct ConjugatedPair {
    ExtWord conjugator;  // Wedge atoms only
    ExtLetter base;
};

struct ZFactorization {
    CtxPtr ctx;
    std::vector<ConjugatedPair> pairs;

    ExtWord word() const;
};

/// Recursive factorization of z_{I,J}(xi,zeta) into wedge-conjugated
/// elementary transvections of level (xi), by induction on the height.
/// Requires n >= 3m.
ZFactorization relative_generator_factorization(const CtxPtr& ctx,
                                                const RelativeGenerator& z);

}  // namespace extpow
