#pragma once

#include "extpow/derivation.hpp"
#include "extpow/ideal.hpp"

namespace extpow {

/// The hypothesis "t_{I,J}(arg) lies in the overgroup H".
struct LevelGenerator {
    WeightIndex I, J;
    RingElem arg;
};

/// The level of the overgroup generated by the hypotheses: the ideal spanned
/// by all cited arguments.  Requires n >= 3m, the single-ideal regime.
Ideal compute_level(const CtxPtr& ctx, const RingPtr& ring,
                    const std::vector<LevelGenerator>& gens);

/// Derives t_{K,L}(+-xi * zeta-monomial) from t_{I,J}(xi) for positions of
/// equal height.  With zeta = 1 the conclusion argument is +-xi.  Uses fresh
/// auxiliary indices where available and the doubling-plus-halving move on
/// fixed unions (which needs invertible 2).
Derivation equalize_witness(const CtxPtr& ctx, const WeightIndex& from_I,
                            const WeightIndex& from_J, const WeightIndex& to_K,
                            const WeightIndex& to_L, const RingElem& xi,
                            std::optional<RingElem> zeta = std::nullopt);

/// Strips shared indices by type-2 commutations until the target height is
/// reached, then equalizes position.
Derivation lower_height_witness(const CtxPtr& ctx, const WeightIndex& from_I,
                                const WeightIndex& from_J,
                                const WeightIndex& to_K,
                                const WeightIndex& to_L, const RingElem& xi);

/// The double type-3 commutation: from height-k hypotheses with argument xi
/// concludes a height-(k+1) transvection with argument +-xi^2*zeta*zeta1.
/// Requires n >= 3m - 2k and 0 <= k <= m-2.
Derivation raise_height_witness(const CtxPtr& ctx, int k, const RingElem& xi,
                                const RingElem& zeta, const RingElem& zeta1);

/// A single commutator [x, y] of generators expressing the target generator.
struct PerfectnessWitness {
    WordAtom x, y;
    ExtWord word() const {
        ExtWord wx, wy;
        wx.append(x);
        wy.append(y);
        return ExtWord::commutator(wx, wy);
    }
};

/// Expresses t_{I,J}(xi) as [t_{I,V}(xi), wedge^m t(+-1)].
PerfectnessWitness perfectness_witness(const CtxPtr& ctx, const ExtLetter& t);
/// Expresses wedge^m t_{i,j}(zeta) as [wedge^m t_{i,h}(zeta), wedge^m t_{h,j}(1)].
PerfectnessWitness perfectness_witness(const CtxPtr& ctx, int i, int j,
                                       const RingElem& zeta);

}  // namespace extpow
