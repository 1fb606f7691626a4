#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extpow/exterior.hpp"

namespace extpow {

enum class StepKind { Given, ExtGen, Commute, Product, Inverse, ScaleByHalf };

/// One closure move.  Given cites a hypothesis t_{I,J}(arg) in H (aux marks
/// citations justified by the level being an ideal rather than by a direct
/// input); ExtGen introduces wedge^m t_{i,j}(arg); the remaining kinds
/// combine earlier steps by group operations.  ScaleByHalf replaces a single
/// transvection t_{P,Q}(2c) by t_{P,Q}(c) and is legal only over rings with
/// invertible 2.
struct DerivationStep {
    StepKind kind = StepKind::Given;
    int a = -1, b = -1;  // operand step indices (0-based)
    ExtLetter given;     // Given
    bool aux = false;
    int i = 0, j = 0;  // ExtGen
    RingElem gen_arg;
    std::optional<ExtLetter> claim;  // claimed single-transvection value
    std::string note;
};

struct Derivation {
    CtxPtr ctx;
    RingPtr ring;
    std::vector<DerivationStep> steps;
    ExtLetter conclusion;

    /// Transport all arguments through a coefficient homomorphism with the
    /// given variable assignments.
    Derivation map_to(const RingPtr& target,
                      const std::map<std::string, RingElem>& assign = {}) const;

    std::string transcript() const;
};

struct ValidationReport {
    bool ok = false;
    int failing_step = -1;  // 0-based; -1 means the conclusion comparison
    std::string message;
};

/// Replays every step with exact matrices, checks each claimed value, and
/// checks that the final step evaluates to the conclusion's matrix.
ValidationReport validate_derivation(const Derivation& d);
ValidationReport validate_derivation(
    const Derivation& d, const RingPtr& ring,
    const std::map<std::string, RingElem>& assign = {});

/// Incrementally builds a derivation; claims are recorded as supplied and
/// revalidated by validate_derivation.
class DerivationBuilder {
public:
    DerivationBuilder(CtxPtr ctx, RingPtr ring)
        : ctx_(std::move(ctx)), ring_(std::move(ring)) {}

    int given(const ExtLetter& l, bool aux, std::string note);
    int ext_gen(int i, int j, const RingElem& arg, std::string note);
    int commute(int a, int b, std::optional<ExtLetter> claim,
                std::string note);
    int product(int a, int b, std::optional<ExtLetter> claim,
                std::string note);
    int inverse(int a, std::string note);
    int scale_by_half(int a, const ExtLetter& claim, std::string note);

    const CtxPtr& ctx() const { return ctx_; }
    const RingPtr& ring() const { return ring_; }
    int last() const { return static_cast<int>(steps_.size()) - 1; }
    const DerivationStep& step(int idx) const {
        return steps_[static_cast<std::size_t>(idx)];
    }

    Derivation finish(const ExtLetter& conclusion) &&;

private:
    int push(DerivationStep s);
    CtxPtr ctx_;
    RingPtr ring_;
    std::vector<DerivationStep> steps_;
};

}  // namespace extpow
