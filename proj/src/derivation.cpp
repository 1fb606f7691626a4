#include "extpow/derivation.hpp"

#include <sstream>

namespace extpow {

namespace {

ExtLetter map_letter(const ExtLetter& l, const RingPtr& target,
                     const std::map<std::string, RingElem>& assign) {
    return ExtLetter{l.I, l.J, l.arg.map_to(target, assign)};
}

std::string letter_str(const ExtLetter& l) {
    return "t_{" + l.I.str() + "|" + l.J.str() + "}(" + l.arg.to_string() +
           ")";
}

}  // namespace

Derivation Derivation::map_to(
    const RingPtr& target,
    const std::map<std::string, RingElem>& assign) const {
    Derivation out;
    out.ctx = ctx;
    out.ring = target;
    out.conclusion = map_letter(conclusion, target, assign);
    out.steps.reserve(steps.size());
    for (const auto& s : steps) {
        DerivationStep t = s;
        if (s.kind == StepKind::Given)
            t.given = map_letter(s.given, target, assign);
        if (s.kind == StepKind::ExtGen)
            t.gen_arg = s.gen_arg.map_to(target, assign);
        if (s.claim) t.claim = map_letter(*s.claim, target, assign);
        out.steps.push_back(std::move(t));
    }
    return out;
}

std::string Derivation::transcript() const {
    std::ostringstream os;
    for (std::size_t idx = 0; idx < steps.size(); ++idx) {
        const auto& s = steps[idx];
        os << "(" << idx + 1 << ") ";
        switch (s.kind) {
            case StepKind::Given:
                os << "given      " << letter_str(s.given) << " in H";
                if (s.aux) os << "  [level closure]";
                break;
            case StepKind::ExtGen:
                os << "ext-gen    wedge^" << ctx->m() << " t_{" << s.i << ","
                   << s.j << "}(" << s.gen_arg.to_string() << ")";
                break;
            case StepKind::Commute:
                os << "commute    [(" << s.a + 1 << "), (" << s.b + 1 << ")]";
                break;
            case StepKind::Product:
                os << "product    (" << s.a + 1 << ") * (" << s.b + 1 << ")";
                break;
            case StepKind::Inverse:
                os << "inverse    (" << s.a + 1 << ")^-1";
                break;
            case StepKind::ScaleByHalf:
                os << "halve      (" << s.a + 1 << ")";
                break;
        }
        if (s.claim) os << "  =  " << letter_str(*s.claim);
        if (!s.note.empty()) os << "   -- " << s.note;
        os << "\n";
    }
    os << "conclusion: " << letter_str(conclusion) << " in H\n";
    return os.str();
}

namespace {
ValidationReport validate_impl(const Derivation& d);
}

ValidationReport validate_derivation(const Derivation& d) {
    try {
        return validate_impl(d);
    } catch (const std::exception& e) {
        return ValidationReport{false, -1,
                                std::string("malformed derivation: ") +
                                    e.what()};
    }
}

namespace {

ValidationReport validate_impl(const Derivation& d) {
    const CtxPtr& ctx = d.ctx;
    const RingPtr& ring = d.ring;
    const std::size_t n_steps = d.steps.size();

    auto fail = [](int idx, std::string msg) {
        return ValidationReport{false, idx, std::move(msg)};
    };

    // Effective word per step: a validated claim collapses to one letter,
    // which keeps replayed words short.
    std::vector<ExtWord> eff(n_steps);

    for (std::size_t idx = 0; idx < n_steps; ++idx) {
        const auto& s = d.steps[idx];
        const int self = static_cast<int>(idx);
        auto operand = [&](int o) -> const ExtWord& {
            if (o < 0 || o >= self)
                throw std::invalid_argument("step operand out of order");
            return eff[static_cast<std::size_t>(o)];
        };

        ExtWord w;
        switch (s.kind) {
            case StepKind::Given:
                if (s.given.I == s.given.J)
                    return fail(self, "degenerate given");
                w.append(WordAtom::ext(s.given.I, s.given.J, s.given.arg));
                break;
            case StepKind::ExtGen:
                w.append(WordAtom::wedge(s.i, s.j, s.gen_arg));
                break;
            case StepKind::Commute:
                w = ExtWord::commutator(operand(s.a), operand(s.b));
                break;
            case StepKind::Product:
                w = operand(s.a);
                w.append(operand(s.b));
                break;
            case StepKind::Inverse:
                w = operand(s.a).inverse();
                break;
            case StepKind::ScaleByHalf: {
                if (!ring->two_invertible())
                    return fail(self, "2 not invertible in " +
                                          ring->describe());
                if (!s.claim)
                    return fail(self, "halving step carries no claim");
                RingElem two(ring, 2L);
                auto val = word_single_transvection(ctx, operand(s.a), ring);
                if (val) {
                    if (!(val->I == s.claim->I) || !(val->J == s.claim->J) ||
                        val->arg != two * s.claim->arg)
                        return fail(self, "halving claim mismatch");
                } else {
                    // A specialized argument may vanish: then the operand is
                    // the identity and the claim must vanish with it.
                    if (!word_is_identity(ctx, operand(s.a), ring) ||
                        !(two * s.claim->arg).is_zero())
                        return fail(self, "halving claim mismatch");
                }
                w.append(WordAtom::ext(s.claim->I, s.claim->J, s.claim->arg));
                break;
            }
        }

        if (s.claim && s.kind != StepKind::ScaleByHalf) {
            ExtWord cw;
            cw.append(WordAtom::ext(s.claim->I, s.claim->J, s.claim->arg));
            const bool literal =
                w.atoms.size() == 1 && w.atoms[0].kind == WordAtom::Kind::Ext &&
                w.atoms[0].I == s.claim->I && w.atoms[0].J == s.claim->J &&
                w.atoms[0].arg == s.claim->arg;
            if (!literal && !words_equal(ctx, w, cw, ring))
                return fail(self, "claim does not match evaluation");
            eff[idx] = cw;
        } else if (s.kind == StepKind::ScaleByHalf) {
            eff[idx] = w;  // already the claimed single letter
        } else {
            eff[idx] = w;
        }
    }

    if (n_steps == 0) return fail(-1, "empty derivation");
    ExtWord cw;
    cw.append(
        WordAtom::ext(d.conclusion.I, d.conclusion.J, d.conclusion.arg));
    if (!words_equal(ctx, eff[n_steps - 1], cw, ring))
        return fail(-1, "conclusion does not match the final step");
    return ValidationReport{true, -1, "ok"};
}

}  // namespace

ValidationReport validate_derivation(
    const Derivation& d, const RingPtr& ring,
    const std::map<std::string, RingElem>& assign) {
    if (ring->same(*d.ring) && assign.empty()) return validate_derivation(d);
    return validate_derivation(d.map_to(ring, assign));
}

int DerivationBuilder::push(DerivationStep s) {
    steps_.push_back(std::move(s));
    return static_cast<int>(steps_.size()) - 1;
}

int DerivationBuilder::given(const ExtLetter& l, bool aux, std::string note) {
    DerivationStep s;
    s.kind = StepKind::Given;
    s.given = l;
    s.aux = aux;
    s.claim = l;
    s.note = std::move(note);
    return push(std::move(s));
}

int DerivationBuilder::ext_gen(int i, int j, const RingElem& arg,
                               std::string note) {
    DerivationStep s;
    s.kind = StepKind::ExtGen;
    s.i = i;
    s.j = j;
    s.gen_arg = arg;
    s.note = std::move(note);
    return push(std::move(s));
}

int DerivationBuilder::commute(int a, int b, std::optional<ExtLetter> claim,
                               std::string note) {
    DerivationStep s;
    s.kind = StepKind::Commute;
    s.a = a;
    s.b = b;
    s.claim = std::move(claim);
    s.note = std::move(note);
    return push(std::move(s));
}

int DerivationBuilder::product(int a, int b, std::optional<ExtLetter> claim,
                               std::string note) {
    DerivationStep s;
    s.kind = StepKind::Product;
    s.a = a;
    s.b = b;
    s.claim = std::move(claim);
    s.note = std::move(note);
    return push(std::move(s));
}

int DerivationBuilder::inverse(int a, std::string note) {
    DerivationStep s;
    s.kind = StepKind::Inverse;
    s.a = a;
    s.note = std::move(note);
    return push(std::move(s));
}

int DerivationBuilder::scale_by_half(int a, const ExtLetter& claim,
                                     std::string note) {
    DerivationStep s;
    s.kind = StepKind::ScaleByHalf;
    s.a = a;
    s.claim = claim;
    s.note = std::move(note);
    return push(std::move(s));
}

Derivation DerivationBuilder::finish(const ExtLetter& conclusion) && {
    Derivation d;
    d.ctx = ctx_;
    d.ring = ring_;
    d.steps = std::move(steps_);
    d.conclusion = conclusion;
    return d;
}

}  // namespace extpow
