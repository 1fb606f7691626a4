#include "extpow/level.hpp"

#include <algorithm>
#include <set>

namespace extpow {

namespace {

std::vector<int> set_minus(const WeightIndex& a, const WeightIndex& b) {
    std::vector<int> out;
    for (int v : a.elems)
        if (!b.contains(v)) out.push_back(v);
    return out;
}

WeightIndex shared(const WeightIndex& a, const WeightIndex& b) {
    std::vector<int> out;
    for (int v : a.elems)
        if (b.contains(v)) out.push_back(v);
    return WeightIndex(std::move(out));
}

WeightIndex range_set(int lo, int hi) {  // [lo..hi], empty when lo > hi
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return WeightIndex(std::move(v));
}

/// Sequential move engine shared by the equalize/lower witnesses: tracks the
/// current hypothesis position and appends one closure move at a time.
struct MoveEngine {
    DerivationBuilder& b;
    CtxPtr ctx;
    RingElem zeta;  // commutation parameter, usually 1
    ExtLetter cur;
    int cur_step;
    int moves = 0;

    void bump() {
        if (++moves > 16 * (ctx->n() + ctx->m()))
            throw std::invalid_argument(
                "insufficient n for disjoint auxiliary indices");
    }

    bool occupied(int v) const {
        return cur.I.contains(v) || cur.J.contains(v);
    }

    /// Rename a in I to fresh r: commutation with wedge t_{r,a}.
    void move_source(int a, int r) {
        bump();
        CommResult res = classify_commutator(ctx, cur, r, a, zeta);
        if (res.kind != CommCase::Single)
            throw std::logic_error("move_source expected a type-2 case");
        int g = b.ext_gen(r, a, zeta, "");
        int s = b.commute(cur_step, g, res.factors[0], "type-2 commutation");
        cur = res.factors[0];
        cur_step = s;
    }

    /// Rename v in J to fresh r: commutation with wedge t_{v,r}.
    void move_target(int v, int r) {
        bump();
        CommResult res = classify_commutator(ctx, cur, v, r, zeta);
        if (res.kind != CommCase::Single)
            throw std::logic_error("move_target expected a type-2 case");
        int g = b.ext_gen(v, r, zeta, "");
        int s = b.commute(cur_step, g, res.factors[0], "type-2 commutation");
        cur = res.factors[0];
        cur_step = s;
    }

    /// Rename the shared index c to fresh r in both I and J: a type-2 move
    /// followed by a type-3 move whose two spare factors are cancelled by
    /// level-closure citations.
    void move_shared(int c, int r) {
        bump();
        // Step 1: push c out of J.
        CommResult first = classify_commutator(ctx, cur, c, r, zeta);
        if (first.kind != CommCase::Single)
            throw std::logic_error("move_shared expected a type-2 case");
        int g1 = b.ext_gen(c, r, zeta, "");
        int s1 =
            b.commute(cur_step, g1, first.factors[0], "type-2 commutation");
        ExtLetter mid = first.factors[0];

        // Step 2: type-3 move reintroducing r on both sides.
        CommResult second = classify_commutator(ctx, mid, r, c, zeta);
        if (second.kind != CommCase::Triple)
            throw std::logic_error("move_shared expected a type-3 case");
        int g2 = b.ext_gen(r, c, zeta, "");
        int s2 = b.commute(s1, g2, std::nullopt, "type-3 commutation");
        const ExtLetter& keep = second.factors[0];
        const ExtLetter& spare_mid = second.factors[1];
        const ExtLetter& spare_low = second.factors[2];
        int a3 = b.given(spare_low, true, "argument in (xi), lower height");
        int i3 = b.inverse(a3, "");
        int p1 = b.product(s2, i3, std::nullopt, "cancel trailing factor");
        int a2 = b.given(spare_mid, true, "argument in (xi), equal height");
        int i2 = b.inverse(a2, "");
        int p2 = b.product(p1, i2, keep, "cancel trailing factor");
        cur = keep;
        cur_step = p2;
    }

    /// Exchange a in I with v in J on a fixed union: type-3 commutations with
    /// +-zeta, additivity, and halving.
    void swap_halve(int a, int v) {
        bump();
        // Symbolic construction defers the unit check to validation; a
        // scalar ring without an invertible 2 can never validate it.
        if (!b.ring()->two_invertible() &&
            b.ring()->kind() != RingKind::PolyRing)
            throw std::invalid_argument("2 not invertible in " +
                                        b.ring()->describe());
        CommResult plus = classify_commutator(ctx, cur, v, a, zeta);
        CommResult minus = classify_commutator(ctx, cur, v, a, -zeta);
        if (plus.kind != CommCase::Triple)
            throw std::invalid_argument(
                "insufficient n for disjoint auxiliary indices");
        int gp = b.ext_gen(v, a, zeta, "");
        int cp = b.commute(cur_step, gp, std::nullopt, "type-3 with +zeta");
        int gm = b.ext_gen(v, a, -zeta, "");
        int cm = b.commute(cur_step, gm, std::nullopt, "type-3 with -zeta");
        const ExtLetter& sq = plus.factors[2];
        ExtLetter doubled{sq.I, sq.J, sq.arg + sq.arg};
        int pr = b.product(cp, cm, doubled,
                           "linear factors cancel by additivity");
        int hv = b.scale_by_half(pr, sq, "halve the doubled argument");
        cur = sq;
        cur_step = hv;
    }

    /// Smallest parking index outside the current position, preferring to
    /// dodge the listed targets.
    int park(const std::vector<const WeightIndex*>& avoid) const {
        for (int pass = static_cast<int>(avoid.size()); pass >= 0; --pass) {
            for (int v = 1; v <= ctx->n(); ++v) {
                if (occupied(v)) continue;
                bool bad = false;
                for (int t = 0; t < pass; ++t)
                    if (avoid[static_cast<std::size_t>(t)]->contains(v))
                        bad = true;
                if (!bad) return v;
            }
        }
        throw std::invalid_argument(
            "insufficient n for disjoint auxiliary indices");
    }

    /// Drive the current position to (K, L) of the same height.
    void equalize_into(const WeightIndex& K, const WeightIndex& L) {
        const WeightIndex T = shared(K, L);
        // Phase 1: align the shared set.
        while (!(shared(cur.I, cur.J) == T)) {
            WeightIndex S = shared(cur.I, cur.J);
            int c = set_minus(S, T).front();
            int t = set_minus(T, S).front();
            if (occupied(t)) {
                int p = park({&T, &K, &L});
                if (cur.I.contains(t) && !cur.J.contains(t))
                    move_source(t, p);
                else if (cur.J.contains(t) && !cur.I.contains(t))
                    move_target(t, p);
                else  // t shared but outside T cannot happen: t in T \ S
                    throw std::logic_error("unexpected shared target");
            }
            move_shared(c, t);
        }
        // Phase 2: align the source set.
        while (!(cur.I == K)) {
            int a = set_minus(cur.I, K).front();
            int t = set_minus(K, cur.I).front();
            if (!occupied(t)) {
                move_source(a, t);
            } else {
                bool parked = true;
                int p = -1;
                try {
                    p = park({&K, &L, &T});
                } catch (const std::invalid_argument&) {
                    parked = false;
                }
                if (parked) {
                    move_target(t, p);
                    move_source(a, t);
                } else {
                    swap_halve(a, t);
                }
            }
        }
        // Phase 3: align the target set.
        while (!(cur.J == L)) {
            int v = set_minus(cur.J, L).front();
            int t = set_minus(L, cur.J).front();
            move_target(v, t);
        }
    }
};

void check_position(const CtxPtr& ctx, const WeightIndex& I,
                    const WeightIndex& J) {
    if (I == J) throw std::invalid_argument("transvection requires I != J");
    ctx->rank(I);
    ctx->rank(J);
}

}  // namespace

Ideal compute_level(const CtxPtr& ctx, const RingPtr& ring,
                    const std::vector<LevelGenerator>& gens) {
    if (ctx->n() < 3 * ctx->m())
        throw std::invalid_argument(
            "level not single-ideal; net of ideals out of scope");
    std::vector<RingElem> args;
    args.reserve(gens.size());
    for (const auto& g : gens) {
        check_position(ctx, g.I, g.J);
        args.push_back(g.arg);
    }
    return ideal_generate(ring, args);
}

Derivation equalize_witness(const CtxPtr& ctx, const WeightIndex& from_I,
                            const WeightIndex& from_J, const WeightIndex& to_K,
                            const WeightIndex& to_L, const RingElem& xi,
                            std::optional<RingElem> zeta) {
    check_position(ctx, from_I, from_J);
    check_position(ctx, to_K, to_L);
    if (height(from_I, from_J) != height(to_K, to_L))
        throw std::invalid_argument("heights differ");
    RingElem z = zeta ? *zeta : RingElem::one(xi.ring());

    DerivationBuilder b(ctx, xi.ring());
    ExtLetter start{from_I, from_J, xi};
    int s0 = b.given(start, false, "hypothesis");
    if (from_I == to_K && from_J == to_L)
        return std::move(b).finish(start);

    MoveEngine eng{b, ctx, z, start, s0};
    eng.equalize_into(to_K, to_L);
    return std::move(b).finish(eng.cur);
}

Derivation lower_height_witness(const CtxPtr& ctx, const WeightIndex& from_I,
                                const WeightIndex& from_J,
                                const WeightIndex& to_K,
                                const WeightIndex& to_L, const RingElem& xi) {
    check_position(ctx, from_I, from_J);
    check_position(ctx, to_K, to_L);
    if (height(from_I, from_J) <= height(to_K, to_L))
        throw std::invalid_argument("heights not in descending relation");

    DerivationBuilder b(ctx, xi.ring());
    ExtLetter start{from_I, from_J, xi};
    int s0 = b.given(start, false, "hypothesis");
    MoveEngine eng{b, ctx, RingElem::one(xi.ring()), start, s0};

    const WeightIndex target_shared = shared(to_K, to_L);
    while (height(eng.cur.I, eng.cur.J) > height(to_K, to_L)) {
        WeightIndex S = shared(eng.cur.I, eng.cur.J);
        std::vector<int> pref = set_minus(S, target_shared);
        int c = pref.empty() ? S.elems.front() : pref.front();
        // Strip toward the target when a wanted source index is free.
        int r = -1;
        for (int v : set_minus(to_K, eng.cur.I))
            if (!eng.occupied(v) && !target_shared.contains(v)) {
                r = v;
                break;
            }
        if (r < 0) r = eng.park({&to_K, &to_L});
        eng.move_source(c, r);
    }
    eng.equalize_into(to_K, to_L);
    return std::move(b).finish(eng.cur);
}

Derivation raise_height_witness(const CtxPtr& ctx, int k, const RingElem& xi,
                                const RingElem& zeta, const RingElem& zeta1) {
    const int m = ctx->m();
    const int n = ctx->n();
    if (k < 0 || k > m - 2)
        throw std::invalid_argument("raise requires 0 <= k <= m-2");
    if (n < 3 * m - 2 * k)
        throw std::invalid_argument("constraint n >= 3m-2k violated");
    require_same_ring(xi, zeta);
    require_same_ring(xi, zeta1);

    DerivationBuilder b(ctx, xi.ring());

    WeightIndex I, J, I1, J1;
    int row1, col1, row2, col2;
    bool swap_commutator_order = false;

    if (m == 2) {
        if (k != 0) throw std::invalid_argument("raise requires 0 <= k <= m-2");
        I = WeightIndex({1, 2});
        J = WeightIndex({3, 4});
        I1 = WeightIndex({4, 5});
        J1 = WeightIndex({1, 6});
        row1 = 4; col1 = 2;
        row2 = 6; col2 = 4;
        swap_commutator_order = true;
    } else {
        const int q = m - k;
        WeightIndex K = range_set(1, k);
        I = range_set(1, m);
        J = K;
        for (int v = m + 1; v <= m + q; ++v) J = J.with(v);
        row1 = m + q; col1 = m;

        int j1;
        std::vector<int> fill;
        if (q >= 3) {
            for (int v = m + q + 1; v <= m + 2 * q - 1; ++v)
                fill.push_back(v);
            j1 = m + 2 * q;
        } else {  // q == 2: the walkthrough assigns the first fresh index
                  // to J1's extra slot and the next one to I1
            j1 = m + q + 1;
            fill.push_back(m + q + 2);
        }
        I1 = K.with(m);
        for (int v : fill) I1 = I1.with(v);
        J1 = K;
        for (int v = k + 1; v <= m - 1; ++v) J1 = J1.with(v);
        J1 = J1.with(j1);
        row2 = j1; col2 = m;
    }

    // First hypothesis and its type-3 commutation; the zeta^2 factor is
    // cancelled by a level-closure citation.
    ExtLetter h1{I, J, xi};
    int g1 = b.given(h1, false, "hypothesis at height k");
    CommResult c1 = classify_commutator(ctx, h1, row1, col1, zeta);
    if (c1.kind != CommCase::Triple)
        throw std::logic_error("raise: expected a type-3 case");
    int e1 = b.ext_gen(row1, col1, zeta, "");
    int s1 = b.commute(g1, e1, std::nullopt, "type-3 commutation");
    int a1 = b.given(c1.factors[2], true, "argument in (xi)");
    int i1 = b.inverse(a1, "");
    int p1 = b.product(s1, i1, std::nullopt, "cancel the zeta^2 factor");

    // Second hypothesis, same treatment.
    ExtLetter h2{I1, J1, xi};
    int g2 = b.given(h2, false, "hypothesis at height k");
    CommResult c2 = classify_commutator(ctx, h2, row2, col2, zeta1);
    if (c2.kind != CommCase::Triple)
        throw std::logic_error("raise: expected a type-3 case");
    int e2 = b.ext_gen(row2, col2, zeta1, "");
    int s2 = b.commute(g2, e2, std::nullopt, "type-3 commutation");
    int a2 = b.given(c2.factors[2], true, "argument in (xi)");
    int i2 = b.inverse(a2, "");
    int p2 = b.product(s2, i2, std::nullopt, "cancel the zeta1^2 factor");

    ExtLetter conclusion;
    int final_step;
    if (swap_commutator_order) {
        // [P2, P1] collapses through t_{I1,J1~} against t_{I~,J}.
        const ExtLetter& f1 = c1.factors[0];   // t_{I~, J}
        const ExtLetter& f2p = c2.factors[1];  // t_{I1, J1~}
        conclusion = ExtLetter{f2p.I, f1.J, f2p.arg * f1.arg};
        final_step = b.commute(p2, p1, conclusion,
                               "single surviving interaction");
    } else {
        // [P1, P2] collapses through t_{I1,I} against t_{I,J~}.
        const ExtLetter& f2 = c1.factors[1];   // t_{I, J~}
        const ExtLetter& f2p = c2.factors[1];  // t_{I1, I}
        conclusion = ExtLetter{f2p.I, f2.J, -(f2p.arg * f2.arg)};
        final_step = b.commute(p1, p2, conclusion,
                               "single surviving interaction");
    }
    (void)final_step;
    return std::move(b).finish(conclusion);
}

PerfectnessWitness perfectness_witness(const CtxPtr& ctx, const ExtLetter& t) {
    check_position(ctx, t.I, t.J);
    const WeightIndex K = shared(t.I, t.J);
    std::vector<int> is = set_minus(t.I, t.J), js = set_minus(t.J, t.I);
    const int q = static_cast<int>(is.size());

    PerfectnessWitness w;
    if (q >= 2) {
        const int iq = is.back(), jq = js.back();
        WeightIndex V = t.J.replaced(jq, iq);  // K + j_1..j_{q-1} + i_q
        int s = weight_sign(t.J.without(jq), iq, jq);
        w.x = WordAtom::ext(t.I, V, t.arg);
        w.y = WordAtom::wedge(iq, jq, RingElem(t.arg.ring(), (long)s));
    } else {
        const int j1 = js.front();
        int r = -1;
        for (int v = 1; v <= ctx->n(); ++v)
            if (!t.I.contains(v) && !t.J.contains(v)) {
                r = v;
                break;
            }
        if (r < 0)
            throw std::invalid_argument("no valid auxiliary index");
        WeightIndex V = K.with(r);
        int s = weight_sign(K, r, j1);
        w.x = WordAtom::ext(t.I, V, t.arg);
        w.y = WordAtom::wedge(r, j1, RingElem(t.arg.ring(), (long)s));
    }
    return w;
}

PerfectnessWitness perfectness_witness(const CtxPtr& ctx, int i, int j,
                                       const RingElem& zeta) {
    if (i == j) throw std::invalid_argument("transvection requires i != j");
    if (i < 1 || j < 1 || i > ctx->n() || j > ctx->n())
        throw std::invalid_argument("transvection index out of range");
    int h = -1;
    for (int v = 1; v <= ctx->n(); ++v)
        if (v != i && v != j) {
            h = v;
            break;
        }
    if (h < 0) throw std::invalid_argument("no valid auxiliary index");
    PerfectnessWitness w;
    w.x = WordAtom::wedge(i, h, zeta);
    w.y = WordAtom::wedge(h, j, RingElem::one(zeta.ring()));
    return w;
}

}  // namespace extpow
