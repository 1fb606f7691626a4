#include "extpow/zfactor.hpp"

namespace extpow {

namespace {

std::vector<int> set_minus(const WeightIndex& a, const WeightIndex& b) {
    std::vector<int> out;
    for (int v : a.elems)
        if (!b.contains(v)) out.push_back(v);
    return out;
}

ConjugatedPair plain(const ExtLetter& b) { return ConjugatedPair{{}, b}; }

void wrap(std::vector<ConjugatedPair>& seq, const ExtLetter& a) {
    // ^a (seq) = a * seq * a^-1, with a itself a level element.
    std::vector<ConjugatedPair> out;
    out.reserve(seq.size() + 2);
    out.push_back(plain(a));
    for (auto& p : seq) out.push_back(std::move(p));
    out.push_back(plain(ExtLetter{a.I, a.J, -a.arg}));
    seq = std::move(out);
}

void prepend_conj(std::vector<ConjugatedPair>& seq, const WordAtom& g) {
    for (auto& p : seq) {
        ExtWord c;
        c.append(g);
        c.append(p.conjugator);
        p.conjugator = std::move(c);
    }
}

std::vector<ConjugatedPair> z_pairs(const CtxPtr& ctx, const WeightIndex& I,
                                    const WeightIndex& J, const RingElem& xi,
                                    const RingElem& zeta) {
    if (zeta.is_zero()) return {plain(ExtLetter{I, J, xi})};

    const int m = ctx->m();
    const int p = height(I, J);
    const RingPtr& ring = xi.ring();

    if (p == m - 1) {
        // Base case: z is a single wedge-generator conjugate of t_{I,J}(xi).
        int i1 = set_minus(I, J).front();
        int j1 = set_minus(J, I).front();
        int s = weight_sign(I.without(i1), j1, i1);
        RingElem u = zeta;
        if (s < 0) u = -u;
        ConjugatedPair pair;
        pair.conjugator.append(WordAtom::wedge(j1, i1, u));
        pair.base = ExtLetter{I, J, xi};
        return {pair};
    }

    // General case via V = I with its last fresh index swapped for J's, and
    // W likewise: z = [ab, cd] = ^a[b,c] * ^{ac}[b,d] * [a,c] * ^c[a,d]
    // with a = t_{J,V}(zeta*xi), b = t_{I,V}(xi), c = t_{V,I}(-zeta),
    // d = t_{V,J}(1).
    std::vector<int> is = set_minus(I, J), js = set_minus(J, I);
    const int iq = is.back(), jq = js.back();
    WeightIndex V = I.replaced(iq, jq);
    WeightIndex W = J.replaced(jq, iq);
    const int s1 = weight_sign(I.without(iq), jq, iq);
    const int s2 = weight_sign(J.without(jq), jq, iq);

    ExtLetter a{J, V, zeta * xi};
    RingElem z2x = zeta * zeta * xi;      // zeta^2 * xi
    RingElem s12z2x = z2x;                // s1*s2 * zeta^2 * xi
    if (s1 * s2 < 0) s12z2x = -s12z2x;

    std::vector<ConjugatedPair> out;

    // ^a( [b,c] * ^c[b,d] ):
    //   [b,c]   = t_{I,V}(xi) * z_{I,V}(-xi,-zeta)     (height m-1)
    //   ^c[b,d] = t_{V,J}(-zeta*xi) * t_{I,J}(xi)
    std::vector<ConjugatedPair> first;
    first.push_back(plain(ExtLetter{I, V, xi}));
    for (auto& q : z_pairs(ctx, I, V, -xi, -zeta)) first.push_back(std::move(q));
    first.push_back(plain(ExtLetter{V, J, -(zeta * xi)}));
    first.push_back(plain(ExtLetter{I, J, xi}));
    wrap(first, a);
    for (auto& q : first) out.push_back(std::move(q));

    // [a,c] = t_{J,I}(-zeta^2*xi)
    out.push_back(plain(ExtLetter{J, I, -z2x}));

    // ^c[a,d] = t_{J,I}(zeta^2*xi) * t_{J,V}(zeta*xi)
    //         * t_{V,W}(-s1*s2*zeta^2*xi) * t_{J,W}(-s1*s2*zeta^2*xi)
    //         * ^g z_{J,V}(-zeta*xi, 1),  g = wedge t_{jq,iq}(-s1*zeta).
    out.push_back(plain(ExtLetter{J, I, z2x}));
    out.push_back(plain(a));
    out.push_back(plain(ExtLetter{V, W, -s12z2x}));
    out.push_back(plain(ExtLetter{J, W, -s12z2x}));
    RingElem garg = zeta;
    if (s1 > 0) garg = -garg;
    WordAtom g = WordAtom::wedge(jq, iq, garg);
    std::vector<ConjugatedPair> rec = z_pairs(ctx, J, V, -(zeta * xi),
                                              RingElem::one(ring));
    prepend_conj(rec, g);
    for (auto& q : rec) out.push_back(std::move(q));

    return out;
}

}  // namespace

Matrix relative_generator_matrix(const CtxPtr& ctx, const RingPtr& ring,
                                 const RelativeGenerator& z) {
    return evaluate_word(ctx, relative_generator_word(z), ring);
}

ExtWord relative_generator_word(const RelativeGenerator& z) {
    ExtWord w;
    w.append(WordAtom::ext(z.J, z.I, z.zeta));
    w.append(WordAtom::ext(z.I, z.J, z.xi));
    w.append(WordAtom::ext(z.J, z.I, -z.zeta));
    return w;
}

ExtWord ZFactorization::word() const {
    ExtWord w;
    for (const auto& p : pairs) {
        w.append(p.conjugator);
        w.append(WordAtom::ext(p.base.I, p.base.J, p.base.arg));
        w.append(p.conjugator.inverse());
    }
    return w;
}

ZFactorization relative_generator_factorization(const CtxPtr& ctx,
                                                const RelativeGenerator& z) {
    if (ctx->n() < 3 * ctx->m())
        throw std::invalid_argument(
            "relative generator factorization requires n >= 3m");
    if (z.I == z.J) throw std::invalid_argument("transvection requires I != J");
    ctx->rank(z.I);
    ctx->rank(z.J);
    require_same_ring(z.xi, z.zeta);

    ZFactorization f;
    f.ctx = ctx;
    f.pairs = z_pairs(ctx, z.I, z.J, z.xi, z.zeta);
    return f;
}

}  // namespace extpow
