#include "extpow/exterior.hpp"

#include <algorithm>
#include <sstream>

namespace extpow {

WeightIndex::WeightIndex(std::vector<int> e) : elems(std::move(e)) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1)
            throw std::invalid_argument("weight index entries are 1-based");
        if (i > 0 && elems[i] <= elems[i - 1])
            throw std::invalid_argument(
                "weight index must be strictly ascending");
    }
}

WeightIndex WeightIndex::parse(const std::string& csv) {
    std::vector<int> e;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        e.push_back(std::stoi(tok));
    }
    std::sort(e.begin(), e.end());
    return WeightIndex(std::move(e));
}

std::string WeightIndex::str() const {
    std::string s;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems[i]);
    }
    return s;
}

bool WeightIndex::contains(int v) const {
    return std::binary_search(elems.begin(), elems.end(), v);
}

WeightIndex WeightIndex::replaced(int out, int in) const {
    return without(out).with(in);
}

WeightIndex WeightIndex::with(int v) const {
    if (contains(v)) throw std::invalid_argument("index already present");
    std::vector<int> e = elems;
    e.insert(std::upper_bound(e.begin(), e.end(), v), v);
    WeightIndex w;
    w.elems = std::move(e);
    return w;
}

WeightIndex WeightIndex::without(int v) const {
    if (!contains(v)) throw std::invalid_argument("index not present");
    std::vector<int> e;
    e.reserve(elems.size() - 1);
    for (int x : elems)
        if (x != v) e.push_back(x);
    WeightIndex w;
    w.elems = std::move(e);
    return w;
}

int intersection_size(const WeightIndex& a, const WeightIndex& b) {
    int c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.elems.size() && j < b.elems.size()) {
        if (a.elems[i] == b.elems[j]) {
            ++c;
            ++i;
            ++j;
        } else if (a.elems[i] < b.elems[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return c;
}

std::vector<WeightIndex> subsets_of(const std::vector<int>& universe, int m) {
    std::vector<WeightIndex> out;
    if (m < 0 || m > static_cast<int>(universe.size())) return out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int u = static_cast<int>(universe.size());
    while (true) {
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            e[static_cast<std::size_t>(i)] =
                universe[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        out.push_back(WeightIndex(std::move(e)));
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == u - m + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            pick[static_cast<std::size_t>(j)] =
                pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

ExteriorContext::ExteriorContext(int n, int m) : n_(n), m_(m) {
    if (m < 1 || n < m)
        throw std::invalid_argument("exterior context requires 1 <= m <= n");
    std::vector<int> universe(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) universe[static_cast<std::size_t>(i)] = i + 1;
    table_ = subsets_of(universe, m);
}

CtxPtr ExteriorContext::make(int n, int m) {
    return std::make_shared<ExteriorContext>(n, m);
}

std::size_t ExteriorContext::rank(const WeightIndex& w) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), w);
    if (it == table_.end() || !(*it == w))
        throw std::invalid_argument("weight index outside this context");
    return static_cast<std::size_t>(it - table_.begin()) + 1;
}

int weight_sign(const WeightIndex& L, int i, int j) {
    if (L.contains(i) || L.contains(j) || i == j)
        throw std::invalid_argument("weight_sign requires i, j fresh");
    int inv = 0;
    for (int l : L.elems) {
        if (l > i) ++inv;
        if (l > j) ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

Matrix exterior_power(const CtxPtr& ctx, const Matrix& a) {
    if (a.rows() != static_cast<std::size_t>(ctx->n()) ||
        a.cols() != static_cast<std::size_t>(ctx->n()))
        throw std::invalid_argument("matrix size does not match context");
    const std::size_t N = ctx->N();
    Matrix out(a.ring(), N, N);
    for (std::size_t ri = 1; ri <= N; ++ri)
        for (std::size_t cj = 1; cj <= N; ++cj)
            out.at(ri, cj) =
                minor(a, ctx->unrank(ri).elems, ctx->unrank(cj).elems);
    return out;
}

WordAtom WordAtom::ext(WeightIndex I, WeightIndex J, RingElem arg) {
    if (I == J) throw std::invalid_argument("transvection requires I != J");
    WordAtom a;
    a.kind = Kind::Ext;
    a.I = std::move(I);
    a.J = std::move(J);
    a.arg = std::move(arg);
    return a;
}

WordAtom WordAtom::wedge(int i, int j, RingElem arg) {
    if (i == j) throw std::invalid_argument("transvection requires i != j");
    WordAtom a;
    a.kind = Kind::Wedge;
    a.i = i;
    a.j = j;
    a.arg = std::move(arg);
    return a;
}

WordAtom WordAtom::inverse() const {
    WordAtom a = *this;
    a.arg = -a.arg;
    return a;
}

ExtWord ExtWord::inverse() const {
    ExtWord w;
    w.atoms.reserve(atoms.size());
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
        w.atoms.push_back(it->inverse());
    return w;
}

ExtWord ExtWord::commutator(const ExtWord& a, const ExtWord& b) {
    ExtWord w = a;
    w.append(b).append(a.inverse()).append(b.inverse());
    return w;
}

ExtWord ExtWord::conjugate(const ExtWord& by, const ExtWord& of) {
    ExtWord w = by;
    w.append(of).append(by.inverse());
    return w;
}

ExtWord ExtWord::single(const ExtLetter& l) {
    ExtWord w;
    w.append(WordAtom::ext(l.I, l.J, l.arg));
    return w;
}

ExtWord transvection_decomposition(const CtxPtr& ctx, int i, int j,
                                   const RingElem& xi) {
    if (i == j) throw std::invalid_argument("transvection requires i != j");
    if (i < 1 || j < 1 || i > ctx->n() || j > ctx->n())
        throw std::invalid_argument("transvection index out of range");
    std::vector<int> universe;
    for (int v = 1; v <= ctx->n(); ++v)
        if (v != i && v != j) universe.push_back(v);
    ExtWord w;
    for (const auto& L : subsets_of(universe, ctx->m() - 1)) {
        RingElem arg = xi;
        if (weight_sign(L, i, j) < 0) arg = -arg;
        w.append(WordAtom::ext(L.with(i), L.with(j), std::move(arg)));
    }
    return w;
}

Matrix ext_letter_matrix(const CtxPtr& ctx, const RingPtr& ring,
                         const ExtLetter& l) {
    Matrix m = Matrix::identity(ring, ctx->N());
    m.at(ctx->rank(l.I), ctx->rank(l.J)) = l.arg;
    return m;
}

namespace {

// Dense modular evaluation backend; keeps the hot word/validation paths in
// machine integers.
struct FastMat {
    long long k = 0;
    std::size_t N = 0;
    std::vector<long long> e;

    static FastMat identity(std::size_t N, long long k) {
        FastMat m;
        m.k = k;
        m.N = N;
        m.e.assign(N * N, 0);
        for (std::size_t i = 0; i < N; ++i) m.e[i * N + i] = 1 % k;
        return m;
    }
    void colop(std::size_t a, std::size_t b, long long c) {  // 0-based
        if (c == 0) return;
        for (std::size_t r = 0; r < N; ++r) {
            long long v = e[r * N + a];
            if (v == 0) continue;
            e[r * N + b] = (e[r * N + b] + v * c) % k;
        }
    }
};

bool fast_eligible(const RingPtr& ring) {
    return ring->is_modular() && ring->modulus() > 1 &&
           ring->modulus() < (mpz_class(1) << 31);
}

long long to_fast(const RingElem& x, long long k) {
    mpz_class v = mod_reduce(x.scalar(), mpz_class(static_cast<long>(k)));
    return v.get_si();
}

void apply_atom_fast(const CtxPtr& ctx, FastMat& acc, const WordAtom& atom) {
    if (atom.kind == WordAtom::Kind::Ext) {
        acc.colop(ctx->rank(atom.I) - 1, ctx->rank(atom.J) - 1,
                  to_fast(atom.arg, acc.k));
        return;
    }
    std::vector<int> universe;
    for (int v = 1; v <= ctx->n(); ++v)
        if (v != atom.i && v != atom.j) universe.push_back(v);
    long long base = to_fast(atom.arg, acc.k);
    for (const auto& L : subsets_of(universe, ctx->m() - 1)) {
        long long c = weight_sign(L, atom.i, atom.j) < 0
                          ? (acc.k - base) % acc.k
                          : base;
        acc.colop(ctx->rank(L.with(atom.i)) - 1,
                  ctx->rank(L.with(atom.j)) - 1, c);
    }
}

FastMat evaluate_fast(const CtxPtr& ctx, const ExtWord& w,
                      const RingPtr& ring) {
    FastMat acc = FastMat::identity(ctx->N(), ring->modulus().get_si());
    for (const auto& atom : w.atoms) apply_atom_fast(ctx, acc, atom);
    return acc;
}

Matrix evaluate_generic(const CtxPtr& ctx, const ExtWord& w,
                        const RingPtr& ring) {
    Matrix acc = Matrix::identity(ring, ctx->N());
    for (const auto& atom : w.atoms) {
        if (atom.kind == WordAtom::Kind::Ext) {
            acc.apply_transvection_right(ctx->rank(atom.I), ctx->rank(atom.J),
                                         atom.arg);
        } else {
            ExtWord dec =
                transvection_decomposition(ctx, atom.i, atom.j, atom.arg);
            for (const auto& d : dec.atoms)
                acc.apply_transvection_right(ctx->rank(d.I), ctx->rank(d.J),
                                             d.arg);
        }
    }
    return acc;
}

}  // namespace

Matrix evaluate_word(const CtxPtr& ctx, const ExtWord& w,
                     const RingPtr& ring) {
    return evaluate_generic(ctx, w, ring);
}

bool word_is_identity(const CtxPtr& ctx, const ExtWord& w,
                      const RingPtr& ring) {
    if (fast_eligible(ring)) {
        FastMat m = evaluate_fast(ctx, w, ring);
        FastMat id = FastMat::identity(m.N, m.k);
        return m.e == id.e;
    }
    return evaluate_generic(ctx, w, ring).is_identity();
}

bool words_equal(const CtxPtr& ctx, const ExtWord& a, const ExtWord& b,
                 const RingPtr& ring) {
    if (fast_eligible(ring))
        return evaluate_fast(ctx, a, ring).e == evaluate_fast(ctx, b, ring).e;
    return evaluate_generic(ctx, a, ring) == evaluate_generic(ctx, b, ring);
}

std::optional<ExtLetter> word_single_transvection(const CtxPtr& ctx,
                                                  const ExtWord& w,
                                                  const RingPtr& ring) {
    const std::size_t N = ctx->N();
    if (fast_eligible(ring)) {
        FastMat m = evaluate_fast(ctx, w, ring);
        long long off_r = -1, off_c = -1, off_v = 0;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) {
                long long v = m.e[r * N + c];
                if (r == c) {
                    if (v != 1 % m.k) return std::nullopt;
                } else if (v != 0) {
                    if (off_r >= 0) return std::nullopt;
                    off_r = static_cast<long long>(r);
                    off_c = static_cast<long long>(c);
                    off_v = v;
                }
            }
        if (off_r < 0) return std::nullopt;
        return ExtLetter{ctx->unrank(static_cast<std::size_t>(off_r) + 1),
                         ctx->unrank(static_cast<std::size_t>(off_c) + 1),
                         RingElem(ring, mpz_class(static_cast<long>(off_v)))};
    }
    Matrix m = evaluate_generic(ctx, w, ring);
    std::optional<ExtLetter> found;
    for (std::size_t r = 1; r <= N; ++r)
        for (std::size_t c = 1; c <= N; ++c) {
            const RingElem& v = m.at(r, c);
            if (r == c) {
                if (!v.is_one()) return std::nullopt;
            } else if (!v.is_zero()) {
                if (found) return std::nullopt;
                found = ExtLetter{ctx->unrank(r), ctx->unrank(c), v};
            }
        }
    return found;
}

CommResult classify_commutator(const CtxPtr& ctx, const ExtLetter& t, int i,
                               int j, const RingElem& zeta) {
    if (i == j) throw std::invalid_argument("transvection requires i != j");
    if (i < 1 || j < 1 || i > ctx->n() || j > ctx->n())
        throw std::invalid_argument("transvection index out of range");
    if (t.I == t.J) throw std::invalid_argument("transvection requires I != J");
    require_same_ring(t.arg, zeta);

    // [t_{I,J}(xi), wedge^m t_{i,j}(zeta)]: the wedge factor t_{L+i,L+j}
    // interacts only through L = I \ j (needs i outside I, or no such L
    // exists) or L = J \ i (needs j outside J).
    const bool hit_source = t.I.contains(j) && !t.I.contains(i);
    const bool hit_target = t.J.contains(i) && !t.J.contains(j);

    CommResult res;
    if (!hit_source && !hit_target) {
        res.kind = CommCase::Identity;
        return res;
    }

    const RingElem xi = t.arg;
    if (hit_source && hit_target && t.I.without(j) == t.J.without(i)) {
        // Degenerate pair: the commutator [t_{I,J}(xi), t_{J,I}(c)] has no
        // transvection normal form; return it literally.
        res.kind = CommCase::Irreducible;
        RingElem c = zeta;
        if (weight_sign(t.I.without(j), i, j) < 0) c = -c;
        res.word = ExtWord::commutator(
            ExtWord::single(t), ExtWord::single(ExtLetter{t.J, t.I, c}));
        return res;
    }

    if (hit_source && !hit_target) {
        WeightIndex In = t.I.replaced(j, i);
        RingElem c1 = zeta;
        if (weight_sign(t.I.without(j), i, j) < 0) c1 = -c1;
        res.kind = CommCase::Single;
        res.factors.push_back(ExtLetter{In, t.J, -(c1 * xi)});
    } else if (!hit_source && hit_target) {
        WeightIndex Jn = t.J.replaced(i, j);
        RingElem c2 = zeta;
        if (weight_sign(t.J.without(i), i, j) < 0) c2 = -c2;
        res.kind = CommCase::Single;
        res.factors.push_back(ExtLetter{t.I, Jn, c2 * xi});
    } else {
        WeightIndex In = t.I.replaced(j, i);
        WeightIndex Jn = t.J.replaced(i, j);
        RingElem c1 = zeta, c2 = zeta;
        if (weight_sign(t.I.without(j), i, j) < 0) c1 = -c1;
        if (weight_sign(t.J.without(i), i, j) < 0) c2 = -c2;
        res.kind = CommCase::Triple;
        res.factors.push_back(ExtLetter{In, t.J, -(c1 * xi)});
        res.factors.push_back(ExtLetter{t.I, Jn, c2 * xi});
        res.factors.push_back(ExtLetter{In, Jn, c1 * c2 * xi});
    }
    for (const auto& f : res.factors) res.word.append(ExtWord::single(f));
    return res;
}

}  // namespace extpow
