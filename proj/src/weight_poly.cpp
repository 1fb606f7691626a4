#include "extpow/weight_poly.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace extpow {

WeightPoly WeightPoly::zero(CtxPtr ctx, RingPtr ring, bool alternating) {
    WeightPoly p;
    p.ctx = std::move(ctx);
    p.ring = std::move(ring);
    p.alternating = alternating;
    return p;
}

void WeightPoly::add_term(const WeightMonomial& mono, const RingElem& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(mono);
    if (it == terms.end()) {
        terms.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void WeightPoly::add_monomial(std::vector<std::size_t> vars,
                              const RingElem& coeff) {
    RingElem c = coeff;
    if (alternating) {
        // Sort with sign; a repeated variable kills the wedge monomial.
        for (std::size_t i = 0; i + 1 < vars.size(); ++i)
            for (std::size_t j = 0; j + 1 < vars.size() - i; ++j)
                if (vars[j] > vars[j + 1]) {
                    std::swap(vars[j], vars[j + 1]);
                    c = -c;
                }
        for (std::size_t i = 0; i + 1 < vars.size(); ++i)
            if (vars[i] == vars[i + 1]) return;
    }
    WeightMonomial mono(ctx->N(), 0);
    for (std::size_t v : vars) {
        if (v >= ctx->N()) throw std::invalid_argument("variable out of range");
        ++mono[v];
    }
    add_term(mono, c);
}

int WeightPoly::degree() const {
    int deg = -1;
    for (const auto& [mono, c] : terms) {
        int d = 0;
        for (auto e : mono) d += e;
        if (deg < 0) deg = d;
        if (d != deg)
            throw std::invalid_argument("polynomial is not homogeneous");
    }
    return deg < 0 ? 0 : deg;
}

RingElem WeightPoly::coeff(const WeightMonomial& mono) const {
    auto it = terms.find(mono);
    return it == terms.end() ? RingElem::zero(ring) : it->second;
}

WeightPoly WeightPoly::operator+(const WeightPoly& o) const {
    WeightPoly r = *this;
    for (const auto& [mono, c] : o.terms) r.add_term(mono, c);
    return r;
}

WeightPoly WeightPoly::operator-() const {
    WeightPoly r = zero(ctx, ring, alternating);
    for (const auto& [mono, c] : terms) r.terms.emplace(mono, -c);
    return r;
}

WeightPoly WeightPoly::scaled(const RingElem& c) const {
    WeightPoly r = zero(ctx, ring, alternating);
    for (const auto& [mono, cc] : terms) {
        RingElem v = cc * c;
        if (!v.is_zero()) r.terms.emplace(mono, v);
    }
    return r;
}

bool WeightPoly::operator==(const WeightPoly& o) const {
    return alternating == o.alternating && terms == o.terms;
}

std::string WeightPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        const char* sep = alternating ? "^" : "*";
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (!mono[v]) continue;
            os << sep << "x_{" << ctx->unrank(v + 1).str() << "}";
            if (mono[v] > 1) os << "^" << static_cast<int>(mono[v]);
        }
    }
    return os.str();
}

namespace {

// All unordered partitions of `remaining` (ascending) into m-blocks; blocks
// come out ordered by least element, which matches the lex rank order.
void enumerate_partitions(std::vector<int> remaining, int m,
                          std::vector<WeightIndex>& blocks,
                          const std::function<void(
                              const std::vector<WeightIndex>&)>& emit) {
    if (remaining.empty()) {
        emit(blocks);
        return;
    }
    int head = remaining.front();
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    for (const auto& others : subsets_of(rest, m - 1)) {
        WeightIndex block = others.with(head);
        std::vector<int> next;
        for (int v : rest)
            if (!block.contains(v)) next.push_back(v);
        blocks.push_back(block);
        enumerate_partitions(next, m, blocks, emit);
        blocks.pop_back();
    }
}

int concatenation_sign(const std::vector<WeightIndex>& blocks) {
    std::vector<int> seq;
    for (const auto& b : blocks)
        seq.insert(seq.end(), b.elems.begin(), b.elems.end());
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

WeightPoly form_on_subset(const CtxPtr& ctx, const RingPtr& ring,
                          const std::vector<int>& universe) {
    const int m = ctx->m();
    if (universe.size() % static_cast<std::size_t>(m) != 0)
        throw std::invalid_argument("m must divide the universe size");
    WeightPoly f = WeightPoly::zero(ctx, ring, m % 2 == 1);
    std::vector<WeightIndex> blocks;
    enumerate_partitions(universe, m, blocks,
                         [&](const std::vector<WeightIndex>& bs) {
                             std::vector<std::size_t> vars;
                             vars.reserve(bs.size());
                             for (const auto& b : bs)
                                 vars.push_back(ctx->rank(b) - 1);
                             RingElem c(ring,
                                        static_cast<long>(
                                            concatenation_sign(bs)));
                             f.add_monomial(std::move(vars), c);
                         });
    return f;
}

std::string canonical_key(const WeightPoly& p) {
    // Scale so the leading coefficient is 1; coefficients here are units.
    auto lead = p.terms.begin();
    auto inv = lead->second.inverse();
    WeightPoly q = inv ? p.scaled(*inv) : p;
    std::ostringstream os;
    for (const auto& [mono, c] : q.terms) {
        for (auto e : mono) os << static_cast<int>(e) << ",";
        os << ":" << c.to_string() << ";";
    }
    return os.str();
}

}  // namespace

WeightPoly build_form(const CtxPtr& ctx, const RingPtr& ring) {
    if (ctx->n() % ctx->m() != 0)
        throw std::invalid_argument("invariant form requires m | n");
    std::vector<int> universe;
    for (int v = 1; v <= ctx->n(); ++v) universe.push_back(v);
    return form_on_subset(ctx, ring, universe);
}

QuadricSystem build_partition_ideal(const CtxPtr& ctx, const RingPtr& ring) {
    const int n = ctx->n(), m = ctx->m();
    if (n % m == 0)
        throw std::invalid_argument(
            "m divides n: use the invariant form instead");
    const int l = n / m;
    std::vector<int> universe;
    for (int v = 1; v <= n; ++v) universe.push_back(v);

    QuadricSystem sys;
    sys.ctx = ctx;
    sys.ring = ring;
    sys.provenance = QuadricSystem::Provenance::PartitionIdeal;
    sys.degree = l;
    sys.alternating = (m % 2 == 1);
    for (const auto& T : subsets_of(universe, m * l))
        sys.generators.push_back(form_on_subset(ctx, ring, T.elems));
    return sys;
}

QuadricSystem build_pluecker(const CtxPtr& ctx, const RingPtr& ring,
                             bool alternating) {
    const int n = ctx->n(), m = ctx->m();
    if (m >= n)
        throw std::invalid_argument("Pluecker system requires m < n");

    QuadricSystem sys;
    sys.ctx = ctx;
    sys.ring = ring;
    sys.provenance = alternating ? QuadricSystem::Provenance::PlueckerAlt
                                 : QuadricSystem::Provenance::PlueckerSym;
    sys.degree = 2;
    sys.alternating = alternating;

    std::vector<int> universe;
    for (int v = 1; v <= n; ++v) universe.push_back(v);

    std::set<std::string> seen;
    for (const auto& S : subsets_of(universe, m - 1)) {
        for (const auto& T : subsets_of(universe, m + 1)) {
            WeightPoly q = WeightPoly::zero(ctx, ring, alternating);
            for (std::size_t pos = 0; pos < T.elems.size(); ++pos) {
                int t = T.elems[pos];
                if (S.contains(t)) continue;
                int sort_sign = 0;
                for (int s : S.elems)
                    if (s > t) ++sort_sign;
                long sgn = ((pos + static_cast<std::size_t>(sort_sign)) % 2 ==
                            0)
                               ? 1
                               : -1;
                std::vector<std::size_t> vars{ctx->rank(S.with(t)) - 1,
                                              ctx->rank(T.without(t)) - 1};
                q.add_monomial(std::move(vars), RingElem(ring, sgn));
            }
            if (q.is_zero()) continue;
            std::string key = canonical_key(q);
            if (seen.insert(key).second) sys.generators.push_back(q);
        }
    }
    return sys;
}

WeightPoly substitute_linear(const WeightPoly& p, const Matrix& g) {
    const CtxPtr& ctx = p.ctx;
    const std::size_t N = ctx->N();
    if (g.rows() != N || g.cols() != N)
        throw std::invalid_argument("substitution matrix size mismatch");
    if (!g.ring()->same(*p.ring))
        throw std::invalid_argument("mixed ring specs");

    WeightPoly out = WeightPoly::zero(ctx, p.ring, p.alternating);

    if (!p.alternating) {
        for (const auto& [mono, c] : p.terms) {
            // Product of the substituted linear forms, one per variable power.
            WeightPoly acc = WeightPoly::zero(ctx, p.ring, false);
            acc.terms.emplace(WeightMonomial(N, 0), c);
            for (std::size_t v = 0; v < mono.size(); ++v) {
                for (int e = 0; e < mono[v]; ++e) {
                    WeightPoly next = WeightPoly::zero(ctx, p.ring, false);
                    for (const auto& [am, ac] : acc.terms) {
                        for (std::size_t k = 1; k <= N; ++k) {
                            const RingElem& gk = g.at(v + 1, k);
                            if (gk.is_zero()) continue;
                            WeightMonomial nm = am;
                            ++nm[k - 1];
                            next.add_term(nm, ac * gk);
                        }
                    }
                    acc = std::move(next);
                }
            }
            for (const auto& [am, ac] : acc.terms) out.add_term(am, ac);
        }
        return out;
    }

    // Wedge monomials: x_{v1}^...^x_{vd} maps to the signed sum of d-minors.
    std::vector<int> all;
    for (std::size_t k = 1; k <= N; ++k) all.push_back(static_cast<int>(k));
    for (const auto& [mono, c] : p.terms) {
        std::vector<int> rows;
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] > 1)
                throw std::invalid_argument("wedge monomial with a square");
            if (mono[v]) rows.push_back(static_cast<int>(v + 1));
        }
        for (const auto& K :
             subsets_of(all, static_cast<int>(rows.size()))) {
            RingElem mv = minor(g, rows, K.elems);
            if (mv.is_zero()) continue;
            std::vector<std::size_t> vars;
            for (int k : K.elems)
                vars.push_back(static_cast<std::size_t>(k - 1));
            out.add_monomial(std::move(vars), c * mv);
        }
    }
    return out;
}

Matrix gram_matrix(const WeightPoly& f) {
    if (f.alternating)
        throw std::invalid_argument("Gram matrix of a wedge element");
    if (!f.ring->two_invertible())
        throw std::invalid_argument("2 not invertible in " +
                                    f.ring->describe());
    const std::size_t N = f.ctx->N();
    RingElem half = *RingElem(f.ring, 2L).inverse();
    Matrix B(f.ring, N, N);
    for (const auto& [mono, c] : f.terms) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < mono.size(); ++v)
            for (int e = 0; e < mono[v]; ++e) vars.push_back(v + 1);
        if (vars.size() != 2)
            throw std::invalid_argument("Gram matrix needs a quadratic form");
        if (vars[0] == vars[1]) {
            B.at(vars[0], vars[1]) += c;
        } else {
            B.at(vars[0], vars[1]) += c * half;
            B.at(vars[1], vars[0]) += c * half;
        }
    }
    return B;
}

}  // namespace extpow
