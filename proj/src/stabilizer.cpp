#include "extpow/stabilizer.hpp"

#include <algorithm>
#include <array>

#include "extpow/linsolve.hpp"

namespace extpow {

namespace {

bool fast_field(const RingPtr& ring) {
    return ring->is_field() && ring->modulus() < (mpz_class(1) << 31);
}

long long to_ll(const RingElem& x, long long k) {
    return mod_reduce(x.scalar(), mpz_class(static_cast<long>(k))).get_si();
}

long long inv_mod(long long a, long long k) {
    mpz_class x, y;
    mpz_class g = ext_gcd(mpz_class(static_cast<long>(a)),
                          mpz_class(static_cast<long>(k)), x, y);
    if (g != 1) throw std::logic_error("non-unit pivot");
    return mod_reduce(x, mpz_class(static_cast<long>(k))).get_si();
}

}  // namespace

struct SpanSolver::Impl {
    CtxPtr ctx;
    RingPtr ring;
    bool alternating = false;
    int degree = 0;
    std::map<WeightMonomial, std::size_t> basis;  // generator support only

    bool fast = false;
    long long mod = 0;
    std::vector<std::vector<long long>> echelon;  // pivot-normalized rows
    std::vector<std::size_t> pivots;

    std::optional<SmithForm> snf;  // lift of [G | kI] (or G over Z)
    std::size_t rows = 0;

    bool vectorize(const WeightPoly& p, std::vector<RingElem>& out) const {
        out.assign(rows, RingElem::zero(ring));
        for (const auto& [mono, c] : p.terms) {
            auto it = basis.find(mono);
            if (it == basis.end()) return false;  // outside the span support
            out[it->second] = c;
        }
        return true;
    }
};

SpanSolver::SpanSolver(const QuadricSystem& sys)
    : impl_(std::make_shared<Impl>()) {
    Impl& im = *impl_;
    im.ctx = sys.ctx;
    im.ring = sys.ring;
    im.alternating = sys.alternating;
    im.degree = sys.degree;

    for (const auto& g : sys.generators)
        for (const auto& [mono, c] : g.terms)
            im.basis.emplace(mono, 0);
    std::size_t idx = 0;
    for (auto& [mono, pos] : im.basis) pos = idx++;
    im.rows = idx;

    if (fast_field(im.ring)) {
        im.fast = true;
        im.mod = im.ring->modulus().get_si();
        for (const auto& g : sys.generators) {
            std::vector<long long> v(im.rows, 0);
            for (const auto& [mono, c] : g.terms)
                v[im.basis.at(mono)] = to_ll(c, im.mod);
            // Reduce against the current echelon, then install.
            for (std::size_t r = 0; r < im.echelon.size(); ++r) {
                long long f = v[im.pivots[r]];
                if (f == 0) continue;
                for (std::size_t k = 0; k < im.rows; ++k)
                    v[k] = ((v[k] - f * im.echelon[r][k]) % im.mod + im.mod) %
                           im.mod;
            }
            std::size_t p = 0;
            while (p < im.rows && v[p] == 0) ++p;
            if (p == im.rows) continue;
            long long inv = inv_mod(v[p], im.mod);
            for (auto& x : v) x = (x * inv) % im.mod;
            im.echelon.push_back(std::move(v));
            im.pivots.push_back(p);
        }
        return;
    }

    // Generic route: Smith form of the integer lift, with k-syzygies for
    // modular rings.
    const bool modular = im.ring->is_modular();
    const std::size_t cols =
        sys.generators.size() + (modular ? im.rows : 0);
    ZMatrix lift(im.rows, std::vector<mpz_class>(cols, 0));
    for (std::size_t j = 0; j < sys.generators.size(); ++j)
        for (const auto& [mono, c] : sys.generators[j].terms)
            lift[im.basis.at(mono)][j] = c.scalar();
    if (modular)
        for (std::size_t r = 0; r < im.rows; ++r)
            lift[r][sys.generators.size() + r] = im.ring->modulus();
    im.snf = smith_form(std::move(lift));
}

bool SpanSolver::contains(const WeightPoly& p) const {
    const Impl& im = *impl_;
    if (p.alternating != im.alternating)
        throw std::invalid_argument("mixed polynomial flavors");
    if (!p.ring->same(*im.ring))
        throw std::invalid_argument("mixed ring specs");
    if (!p.is_zero() && p.degree() != im.degree)
        throw std::invalid_argument("inhomogeneous or wrong-degree query");
    if (p.is_zero()) return true;

    std::vector<RingElem> vec;
    if (!im.vectorize(p, vec)) return false;

    if (im.fast) {
        std::vector<long long> v(im.rows);
        for (std::size_t k = 0; k < im.rows; ++k)
            v[k] = to_ll(vec[k], im.mod);
        for (std::size_t r = 0; r < im.echelon.size(); ++r) {
            long long f = v[im.pivots[r]];
            if (f == 0) continue;
            for (std::size_t k = 0; k < im.rows; ++k)
                v[k] =
                    ((v[k] - f * im.echelon[r][k]) % im.mod + im.mod) % im.mod;
        }
        return std::all_of(v.begin(), v.end(),
                           [](long long x) { return x == 0; });
    }

    std::vector<mpz_class> b(im.rows);
    for (std::size_t k = 0; k < im.rows; ++k) b[k] = vec[k].scalar();
    return im.snf->solve(b).has_value();
}

bool span_membership(const WeightPoly& p, const QuadricSystem& sys) {
    return SpanSolver(sys).contains(p);
}

bool system_independent(const QuadricSystem& sys) {
    std::map<WeightMonomial, std::size_t> basis;
    for (const auto& g : sys.generators)
        for (const auto& [mono, c] : g.terms) basis.emplace(mono, 0);
    std::size_t idx = 0;
    for (auto& [mono, pos] : basis) pos = idx++;

    std::vector<std::vector<RingElem>> a(
        idx, std::vector<RingElem>(sys.generators.size(),
                                   RingElem::zero(sys.ring)));
    for (std::size_t j = 0; j < sys.generators.size(); ++j)
        for (const auto& [mono, c] : sys.generators[j].terms)
            a[basis.at(mono)][j] = c;
    return columns_independent(sys.ring, a);
}

StabilizerReport stabilizer_check(const WeightPoly& form, const Matrix& g) {
    const CtxPtr& ctx = form.ctx;
    if (ctx->n() == 2 * ctx->m() && ctx->m() >= 3)
        throw std::invalid_argument(
            "single form only certifies the orthogonal/symplectic group for "
            "n = 2m; use the Pluecker system");
    if (!det(g).is_unit())
        throw std::invalid_argument("non-invertible g");

    StabilizerReport rep;
    WeightPoly sub = substitute_linear(form, g);
    auto lead = form.terms.begin();
    auto lead_inv = lead->second.inverse();
    if (!lead_inv) throw std::logic_error("form without a unit coefficient");
    RingElem lambda = sub.coeff(lead->first) * (*lead_inv);
    if (lambda.is_zero() || !(sub == form.scaled(lambda)) ||
        !lambda.is_unit()) {
        rep.member = false;
        return rep;
    }
    rep.member = true;
    rep.multiplier = lambda;
    return rep;
}

StabilizerReport stabilizer_check(const QuadricSystem& sys, const Matrix& g) {
    if (!det(g).is_unit())
        throw std::invalid_argument("non-invertible g");
    StabilizerReport rep;
    SpanSolver solver(sys);
    Matrix gi = mat_inverse(g);
    const std::array<const Matrix*, 2> sides = {&g, &gi};
    for (const Matrix* side : sides) {
        for (std::size_t idx = 0; idx < sys.generators.size(); ++idx) {
            WeightPoly t = substitute_linear(sys.generators[idx], *side);
            if (!solver.contains(t)) {
                rep.member = false;
                rep.failing_generator = idx;
                return rep;
            }
        }
    }
    rep.member = true;
    return rep;
}

std::string canonical_system_name(int n, int m) {
    if (n % m == 0 && n != 2 * m) return "form";
    if (n == 2 * m) return "pluecker";
    return "partition+pluecker";
}

bool congruence_membership(const CtxPtr& ctx, const Matrix& g,
                           const Ideal& A) {
    const RingPtr& R = g.ring();
    if (R->kind() == RingKind::PolyRing || !A.ring->same(*R))
        throw std::invalid_argument("quotient not representable");
    if (!A.normal_form)
        throw std::invalid_argument("quotient not representable");

    mpz_class d = A.normal_form->scalar();
    if (d < 0) d = -d;
    if (d == 1) return true;  // trivial quotient

    RingPtr Q;
    if (d == 0) {
        Q = R;  // zero ideal: work over R itself
    } else if (mpz_probab_prime_p(d.get_mpz_t(), 30)) {
        Q = Ring::prime_field(d);
    } else {
        Q = Ring::mod_ring(d);
    }

    Matrix gq(Q, g.rows(), g.cols());
    for (std::size_t i = 1; i <= g.rows(); ++i)
        for (std::size_t j = 1; j <= g.cols(); ++j)
            gq.at(i, j) = g.at(i, j).map_to(Q);
    if (!det(gq).is_unit()) return false;

    const int n = ctx->n(), m = ctx->m();
    if (n % m == 0 && n != 2 * m)
        return stabilizer_check(build_form(ctx, Q), gq).member;
    if (n == 2 * m)
        return stabilizer_check(build_pluecker(ctx, Q, false), gq).member;
    return stabilizer_check(build_partition_ideal(ctx, Q), gq).member &&
           stabilizer_check(build_pluecker(ctx, Q, false), gq).member;
}

}  // namespace extpow
