#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extpow/group_word.hpp"
#include "extpow/stabilizer.hpp"

using namespace extpow;

namespace {
const RingPtr Z = Ring::integers();
const RingPtr F7 = Ring::prime_field(7);
const RingPtr Z9 = Ring::mod_ring(9);

WeightMonomial mono_of(const CtxPtr& ctx,
                       std::initializer_list<const char*> blocks) {
    WeightMonomial m(ctx->N(), 0);
    for (const char* b : blocks) ++m[ctx->rank(WeightIndex::parse(b)) - 1];
    return m;
}
}  // namespace

TEST_CASE("f_{4,2} is the classical three-term form") {
    CtxPtr ctx = ExteriorContext::make(4, 2);
    WeightPoly f = build_form(ctx, Z);
    CHECK_FALSE(f.alternating);
    CHECK(f.degree() == 2);
    CHECK(f.terms.size() == 3);
    CHECK(f.coeff(mono_of(ctx, {"1,2", "3,4"})).scalar() == 1);
    CHECK(f.coeff(mono_of(ctx, {"1,3", "2,4"})).scalar() == -1);
    CHECK(f.coeff(mono_of(ctx, {"1,4", "2,3"})).scalar() == 1);
    CHECK_THROWS_AS(build_form(ExteriorContext::make(5, 2), Z),
                    std::invalid_argument);
}

TEST_CASE("partition ideal counts and flavor") {
    QuadricSystem p52 = build_partition_ideal(ExteriorContext::make(5, 2), Z);
    CHECK(p52.generators.size() == 5);
    CHECK(p52.degree == 2);
    CHECK_FALSE(p52.alternating);
    for (const auto& g : p52.generators) CHECK(g.terms.size() == 3);

    QuadricSystem p73 =
        build_partition_ideal(ExteriorContext::make(7, 3), F7);
    CHECK(p73.generators.size() == 7);
    CHECK(p73.alternating);  // odd m: wedge flavor

    CHECK_THROWS_AS(build_partition_ideal(ExteriorContext::make(4, 2), Z),
                    std::invalid_argument);
}

TEST_CASE("pluecker systems") {
    CtxPtr c42 = ExteriorContext::make(4, 2);
    QuadricSystem plk = build_pluecker(c42, Z);
    REQUIRE(plk.generators.size() == 1);
    const WeightPoly& q = plk.generators[0];
    CHECK(q.coeff(mono_of(c42, {"1,2", "3,4"})).scalar() == 1);
    CHECK(q.coeff(mono_of(c42, {"1,3", "2,4"})).scalar() == -1);
    CHECK(q.coeff(mono_of(c42, {"1,4", "2,3"})).scalar() == 1);

    CHECK(build_pluecker(ExteriorContext::make(5, 2), Z).generators.size() ==
          5);
    CHECK(build_pluecker(ExteriorContext::make(6, 1), Z).generators.empty());
    CHECK_THROWS_AS(build_pluecker(ExteriorContext::make(2, 2), Z),
                    std::invalid_argument);

    QuadricSystem alt = build_pluecker(c42, F7, true);
    CHECK(alt.alternating);
    for (const auto& g : alt.generators) {
        for (const auto& [mono, c] : g.terms)
            for (auto e : mono) CHECK(e <= 1);
    }
}

TEST_CASE("substitution: identity, diagonal, permutation") {
    CtxPtr ctx = ExteriorContext::make(4, 2);
    WeightPoly f = build_form(ctx, F7);
    CHECK(substitute_linear(f, Matrix::identity(F7, 6)) == f);

    Matrix d(F7, 4, 4);
    long dv[4] = {2, 3, 4, 5};
    RingElem dd = RingElem::one(F7);
    for (int i = 0; i < 4; ++i) {
        d.at(i + 1, i + 1) = RingElem(F7, dv[i]);
        dd *= RingElem(F7, dv[i]);
    }
    CHECK(substitute_linear(f, exterior_power(ctx, d)) == f.scaled(dd));

    // A permutation of [4] relabels the variables up to signs; the form is
    // preserved up to the determinant of the permutation image.
    Matrix p(F7, 4, 4);
    p.at(1, 2) = RingElem::one(F7);
    p.at(2, 1) = RingElem::one(F7);
    p.at(3, 3) = RingElem::one(F7);
    p.at(4, 4) = RingElem::one(F7);
    Matrix wp = exterior_power(ctx, p);
    CHECK(substitute_linear(f, wp) == f.scaled(det(p)));

    CHECK_THROWS_AS(substitute_linear(f, Matrix::identity(F7, 5)),
                    std::invalid_argument);
}

TEST_CASE("span membership and independence") {
    CtxPtr ctx = ExteriorContext::make(4, 2);
    QuadricSystem plk = build_pluecker(ctx, F7);
    for (const auto& g : plk.generators) CHECK(span_membership(g, plk));
    CHECK(span_membership(WeightPoly::zero(ctx, F7, false), plk));

    WeightPoly sq = WeightPoly::zero(ctx, F7, false);
    sq.add_monomial({ctx->rank(WeightIndex::parse("1,2")) - 1,
                     ctx->rank(WeightIndex::parse("1,2")) - 1},
                    RingElem::one(F7));
    CHECK_FALSE(span_membership(sq, plk));
    CHECK_THROWS_AS(span_membership([&] {
                        WeightPoly cubic = WeightPoly::zero(ctx, F7, false);
                        cubic.add_monomial({0, 0, 0}, RingElem::one(F7));
                        return cubic;
                    }(),
                                    plk),
                    std::invalid_argument);

    CHECK(system_independent(build_partition_ideal(
        ExteriorContext::make(5, 2), F7)));
    CHECK(system_independent(build_partition_ideal(
        ExteriorContext::make(5, 2), Z9)));

    // Span solving over Z/9 via the integer lift.
    QuadricSystem plk9 = build_pluecker(ctx, Z9);
    WeightPoly tripled = plk9.generators[0].scaled(RingElem(Z9, 3L));
    CHECK(span_membership(tripled, plk9));
}

TEST_CASE("stabilizer single-form positive and negative cases") {
    CtxPtr ctx = ExteriorContext::make(4, 2);
    WeightPoly f = build_form(ctx, F7);

    Matrix h(F7, 4, 4);
    // An explicit invertible matrix.
    long hv[4][4] = {{1, 2, 0, 1},
                     {0, 1, 3, 0},
                     {2, 0, 1, 1},
                     {1, 1, 0, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h.at(i + 1, j + 1) = RingElem(F7, hv[i][j]);
    REQUIRE(det(h).is_unit());
    StabilizerReport pos = stabilizer_check(f, exterior_power(ctx, h));
    CHECK(pos.member);
    CHECK(*pos.multiplier == det(h));

    // Identity: multiplier 1.
    StabilizerReport id = stabilizer_check(f, Matrix::identity(F7, 6));
    CHECK(id.member);
    CHECK(id.multiplier->is_one());

    // A GL_6 transvection at weight positions is not in the image: the
    // substituted form picks up a stray monomial.
    Matrix g = Matrix::identity(F7, 6);
    g.at(ctx->rank(WeightIndex::parse("1,2")),
         ctx->rank(WeightIndex::parse("1,3"))) = RingElem::one(F7);
    StabilizerReport neg = stabilizer_check(f, g);
    CHECK_FALSE(neg.member);

    Matrix sing(F7, 6, 6);
    CHECK_THROWS_WITH_AS(stabilizer_check(f, sing), "non-invertible g",
                         std::invalid_argument);

    // n = 2m, m >= 3: the single form is refused.
    CtxPtr c63 = ExteriorContext::make(6, 3);
    CHECK_THROWS_AS(
        stabilizer_check(build_form(c63, F7), Matrix::identity(F7, 20)),
        std::invalid_argument);
}

TEST_CASE("system stabilizer reports the failing generator") {
    CtxPtr ctx = ExteriorContext::make(5, 2);
    QuadricSystem plk = build_pluecker(ctx, F7);
    Matrix g = Matrix::identity(F7, 10);
    g.at(1, 2) = RingElem::one(F7);
    StabilizerReport r = stabilizer_check(plk, g);
    CHECK_FALSE(r.member);
    CHECK(r.failing_generator.has_value());
}

TEST_CASE("congruence membership") {
    CtxPtr ctx = ExteriorContext::make(4, 2);

    // Unit ideal: trivially accepted.
    Ideal unit = ideal_generate(Z9, {RingElem(Z9, 1L)});
    CHECK(congruence_membership(ctx, Matrix::identity(Z9, 6), unit));

    // A wedge image with level-(3) noise reduces into the image mod 3.
    Ideal A = ideal_generate(Z9, {RingElem(Z9, 3L)});
    Matrix h(Z9, 4, 4);
    long hv[4][4] = {{1, 1, 0, 0},
                     {0, 1, 2, 0},
                     {1, 0, 1, 1},
                     {0, 2, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            h.at(i + 1, j + 1) = RingElem(Z9, hv[i][j]);
    REQUIRE(det(h).is_unit());
    Matrix g = exterior_power(ctx, h);
    Matrix noisy = g;
    noisy.at(2, 5) += RingElem(Z9, 3L);
    noisy.at(1, 1) += RingElem(Z9, 6L);
    CHECK(congruence_membership(ctx, noisy, A));

    Matrix pert = g;
    pert.at(2, 5) += RingElem(Z9, 1L);
    CHECK_FALSE(congruence_membership(ctx, pert, A));

    // Zero ideal over Z/9: the membership test runs over Z/9 itself.
    Ideal zero = ideal_generate(Z9, {});
    CHECK(congruence_membership(ctx, g, zero));

    // Over Z: reduce mod (3), accept level-(3) noise, reject unit noise.
    // The base matrix is a transvection product, so it is unimodular and
    // the zero-ideal case stays decidable over Z itself.
    {
        Ideal A3 = ideal_generate(Z, {RingElem(Z, 3L)});
        Matrix hz = Transvection(4, 1, 2, RingElem(Z, 2L)).to_matrix() *
                    Transvection(4, 3, 1, RingElem(Z, -1L)).to_matrix() *
                    Transvection(4, 2, 4, RingElem(Z, 5L)).to_matrix();
        Matrix gz = exterior_power(ctx, hz);
        Matrix noisy_z = gz;
        noisy_z.at(3, 4) += RingElem(Z, 3L);
        CHECK(congruence_membership(ctx, noisy_z, A3));
        Matrix pert_z = gz;
        pert_z.at(3, 4) += RingElem(Z, 1L);
        CHECK_FALSE(congruence_membership(ctx, pert_z, A3));
        // Zero ideal over Z: exact membership in the image over Z itself.
        Ideal zz = ideal_generate(Z, {});
        CHECK(congruence_membership(ctx, gz, zz));
        CHECK_FALSE(congruence_membership(ctx, pert_z, zz));
    }

    // Polynomial rings have no representable quotient.
    auto P = Ring::polynomial(Z, {"x"});
    Ideal pid = ideal_generate(P, {RingElem::variable(P, "x")});
    CHECK_THROWS_WITH_AS(
        congruence_membership(ctx, Matrix::identity(P, 6), pid),
        "quotient not representable", std::invalid_argument);

    CHECK(canonical_system_name(6, 2) == "form");
    CHECK(canonical_system_name(4, 2) == "pluecker");
    CHECK(canonical_system_name(5, 2) == "partition+pluecker");
}

TEST_CASE("gram matrix of the quadratic invariant") {
    CtxPtr ctx = ExteriorContext::make(4, 2);
    WeightPoly f = build_form(ctx, F7);
    Matrix B = gram_matrix(f);
    CHECK(det(B).is_unit());
    // f(x) = x^T B x: check on a couple of unit vectors via substitution of
    // the identity (structural sanity: B is symmetric with zero diagonal).
    for (std::size_t i = 1; i <= 6; ++i) {
        CHECK(B.at(i, i).is_zero());
        for (std::size_t j = 1; j <= 6; ++j) CHECK(B.at(i, j) == B.at(j, i));
    }
    WeightPoly fz = build_form(ctx, Z);
    CHECK_THROWS_AS(gram_matrix(fz), std::invalid_argument);  // 2 not a unit
}
