#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extpow/level.hpp"
#include "extpow/zfactor.hpp"

using namespace extpow;

namespace {
const RingPtr Z = Ring::integers();
const RingPtr F7 = Ring::prime_field(7);
const RingPtr Z9 = Ring::mod_ring(9);
const RingPtr P3 =
    Ring::polynomial(Ring::integers(), {"xi", "zeta", "zeta1"});

RingElem xi() { return RingElem::variable(P3, "xi"); }
RingElem zeta() { return RingElem::variable(P3, "zeta"); }
RingElem zeta1() { return RingElem::variable(P3, "zeta1"); }

WeightIndex W(const char* s) { return WeightIndex::parse(s); }
}  // namespace

TEST_CASE("compute_level guards and values") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Ideal A = compute_level(
        c62, Z,
        {LevelGenerator{W("1,2"), W("3,4"), RingElem(Z, 4L)},
         LevelGenerator{W("1,3"), W("1,4"), RingElem(Z, 6L)}});
    CHECK(A.normal_form->scalar() == 2);

    CHECK_THROWS_WITH_AS(
        compute_level(ExteriorContext::make(5, 2), Z, {}),
        "level not single-ideal; net of ideals out of scope",
        std::invalid_argument);
    CHECK_THROWS_AS(
        compute_level(c62, Z,
                      {LevelGenerator{W("1,2"), W("1,2"), RingElem(Z, 1L)}}),
        std::invalid_argument);
}

TEST_CASE("equalize witness shapes") {
    CtxPtr c42 = ExteriorContext::make(4, 2);
    Derivation d = equalize_witness(c42, W("1,2"), W("3,4"), W("1,4"),
                                    W("2,3"), xi());
    CHECK(d.conclusion.I == W("1,4"));
    CHECK(d.conclusion.J == W("2,3"));
    CHECK(d.conclusion.arg == -xi());

    // The fixed-union move needs the doubling trick: the derivation carries
    // a product claim with argument -2*xi and a halving step.
    bool doubled = false, halved = false;
    for (const auto& s : d.steps) {
        if (s.kind == StepKind::Product && s.claim &&
            s.claim->arg == RingElem(P3, -2L) * xi())
            doubled = true;
        if (s.kind == StepKind::ScaleByHalf) halved = true;
    }
    CHECK(doubled);
    CHECK(halved);

    ValidationReport ok = validate_derivation(
        d, F7, {{"xi", RingElem(F7, 3L)}});
    CHECK(ok.ok);

    CHECK_THROWS_WITH_AS(
        equalize_witness(c42, W("1,2"), W("1,3"), W("1,2"), W("3,4"), xi()),
        "heights differ", std::invalid_argument);

    Derivation same = equalize_witness(c42, W("1,2"), W("3,4"), W("1,2"),
                                       W("3,4"), xi());
    CHECK(same.steps.size() == 1);
    CHECK(validate_derivation(same, F7, {{"xi", RingElem(F7, 2L)}}).ok);
}

TEST_CASE("equalize with a symbolic commutation parameter") {
    CtxPtr c42 = ExteriorContext::make(4, 2);
    Derivation d = equalize_witness(c42, W("1,2"), W("3,4"), W("1,4"),
                                    W("2,3"), xi(), zeta());
    // The swap concludes with the zeta^2-scaled argument.
    CHECK(d.conclusion.arg == -(xi() * zeta() * zeta()));
    CHECK(validate_derivation(d, F7,
                              {{"xi", RingElem(F7, 2L)},
                               {"zeta", RingElem(F7, 5L)}})
              .ok);
}

TEST_CASE("witnesses build directly over concrete rings") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Derivation d = raise_height_witness(c62, 0, RingElem(F7, 3L),
                                        RingElem(F7, 2L), RingElem(F7, 4L));
    CHECK(validate_derivation(d).ok);
    // -xi^2 * zeta * zeta1 = -(9*2*4) = -72 = -2 = 5 mod 7
    CHECK(d.conclusion.arg.scalar() == 5);

    Derivation e = equalize_witness(c62, W("1,2"), W("3,4"), W("3,6"),
                                    W("4,5"), RingElem(Z9, 6L));
    CHECK(validate_derivation(e).ok);
}

TEST_CASE("equalize via fresh indices avoids halving") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Derivation d = equalize_witness(c62, W("1,2"), W("3,4"), W("1,4"),
                                    W("2,3"), xi());
    for (const auto& s : d.steps) CHECK(s.kind != StepKind::ScaleByHalf);
    CHECK(validate_derivation(d, Z, {{"xi", RingElem(Z, 5L)}}).ok);
}

TEST_CASE("lower witness matches the worked single-commutation case") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Derivation d = lower_height_witness(c62, W("1,2"), W("2,3"), W("1,4"),
                                        W("2,3"), xi());
    CHECK(d.conclusion.I == W("1,4"));
    CHECK(d.conclusion.J == W("2,3"));
    CHECK(d.conclusion.arg == -xi());
    CHECK(d.steps.size() == 3);  // given, ext-gen, one commutation

    CHECK_THROWS_WITH_AS(
        lower_height_witness(c62, W("1,2"), W("3,4"), W("1,2"), W("1,3"),
                             xi()),
        "heights not in descending relation", std::invalid_argument);
}

TEST_CASE("raise witness guards") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    CHECK_THROWS_AS(raise_height_witness(c62, 1, xi(), zeta(), zeta1()),
                    std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        raise_height_witness(ExteriorContext::make(5, 2), 0, xi(), zeta(),
                             zeta1()),
        "constraint n >= 3m-2k violated", std::invalid_argument);

    Derivation d = raise_height_witness(c62, 0, xi(), zeta(), zeta1());
    CHECK(d.conclusion.I == W("4,5"));
    CHECK(d.conclusion.J == W("3,4"));
    CHECK(d.conclusion.arg == -(xi() * xi() * zeta() * zeta1()));
    CHECK(validate_derivation(d, Z9,
                              {{"xi", RingElem(Z9, 4L)},
                               {"zeta", RingElem(Z9, 2L)},
                               {"zeta1", RingElem(Z9, 7L)}})
              .ok);
}

TEST_CASE("validation diagnostics") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Derivation d = lower_height_witness(c62, W("1,2"), W("2,3"), W("1,4"),
                                        W("2,3"), xi());
    Derivation bad = d.map_to(F7, {{"xi", RingElem(F7, 3L)}});
    // Corrupt the commutation parameter.
    for (auto& s : bad.steps)
        if (s.kind == StepKind::ExtGen)
            s.gen_arg += RingElem::one(F7);
    ValidationReport r = validate_derivation(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_step >= 0);

    // Halving over Z is refused.
    CtxPtr c42 = ExteriorContext::make(4, 2);
    Derivation h = equalize_witness(c42, W("1,2"), W("3,4"), W("1,4"),
                                    W("2,3"), xi());
    ValidationReport rz =
        validate_derivation(h, Z, {{"xi", RingElem(Z, 1L)}});
    CHECK_FALSE(rz.ok);
    CHECK(rz.message.find("2 not invertible") != std::string::npos);
}

TEST_CASE("derivation transcripts stay readable") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    Derivation d = lower_height_witness(c62, W("1,2"), W("2,3"), W("1,4"),
                                        W("2,3"), xi());
    std::string t = d.transcript();
    CHECK(t.find("given") != std::string::npos);
    CHECK(t.find("commute") != std::string::npos);
    CHECK(t.find("conclusion: t_{1,4|2,3}(-xi) in H") != std::string::npos);
}

TEST_CASE("z factorization round trip and structure") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    RingElem x = RingElem::variable(
        Ring::polynomial(Ring::integers(), {"xi", "zeta"}), "xi");
    RingElem z = RingElem::variable(x.ring(), "zeta");

    // Height-1 base case: single wedge-conjugated letter.
    RelativeGenerator zg{W("1,2"), W("1,3"), x, z};
    ZFactorization f = relative_generator_factorization(c62, zg);
    REQUIRE(f.pairs.size() == 1);
    CHECK(f.pairs[0].conjugator.atoms.size() == 1);
    CHECK(f.pairs[0].conjugator.atoms[0].kind == WordAtom::Kind::Wedge);
    CHECK(f.pairs[0].base.arg == x);
    CHECK(words_equal(c62, f.word(), relative_generator_word(zg), x.ring()));

    // zeta = 0 collapses to the bare transvection.
    RelativeGenerator z0{W("1,2"), W("3,4"), x, RingElem::zero(x.ring())};
    ZFactorization f0 = relative_generator_factorization(c62, z0);
    REQUIRE(f0.pairs.size() == 1);
    CHECK(f0.pairs[0].conjugator.atoms.empty());

    CHECK_THROWS_AS(relative_generator_factorization(
                        ExteriorContext::make(7, 3),
                        RelativeGenerator{W("1,2,3"), W("1,4,5"), x, z}),
                    std::invalid_argument);
}

TEST_CASE("perfectness witnesses") {
    CtxPtr c62 = ExteriorContext::make(6, 2);
    RingElem x(Z9, 3L);

    // Height 1 (q = 1) needs a fresh auxiliary index.
    ExtLetter t1{W("1,2"), W("1,3"), x};
    PerfectnessWitness w1 = perfectness_witness(c62, t1);
    CHECK(words_equal(c62, w1.word(), ExtWord::single(t1), Z9));

    // Height 0 (q = 2) stays inside I and J.
    ExtLetter t0{W("1,2"), W("3,4"), x};
    PerfectnessWitness w0 = perfectness_witness(c62, t0);
    CHECK(w0.x.I == W("1,2"));
    CHECK(w0.x.J == W("2,3"));
    CHECK(words_equal(c62, w0.word(), ExtWord::single(t0), Z9));

    // No room for the fresh index at (3,2), height 1.
    CtxPtr c32 = ExteriorContext::make(3, 2);
    CHECK_THROWS_WITH_AS(
        perfectness_witness(c32, ExtLetter{W("1,2"), W("1,3"),
                                           RingElem(Z9, 3L)}),
        "no valid auxiliary index", std::invalid_argument);

    PerfectnessWitness wg = perfectness_witness(c62, 1, 2, RingElem(Z9, 5L));
    ExtWord target;
    target.append(WordAtom::wedge(1, 2, RingElem(Z9, 5L)));
    CHECK(words_equal(c62, wg.word(), target, Z9));
}
