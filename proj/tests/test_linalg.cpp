#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extpow/group_word.hpp"

using namespace extpow;

namespace {
const RingPtr Z = Ring::integers();
const RingPtr F7 = Ring::prime_field(7);
const RingPtr P2 = Ring::polynomial(Ring::integers(), {"xi", "zeta"});
}  // namespace

TEST_CASE("determinants") {
    CHECK(det(Matrix::identity(Z, 4)).is_one());

    RingElem xi = RingElem::variable(P2, "xi");
    CHECK(det(Transvection(5, 1, 3, xi).to_matrix()).is_one());

    Matrix d(Z, 2, 2);
    d.at(1, 1) = RingElem(Z, 2L);
    d.at(2, 2) = RingElem(Z, 3L);
    CHECK(det(d).scalar() == 6);

    // Bareiss on a bigger integer matrix against the cofactor value.
    Matrix a(Z, 5, 5);
    long vals[5][5] = {{2, 1, 0, 3, 1},
                       {1, 4, 2, 0, 2},
                       {0, 2, 5, 1, 0},
                       {3, 0, 1, 2, 1},
                       {1, 2, 0, 1, 3}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            a.at(i + 1, j + 1) = RingElem(Z, vals[i][j]);
    CHECK(det(a).scalar() == -190);

    CHECK_THROWS_AS(det(Matrix(Z, 2, 3)), std::invalid_argument);
}

TEST_CASE("minor selects ascending rows and columns") {
    Matrix e = Matrix::identity(Z, 4);
    CHECK(minor(e, {1, 2}, {1, 2}).is_one());
    CHECK(minor(e, {1, 2}, {1, 3}).is_zero());
    CHECK_THROWS_AS(minor(e, {1, 5}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(minor(e, {1}, {1, 2}), std::invalid_argument);

    // Symbolic 2x2: the definition of the determinant.
    auto P = Ring::polynomial(Z, {"a11", "a12", "a21", "a22"});
    Matrix s(P, 2, 2);
    s.at(1, 1) = RingElem::variable(P, "a11");
    s.at(1, 2) = RingElem::variable(P, "a12");
    s.at(2, 1) = RingElem::variable(P, "a21");
    s.at(2, 2) = RingElem::variable(P, "a22");
    RingElem expect = RingElem::variable(P, "a11") *
                          RingElem::variable(P, "a22") -
                      RingElem::variable(P, "a12") *
                          RingElem::variable(P, "a21");
    CHECK(minor(s, {1, 2}, {1, 2}) == expect);
}

TEST_CASE("matrix inverse") {
    RingElem xi = RingElem::variable(P2, "xi");
    Transvection t(4, 1, 2, xi);
    CHECK(mat_inverse(t.to_matrix()) == t.inverse().to_matrix());
    CHECK(mat_inverse(Matrix::identity(Z, 3)) == Matrix::identity(Z, 3));

    Matrix bad(Z, 2, 2);
    bad.at(1, 1) = RingElem(Z, 2L);
    bad.at(2, 2) = RingElem(Z, 1L);
    CHECK_THROWS_WITH_AS(mat_inverse(bad), "not invertible over this ring",
                         std::invalid_argument);

    auto z9 = Ring::mod_ring(9);
    Matrix m(z9, 2, 2);
    m.at(1, 1) = RingElem(z9, 2L);
    m.at(1, 2) = RingElem(z9, 3L);
    m.at(2, 1) = RingElem(z9, 3L);
    m.at(2, 2) = RingElem(z9, 2L);  // det = 4 - 9 = -5 = 4, a unit mod 9
    CHECK((m * mat_inverse(m)).is_identity());
}

TEST_CASE("group words evaluate left to right") {
    RingElem xi = RingElem::variable(P2, "xi");
    RingElem zeta = RingElem::variable(P2, "zeta");

    GroupWord w1 = GroupWord::commutator(
        GroupWord::from(Transvection(4, 1, 2, xi), P2),
        GroupWord::from(Transvection(4, 2, 3, zeta), P2));
    CHECK(word_evaluate(w1) == Transvection(4, 1, 3, xi * zeta).to_matrix());

    GroupWord w2 = GroupWord::commutator(
        GroupWord::from(Transvection(4, 1, 2, xi), P2),
        GroupWord::from(Transvection(4, 3, 4, zeta), P2));
    CHECK(word_evaluate(w2).is_identity());

    GroupWord w3 = GroupWord::from(Transvection(4, 1, 2, xi), P2);
    w3.append(GroupWord::from(Transvection(4, 1, 2, zeta), P2));
    CHECK(word_evaluate(w3) ==
          Transvection(4, 1, 2, xi + zeta).to_matrix());

    // Conjugation: ^x y = x y x^-1.
    GroupWord conj = GroupWord::conjugate(
        GroupWord::from(Transvection(3, 1, 2, RingElem(F7, 2L)), F7),
        GroupWord::from(Transvection(3, 2, 3, RingElem(F7, 3L)), F7));
    Matrix x = Transvection(3, 1, 2, RingElem(F7, 2L)).to_matrix();
    Matrix y = Transvection(3, 2, 3, RingElem(F7, 3L)).to_matrix();
    CHECK(word_evaluate(conj) == x * y * mat_inverse(x));

    // Mixed matrix letters and size guards.
    GroupWord wm = GroupWord::from(Matrix::identity(F7, 3));
    CHECK_THROWS_AS(
        GroupWord::product(wm, GroupWord::from(Matrix::identity(F7, 4))),
        std::invalid_argument);
}

TEST_CASE("chevalley commutator three cases") {
    RingElem xi = RingElem::variable(P2, "xi");
    RingElem zeta = RingElem::variable(P2, "zeta");

    ChevalleyResult r1 = chevalley_commutator(Transvection(4, 1, 2, xi),
                                              Transvection(4, 2, 3, zeta));
    CHECK(r1.kind == ChevalleyCase::Single);
    CHECK(r1.single->i == 1);
    CHECK(r1.single->j == 3);
    CHECK(r1.single->arg == xi * zeta);
    CHECK(r1.matrix == r1.single->to_matrix());

    ChevalleyResult r2 = chevalley_commutator(Transvection(4, 1, 2, xi),
                                              Transvection(4, 3, 1, zeta));
    CHECK(r2.kind == ChevalleyCase::Single);
    CHECK(r2.single->i == 3);
    CHECK(r2.single->j == 2);
    CHECK(r2.single->arg == -(zeta * xi));

    ChevalleyResult r3 = chevalley_commutator(Transvection(4, 1, 2, xi),
                                              Transvection(4, 3, 4, zeta));
    CHECK(r3.kind == ChevalleyCase::Identity);
    CHECK(r3.matrix.is_identity());

    ChevalleyResult r4 = chevalley_commutator(Transvection(4, 1, 2, xi),
                                              Transvection(4, 2, 1, zeta));
    CHECK(r4.kind == ChevalleyCase::Irreducible);
    CHECK_FALSE(r4.matrix.is_identity());
}

TEST_CASE("hall-witt identity holds") {
    Matrix e = Matrix::identity(F7, 3);
    CHECK(hall_witt_check(e, e, e));
    Matrix x = Transvection(3, 1, 2, RingElem(F7, 3L)).to_matrix();
    Matrix y = Transvection(3, 2, 3, RingElem(F7, 5L)).to_matrix();
    Matrix z = Transvection(3, 3, 1, RingElem(F7, 6L)).to_matrix();
    CHECK(hall_witt_check(x, y, z));
}
