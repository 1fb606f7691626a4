#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "extpow/matrix.hpp"

namespace extpow {

/// Elementary transvection t_{i,j}(xi) = e + xi*e_{i,j} of degree n, i != j.
struct Transvection {
    std::size_t size = 0;
    int i = 0, j = 0;  // 1-based
    RingElem arg;

    Transvection() = default;
    Transvection(std::size_t n, int i_, int j_, RingElem xi);

    Matrix to_matrix() const;
    Transvection inverse() const { return Transvection(size, i, j, -arg); }
};

struct WordLetter {
    std::variant<Transvection, Matrix> gen;
    int exponent = 1;  // +1 or -1
};

/// A formal product of invertible letters with the usual combinators.
/// Commutators are left-normed: [x,y] = x y x^-1 y^-1; the left conjugate is
/// ^x y = x y x^-1.
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(RingPtr ring, std::size_t size)
        : ring_(std::move(ring)), size_(size) {}

    static GroupWord from(const Transvection& t, const RingPtr& ring);
    static GroupWord from(const Matrix& m);

    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    const std::vector<WordLetter>& letters() const { return letters_; }

    GroupWord& append(const GroupWord& other);
    GroupWord inverse() const;
    static GroupWord product(const GroupWord& a, const GroupWord& b);
    static GroupWord commutator(const GroupWord& a, const GroupWord& b);
    static GroupWord conjugate(const GroupWord& by, const GroupWord& of);

    Matrix evaluate() const;

private:
    RingPtr ring_;
    std::size_t size_ = 0;
    std::vector<WordLetter> letters_;
};

Matrix word_evaluate(const GroupWord& w);

enum class ChevalleyCase { Identity, Single, Irreducible };

struct ChevalleyResult {
    ChevalleyCase kind = ChevalleyCase::Identity;
    std::optional<Transvection> single;
    Matrix matrix;  // always set: the exact commutator
};

/// The three-case commutator formula for [t1, t2]:
///   e               if j != h and i != k,
///   t_{i,k}(xi*zeta)   if j == h and i != k,
///   t_{h,j}(-zeta*xi)  if j != h and i == k,
/// and the explicit matrix when both coincidences hold.
ChevalleyResult chevalley_commutator(const Transvection& t1,
                                     const Transvection& t2);

/// [x,y^-1,z^-1]^x * [z,x^-1,y^-1]^z * [y,z^-1,x^-1]^y == e.
bool hall_witt_check(const Matrix& x, const Matrix& y, const Matrix& z);

}  // namespace extpow
