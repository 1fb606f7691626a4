#include "extpow/group_word.hpp"

namespace extpow {

Transvection::Transvection(std::size_t n, int i_, int j_, RingElem xi)
    : size(n), i(i_), j(j_), arg(std::move(xi)) {
    if (i == j) throw std::invalid_argument("transvection requires i != j");
    if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n))
        throw std::invalid_argument("transvection index out of range");
}

Matrix Transvection::to_matrix() const {
    Matrix m = Matrix::identity(arg.ring(), size);
    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = arg;
    return m;
}

GroupWord GroupWord::from(const Transvection& t, const RingPtr& ring) {
    GroupWord w(ring, t.size);
    w.letters_.push_back({t, 1});
    return w;
}

GroupWord GroupWord::from(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("word letters must be square");
    GroupWord w(m.ring(), m.rows());
    w.letters_.push_back({m, 1});
    return w;
}

GroupWord& GroupWord::append(const GroupWord& other) {
    if (size_ != other.size_ || !ring_->same(*other.ring_))
        throw std::invalid_argument("word size/ring mismatch");
    letters_.insert(letters_.end(), other.letters_.begin(),
                    other.letters_.end());
    return *this;
}

GroupWord GroupWord::inverse() const {
    GroupWord w(ring_, size_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->exponent});
    return w;
}

GroupWord GroupWord::product(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    w.append(b);
    return w;
}

GroupWord GroupWord::commutator(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    w.append(b);
    w.append(a.inverse());
    w.append(b.inverse());
    return w;
}

GroupWord GroupWord::conjugate(const GroupWord& by, const GroupWord& of) {
    GroupWord w = by;
    w.append(of);
    w.append(by.inverse());
    return w;
}

Matrix GroupWord::evaluate() const {
    Matrix acc = Matrix::identity(ring_, size_);
    for (const auto& letter : letters_) {
        if (std::holds_alternative<Transvection>(letter.gen)) {
            const auto& t = std::get<Transvection>(letter.gen);
            RingElem c = letter.exponent == 1 ? t.arg : -t.arg;
            acc.apply_transvection_right(static_cast<std::size_t>(t.i),
                                         static_cast<std::size_t>(t.j), c);
        } else {
            const auto& m = std::get<Matrix>(letter.gen);
            if (m.rows() != size_)
                throw std::invalid_argument("size mismatch among letters");
            acc = letter.exponent == 1 ? acc * m : acc * mat_inverse(m);
        }
    }
    return acc;
}

Matrix word_evaluate(const GroupWord& w) { return w.evaluate(); }

ChevalleyResult chevalley_commutator(const Transvection& t1,
                                     const Transvection& t2) {
    if (t1.size != t2.size)
        throw std::invalid_argument("size mismatch among letters");
    require_same_ring(t1.arg, t2.arg);
    const RingPtr& ring = t1.arg.ring();

    ChevalleyResult res;
    GroupWord w = GroupWord::commutator(GroupWord::from(t1, ring),
                                        GroupWord::from(t2, ring));
    res.matrix = w.evaluate();

    const bool meet = (t1.j == t2.i);
    const bool meet_rev = (t1.i == t2.j);
    if (!meet && !meet_rev) {
        res.kind = ChevalleyCase::Identity;
    } else if (meet && !meet_rev) {
        res.kind = ChevalleyCase::Single;
        res.single = Transvection(t1.size, t1.i, t2.j, t1.arg * t2.arg);
    } else if (!meet && meet_rev) {
        res.kind = ChevalleyCase::Single;
        res.single = Transvection(t1.size, t2.i, t1.j, -(t2.arg * t1.arg));
    } else {
        res.kind = ChevalleyCase::Irreducible;
    }
    return res;
}

bool hall_witt_check(const Matrix& x, const Matrix& y, const Matrix& z) {
    auto comm = [](const Matrix& a, const Matrix& b) {
        return a * b * mat_inverse(a) * mat_inverse(b);
    };
    auto conj_right = [](const Matrix& a, const Matrix& g) {
        return mat_inverse(g) * a * g;  // a^g
    };
    Matrix yi = mat_inverse(y), zi = mat_inverse(z), xi = mat_inverse(x);
    Matrix t1 = conj_right(comm(comm(x, yi), zi), x);
    Matrix t2 = conj_right(comm(comm(z, xi), yi), z);
    Matrix t3 = conj_right(comm(comm(y, zi), xi), y);
    return (t1 * t2 * t3).is_identity();
}

}  // namespace extpow
