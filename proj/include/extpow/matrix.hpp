#pragma once

#include <vector>

#include "extpow/ring.hpp"

namespace extpow {

/// Dense exact matrix over a Ring.  Indices in the public interface are
/// 1-based, matching the convention [n] = {1,...,n} used throughout.
class Matrix {
public:
    Matrix() = default;
    Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const RingPtr& ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElem& at(std::size_t i, std::size_t j) {  // 1-based
        return entries_[(i - 1) * cols_ + (j - 1)];
    }
    const RingElem& at(std::size_t i, std::size_t j) const {
        return entries_[(i - 1) * cols_ + (j - 1)];
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_identity() const;

    /// Right-multiplication by a transvection e + c*E_{a,b}: one column op.
    void apply_transvection_right(std::size_t a, std::size_t b,
                                  const RingElem& c);

    Matrix transpose() const;

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RingElem> entries_;
};

RingElem det(const Matrix& a);

/// Minor over the given 1-based row and column index sets (ascending order).
RingElem minor(const Matrix& a, const std::vector<int>& rows,
               const std::vector<int>& cols);

/// Exact inverse; throws when det is not a unit of the ring.
Matrix mat_inverse(const Matrix& a);

}  // namespace extpow
