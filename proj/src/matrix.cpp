#include "extpow/matrix.hpp"

#include <algorithm>

namespace extpow {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, RingElem::zero(ring_)) {}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = RingElem::one(ring);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !ring_->same(*o.ring_))
        throw std::invalid_argument("matrix product shape/ring mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t k = 1; k <= cols_; ++k) {
            const RingElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 1; j <= o.cols_; ++j) {
                const RingElem& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !ring_->same(*o.ring_))
        throw std::invalid_argument("matrix sum shape/ring mismatch");
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_->same(*o.ring_) &&
           entries_ == o.entries_;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j) {
            const RingElem& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

void Matrix::apply_transvection_right(std::size_t a, std::size_t b,
                                      const RingElem& c) {
    // (M * t_{a,b}(c)) differs from M in column b only: col_b += col_a * c.
    if (c.is_zero()) return;
    for (std::size_t i = 1; i <= rows_; ++i) {
        const RingElem& via = at(i, a);
        if (!via.is_zero()) at(i, b) += via * c;
    }
}

Matrix Matrix::transpose() const {
    Matrix r(ring_, cols_, rows_);
    for (std::size_t i = 1; i <= rows_; ++i)
        for (std::size_t j = 1; j <= cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Laplace expansion along the sparsest row; fine for the small symbolic
// matrices this path serves.
RingElem det_cofactor(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return RingElem::one(a.ring());
    if (n == 1) return a.at(1, 1);
    if (n == 2)
        return a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1);

    std::size_t best_row = 1, best_nz = n + 1;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t nz = 0;
        for (std::size_t j = 1; j <= n; ++j)
            if (!a.at(i, j).is_zero()) ++nz;
        if (nz < best_nz) {
            best_nz = nz;
            best_row = i;
        }
    }

    RingElem acc = RingElem::zero(a.ring());
    for (std::size_t j = 1; j <= n; ++j) {
        const RingElem& piv = a.at(best_row, j);
        if (piv.is_zero()) continue;
        Matrix sub(a.ring(), n - 1, n - 1);
        std::size_t si = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == best_row) continue;
            std::size_t sj = 1;
            for (std::size_t jj = 1; jj <= n; ++jj) {
                if (jj == j) continue;
                sub.at(si, sj) = a.at(i, jj);
                ++sj;
            }
            ++si;
        }
        RingElem term = piv * det_cofactor(sub);
        if ((best_row + j) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

mpz_class det_bareiss_z(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

RingElem det_field(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<RingElem>> m(n, std::vector<RingElem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i + 1, j + 1);
    RingElem d = RingElem::one(a.ring());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return RingElem::zero(a.ring());
        if (p != k) {
            std::swap(m[p], m[k]);
            d = -d;
        }
        d *= m[k][k];
        RingElem inv = *m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            RingElem f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

}  // namespace

RingElem det(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const Ring& r = *a.ring();

    if (n <= 4 || r.kind() == RingKind::PolyRing) return det_cofactor(a);
    if (r.is_field()) return det_field(a);

    // Z and Z/k: fraction-free Bareiss on the integer lift.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a.at(i + 1, j + 1).scalar();
    return RingElem(a.ring(), det_bareiss_z(std::move(m)));
}

RingElem minor(const Matrix& a, const std::vector<int>& rows,
               const std::vector<int>& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs |rows| == |cols|");
    Matrix sub(a.ring(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int ri = rows[i], cj = cols[j];
            if (ri < 1 || ri > static_cast<int>(a.rows()) || cj < 1 ||
                cj > static_cast<int>(a.cols()))
                throw std::invalid_argument("minor index out of range");
            sub.at(i + 1, j + 1) = a.at(static_cast<std::size_t>(ri),
                                        static_cast<std::size_t>(cj));
        }
    return det(sub);
}

Matrix mat_inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const RingPtr& ring = a.ring();

    if (ring->is_field()) {
        Matrix m = a;
        Matrix inv = Matrix::identity(ring, n);
        for (std::size_t k = 1; k <= n; ++k) {
            std::size_t p = k;
            while (p <= n && m.at(p, k).is_zero()) ++p;
            if (p > n)
                throw std::invalid_argument("not invertible over this ring");
            if (p != k)
                for (std::size_t j = 1; j <= n; ++j) {
                    std::swap(m.at(p, j), m.at(k, j));
                    std::swap(inv.at(p, j), inv.at(k, j));
                }
            RingElem piv_inv = *m.at(k, k).inverse();
            for (std::size_t j = 1; j <= n; ++j) {
                m.at(k, j) *= piv_inv;
                inv.at(k, j) *= piv_inv;
            }
            for (std::size_t i = 1; i <= n; ++i) {
                if (i == k || m.at(i, k).is_zero()) continue;
                RingElem f = m.at(i, k);
                for (std::size_t j = 1; j <= n; ++j) {
                    m.at(i, j) -= f * m.at(k, j);
                    inv.at(i, j) -= f * inv.at(k, j);
                }
            }
        }
        return inv;
    }

    RingElem d = det(a);
    auto d_inv = d.inverse();
    if (!d_inv) throw std::invalid_argument("not invertible over this ring");

    // Adjugate route: exact over any commutative ring.
    Matrix inv(ring, n, n);
    std::vector<int> all_rows, all_cols;
    for (std::size_t i = 1; i <= n; ++i) {
        Matrix sub(ring, n - 1, n - 1);
        for (std::size_t j = 1; j <= n; ++j) {
            std::size_t si = 1;
            for (std::size_t ii = 1; ii <= n; ++ii) {
                if (ii == i) continue;
                std::size_t sj = 1;
                for (std::size_t jj = 1; jj <= n; ++jj) {
                    if (jj == j) continue;
                    sub.at(si, sj) = a.at(ii, jj);
                    ++sj;
                }
                ++si;
            }
            RingElem cof = det(sub);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = cof * (*d_inv);
        }
    }
    return inv;
}

}  // namespace extpow
