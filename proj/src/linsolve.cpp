#include "extpow/linsolve.hpp"

#include <algorithm>
#include <cstdlib>

namespace extpow {

namespace {

ZMatrix identity_z(std::size_t n) {
    ZMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void row_axpy(ZMatrix& m, std::size_t dst, std::size_t src,
              const mpz_class& q) {
    // row dst -= q * row src
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(ZMatrix& m, std::size_t dst, std::size_t src,
              const mpz_class& q) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] -= q * m[i][src];
}

}  // namespace

SmithForm smith_form(ZMatrix a) {
    SmithForm f;
    f.rows = a.size();
    f.cols = f.rows ? a[0].size() : 0;
    f.U = identity_z(f.rows);
    f.V = identity_z(f.cols);
    const std::size_t steps = std::min(f.rows, f.cols);

    for (std::size_t t = 0; t < steps; ++t) {
        // Locate a nonzero pivot of minimal absolute value.
        bool found = false;
        std::size_t pi = t, pj = t;
        mpz_class best;
        for (std::size_t i = t; i < f.rows; ++i)
            for (std::size_t j = t; j < f.cols; ++j) {
                if (a[i][j] == 0) continue;
                mpz_class v = abs(a[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        std::swap(a[pi], a[t]);
        std::swap(f.U[pi], f.U[t]);
        if (pj != t) {
            for (std::size_t i = 0; i < f.rows; ++i)
                std::swap(a[i][pj], a[i][t]);
            for (std::size_t i = 0; i < f.cols; ++i)
                std::swap(f.V[i][pj], f.V[i][t]);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < f.rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(),
                           a[t][t].get_mpz_t());
                row_axpy(a, i, t, q);
                row_axpy(f.U, i, t, q);
                if (a[i][t] != 0) {
                    std::swap(a[i], a[t]);
                    std::swap(f.U[i], f.U[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < f.cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(),
                           a[t][t].get_mpz_t());
                col_axpy(a, j, t, q);
                col_axpy(f.V, j, t, q);
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < f.rows; ++i)
                        std::swap(a[i][j], a[i][t]);
                    for (std::size_t i = 0; i < f.cols; ++i)
                        std::swap(f.V[i][j], f.V[i][t]);
                    clean = false;
                }
            }
        }
    }

    f.diag.resize(steps);
    for (std::size_t t = 0; t < steps; ++t) f.diag[t] = a[t][t];
    return f;
}

std::optional<std::vector<mpz_class>> SmithForm::solve(
    const std::vector<mpz_class>& b) const {
    if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
    // y = U b; solve S z = y; x = V z.
    std::vector<mpz_class> y(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) y[i] += U[i][j] * b[j];

    std::vector<mpz_class> z(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        const mpz_class& s = i < diag.size() ? diag[i] : mpz_class(0);
        if (s == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (!mpz_divisible_p(y[i].get_mpz_t(), s.get_mpz_t()))
                return std::nullopt;
            if (i < cols) z[i] = y[i] / s;
        }
    }
    std::vector<mpz_class> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += V[i][j] * z[j];
    return x;
}

std::optional<std::vector<mpz_class>> solve_integer(
    const ZMatrix& a, const std::vector<mpz_class>& b) {
    return smith_form(a).solve(b);
}

std::optional<std::vector<RingElem>> solve_linear(
    const RingPtr& ring, const std::vector<std::vector<RingElem>>& a,
    const std::vector<RingElem>& b) {
    if (ring->kind() == RingKind::PolyRing)
        throw std::invalid_argument("solve_linear: unsupported ring kind");
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("dimension mismatch");

    if (ring->is_field()) {
        // Gaussian elimination on the augmented matrix.
        std::vector<std::vector<RingElem>> m(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            m[i] = a[i];
            m[i].push_back(b[i]);
        }
        std::vector<int> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && m[p][c].is_zero()) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[r]);
            RingElem inv = *m[r][c].inverse();
            for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                RingElem f = m[i][c];
                for (std::size_t j = c; j <= cols; ++j)
                    m[i][j] -= f * m[r][j];
            }
            pivot_col.push_back(static_cast<int>(c));
            ++r;
        }
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][cols].is_zero()) return std::nullopt;
        std::vector<RingElem> x(cols, RingElem::zero(ring));
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            x[static_cast<std::size_t>(pivot_col[i])] = m[i][cols];
        return x;
    }

    // Z and Z/k go through the integer lift.
    ZMatrix lift(rows);
    std::vector<mpz_class> bz(rows);
    const bool modular = ring->is_modular();
    const std::size_t width = modular ? cols + rows : cols;
    for (std::size_t i = 0; i < rows; ++i) {
        lift[i].resize(width, 0);
        for (std::size_t j = 0; j < cols; ++j) lift[i][j] = a[i][j].scalar();
        if (modular) lift[i][cols + i] = ring->modulus();
        bz[i] = b[i].scalar();
    }
    auto sol = solve_integer(lift, bz);
    if (!sol) return std::nullopt;
    std::vector<RingElem> x;
    x.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) x.emplace_back(ring, (*sol)[j]);
    return x;
}

bool columns_independent(const RingPtr& ring,
                         const std::vector<std::vector<RingElem>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (cols == 0) return true;

    if (ring->is_field()) {
        // Rank via elimination.
        std::vector<std::vector<RingElem>> m = a;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && m[p][c].is_zero()) ++p;
            if (p == rows) return false;  // this column is dependent
            std::swap(m[p], m[r]);
            RingElem inv = *m[r][c].inverse();
            for (std::size_t j = 0; j < cols; ++j) m[r][j] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                RingElem f = m[i][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r == cols;
    }

    ZMatrix lift(rows, std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) lift[i][j] = a[i][j].scalar();
    SmithForm f = smith_form(std::move(lift));

    std::size_t nonzero = 0;
    for (const auto& d : f.diag)
        if (d != 0) ++nonzero;
    if (nonzero < cols) return false;
    if (ring->kind() == RingKind::Integers) return true;

    // Over Z/k a nonzero kernel vector exists iff some invariant factor
    // shares a divisor with k.
    for (std::size_t i = 0; i < cols; ++i) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), f.diag[i].get_mpz_t(),
                ring->modulus().get_mpz_t());
        if (g != 1) return false;
    }
    return true;
}

}  // namespace extpow
