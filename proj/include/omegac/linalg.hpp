#pragma once

#include <optional>
#include <vector>

#include "chain.hpp"

namespace omegac {

/* Dense integer matrix, row-major, arbitrary-precision entries. */
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    Int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Matrix mul(const Matrix& o) const {
        if (cols != o.rows) throw Error("DegreeMismatch", "matrix product shape mismatch");
        Matrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        std::vector<Int> r(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

namespace linalg {

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

/* Smith normal form: U*A*V = D with U, V unimodular, D diagonal with
 * d_1 | d_2 | ..., all d_i >= 0. */
struct SmithResult {
    Matrix D, U, V;
    int rank = 0;
    std::vector<Int> divisors; // nonzero diagonal entries
};

inline SmithResult smith(const Matrix& A) {
    SmithResult r;
    r.D = A;
    r.U = Matrix::identity(A.rows);
    r.V = Matrix::identity(A.cols);
    Matrix& D = r.D;
    Matrix& U = r.U;
    Matrix& V = r.V;
    auto row_op = [&](int i1, int i2, const Int& c) { // row i1 += c * row i2
        for (int j = 0; j < D.cols; ++j) D.at(i1, j) += c * D.at(i2, j);
        for (int j = 0; j < U.cols; ++j) U.at(i1, j) += c * U.at(i2, j);
    };
    auto col_op = [&](int j1, int j2, const Int& c) { // col j1 += c * col j2
        for (int i = 0; i < D.rows; ++i) D.at(i, j1) += c * D.at(i, j2);
        for (int i = 0; i < V.rows; ++i) V.at(i, j1) += c * V.at(i, j2);
    };
    auto row_swap = [&](int i1, int i2) {
        if (i1 == i2) return;
        for (int j = 0; j < D.cols; ++j) std::swap(D.at(i1, j), D.at(i2, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(i1, j), U.at(i2, j));
    };
    auto col_swap = [&](int j1, int j2) {
        if (j1 == j2) return;
        for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, j1), D.at(i, j2));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, j1), V.at(i, j2));
    };
    auto row_neg = [&](int i) {
        for (int j = 0; j < D.cols; ++j) D.at(i, j) = -D.at(i, j);
        for (int j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
    };

    // nearest-integer quotient: |a - q*b| <= |b|/2, keeps swell logarithmic
    auto rounded_div = [](const Int& a, const Int& b) {
        Int q = a / b, r = a - q * b;
        if (2 * iabs(r) > iabs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
        return q;
    };

    int t = 0;
    int n = std::min(A.rows, A.cols);
    while (t < n) {
        bool step_done = false;
        while (!step_done) {
            // select a nonzero pivot of minimal absolute value in the block
            int pi = -1, pj = -1;
            for (int i = t; i < D.rows; ++i)
                for (int j = t; j < D.cols; ++j)
                    if (D.at(i, j) != 0 && (pi < 0 || iabs(D.at(i, j)) < iabs(D.at(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                t = n; // block is zero: done
                step_done = true;
                break;
            }
            row_swap(t, pi);
            col_swap(t, pj);
            // clear column t; any nonzero remainder becomes a smaller pivot
            bool restart = false;
            for (int i = t + 1; i < D.rows && !restart; ++i)
                if (D.at(i, t) != 0) {
                    row_op(i, t, -rounded_div(D.at(i, t), D.at(t, t)));
                    if (D.at(i, t) != 0) restart = true;
                }
            if (restart) continue;
            // column t is zero below the pivot, so these column operations
            // only touch row t
            for (int j = t + 1; j < D.cols && !restart; ++j)
                if (D.at(t, j) != 0) {
                    col_op(j, t, -rounded_div(D.at(t, j), D.at(t, t)));
                    if (D.at(t, j) != 0) restart = true;
                }
            if (restart) continue;
            // pivot must divide the remaining block; else fold the offending
            // row into row t (classic gcd improvement) and retry
            int bi = -1;
            for (int i = t + 1; i < D.rows && bi < 0; ++i)
                for (int j = t + 1; j < D.cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                row_op(t, bi, 1);
                // clear row t right away: the offending entry leaves a nonzero
                // remainder < |pivot|/2, so the next pivot is strictly smaller
                for (int j = t + 1; j < D.cols; ++j)
                    if (D.at(t, j) != 0) col_op(j, t, -rounded_div(D.at(t, j), D.at(t, t)));
                continue;
            }
            if (D.at(t, t) < 0) row_neg(t);
            ++t;
            step_done = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (D.at(i, i) != 0) {
            r.divisors.push_back(D.at(i, i));
            r.rank++;
        }
    return r;
}

/* Column-style Hermite form: A*V = H with V unimodular; the columns of V over
 * the zero columns of H are a basis of ker(A). */
struct HermiteResult {
    Matrix H, V;
    int rank = 0;
};

inline HermiteResult hermite(const Matrix& A) {
    HermiteResult r;
    r.H = A;
    r.V = Matrix::identity(A.cols);
    Matrix& H = r.H;
    Matrix& V = r.V;
    auto col_op = [&](int j1, int j2, const Int& c) {
        for (int i = 0; i < H.rows; ++i) H.at(i, j1) += c * H.at(i, j2);
        for (int i = 0; i < V.rows; ++i) V.at(i, j1) += c * V.at(i, j2);
    };
    auto col_swap = [&](int j1, int j2) {
        if (j1 == j2) return;
        for (int i = 0; i < H.rows; ++i) std::swap(H.at(i, j1), H.at(i, j2));
        for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, j1), V.at(i, j2));
    };
    auto col_neg = [&](int j) {
        for (int i = 0; i < H.rows; ++i) H.at(i, j) = -H.at(i, j);
        for (int i = 0; i < V.rows; ++i) V.at(i, j) = -V.at(i, j);
    };
    int t = 0;
    for (int i = 0; i < H.rows && t < H.cols; ++i) {
        // reduce row i over columns >= t to a single pivot
        while (true) {
            int p = -1;
            for (int j = t; j < H.cols; ++j)
                if (H.at(i, j) != 0 && (p < 0 || iabs(H.at(i, j)) < iabs(H.at(i, p)))) p = j;
            if (p < 0) break;
            col_swap(t, p);
            bool done = true;
            for (int j = t + 1; j < H.cols; ++j)
                if (H.at(i, j) != 0) {
                    Int q = H.at(i, j) / H.at(i, t);
                    col_op(j, t, -q);
                    if (H.at(i, j) != 0) done = false;
                }
            if (done) break;
        }
        if (H.at(i, t) != 0) {
            if (H.at(i, t) < 0) col_neg(t);
            // normalize earlier columns against this pivot
            for (int j = 0; j < t; ++j) {
                Int q = H.at(i, j) / H.at(i, t);
                if (H.at(i, j) - q * H.at(i, t) < 0) q -= 1; // floor division
                if (q != 0) col_op(j, t, -q);
            }
            ++t;
        }
    }
    r.rank = t;
    return r;
}

/* Basis of the integer kernel of A (as columns). */
inline std::vector<std::vector<Int>> kernel(const Matrix& A) {
    HermiteResult h = hermite(A);
    std::vector<std::vector<Int>> out;
    for (int j = h.rank; j < A.cols; ++j) {
        std::vector<Int> v(A.cols);
        for (int i = 0; i < A.cols; ++i) v[i] = h.V.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

/* One integer solution of A x = b, if any. */
inline std::optional<std::vector<Int>> solve(const Matrix& A, const std::vector<Int>& b) {
    SmithResult s = smith(A);
    std::vector<Int> ub = s.U.apply(b);
    std::vector<Int> y(A.cols, 0);
    int n = std::min(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i) {
        Int d = i < n ? s.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return s.V.apply(y);
}

/* Determinant by fraction-free (Bareiss) elimination; used as an oracle. */
inline Int determinant(Matrix m) {
    if (m.rows != m.cols) throw Error("DegreeMismatch", "determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

/* Rank over Q by fraction-free elimination; used as an oracle. */
inline int rank_oracle(Matrix m) {
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int jj = 0; jj < m.cols; ++jj) std::swap(m.at(r, jj), m.at(p, jj));
        for (int i = r + 1; i < m.rows; ++i) {
            if (m.at(i, j) == 0) continue;
            Int a = m.at(r, j), b = m.at(i, j);
            for (int jj = 0; jj < m.cols; ++jj) m.at(i, jj) = a * m.at(i, jj) - b * m.at(r, jj);
        }
        ++r;
    }
    return r;
}

} // namespace linalg
} // namespace omegac
