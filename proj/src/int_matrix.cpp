#include "qsg/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace qsg {

using boost::multiprecision::abs;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionMismatch("ragged initializer");
        int j = 0;
        for (long long value : row)
            m(i, j++) = value;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                out(i, j) += a * other(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j)
        return;
    for (int r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r)
        (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row(int src, int dst, const BigInt& factor) {
    for (int c = 0; c < cols_; ++c)
        (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(int src, int dst, const BigInt& factor) {
    for (int r = 0; r < rows_; ++r)
        (*this)(r, dst) += factor * (*this)(r, src);
}

namespace {

// Elementary operations applied to the working matrix d, mirrored into the
// transforms so that p * d * q stays equal to the input and p_inv, q_inv
// stay the exact inverses of p, q.
struct SnfWorkspace {
    IntMatrix d, p, p_inv, q, q_inv;

    void row_swap(int i, int j) {
        d.swap_rows(i, j);
        p.swap_cols(i, j);
        p_inv.swap_rows(i, j);
    }
    void row_add(int src, int dst, const BigInt& t) {  // d: row dst += t * row src
        d.add_row(src, dst, t);
        p_inv.add_row(src, dst, t);
        p.add_col(dst, src, -t);
    }
    void row_negate(int i) {
        d.negate_row(i);
        p.negate_col(i);
        p_inv.negate_row(i);
    }
    void col_swap(int i, int j) {
        d.swap_cols(i, j);
        q.swap_rows(i, j);
        q_inv.swap_cols(i, j);
    }
    void col_add(int src, int dst, const BigInt& t) {  // d: col dst += t * col src
        d.add_col(src, dst, t);
        q_inv.add_col(src, dst, t);
        q.add_row(dst, src, -t);
    }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SnfWorkspace ws{m, IntMatrix::identity(rows), IntMatrix::identity(rows),
                    IntMatrix::identity(cols), IntMatrix::identity(cols)};
    IntMatrix& d = ws.d;

    const int limit = std::min(rows, cols);
    int k = 0;
    while (k < limit) {
        // pivot: smallest nonzero |entry| of the trailing submatrix
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (d(i, j) == 0)
                    continue;
                BigInt a = abs(d(i, j));
                if (pi < 0 || a < best) {
                    best = std::move(a);
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        ws.row_swap(k, pi);
        ws.col_swap(k, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = k + 1; i < rows; ++i) {
                if (d(i, k) == 0)
                    continue;
                BigInt t = d(i, k) / d(k, k);
                if (t != 0)
                    ws.row_add(k, i, -t);
                if (d(i, k) != 0) {  // remainder beats the pivot
                    ws.row_swap(k, i);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            for (int j = k + 1; j < cols; ++j) {
                if (d(k, j) == 0)
                    continue;
                BigInt t = d(k, j) / d(k, k);
                if (t != 0)
                    ws.col_add(k, j, -t);
                if (d(k, j) != 0) {
                    ws.col_swap(k, j);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            // pivot must divide the trailing block for the divisor chain
            for (int i = k + 1; i < rows && settled; ++i)
                for (int j = k + 1; j < cols && settled; ++j)
                    if (d(i, j) % d(k, k) != 0) {
                        ws.row_add(i, k, 1);
                        settled = false;
                    }
        }
        if (d(k, k) < 0)
            ws.row_negate(k);
        ++k;
    }

    SnfResult result{std::move(ws.p), std::move(ws.d), std::move(ws.q),
                     std::move(ws.p_inv), std::move(ws.q_inv), {}, k};
    for (int i = 0; i < k; ++i)
        result.divisors.push_back(result.d(i, i));
    return result;
}

int rank(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    BigInt prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        a.swap_rows(r, pivot);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a(i, j) = (a(r, col) * a(i, j) - a(i, col) * a(r, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(r, col);
        ++r;
    }
    return r;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    IntMatrix a = m;
    const int n = a.rows();
    if (n == 0)
        return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != k) {
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw NotUnimodular("inverse of a non-square matrix");
    SnfResult s = snf(m);
    if (s.rank != m.rows())
        throw NotUnimodular("matrix is singular");
    for (const BigInt& d : s.divisors)
        if (d != 1)
            throw NotUnimodular("matrix determinant is not a unit");
    // m = p * q, so the inverse is q_inv * p_inv
    return s.q_inv * s.p_inv;
}

}  // namespace qsg
