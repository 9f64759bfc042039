#ifndef QSG_INT_MATRIX_HPP
#define QSG_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <vector>

#include "qsg/errors.hpp"

namespace qsg {

// Exact arithmetic scalar.  Smith normal form intermediates can grow far
// beyond 64 bits, so fixed-width integers are not an option here.
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over arbitrary-precision integers.  Deliberately
/// minimal: the exact algebra below only needs coefficient access,
/// elementary row/column operations and products.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const BigInt& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void add_row(int src, int dst, const BigInt& factor);  // row dst += factor * row src
    void add_col(int src, int dst, const BigInt& factor);  // col dst += factor * col src

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/**
 * Smith normal form  m = p * d * q  with unimodular p, q.
 *
 * d is diagonal and nonnegative; the nonzero diagonal entries (the
 * divisors) form a divisibility chain d[k] | d[k+1] and come first, so
 * rank = divisors.size().  p_inv and q_inv are the exact inverses,
 * accumulated from the same elementary operations.
 */
struct SnfResult {
    IntMatrix p, d, q;
    IntMatrix p_inv, q_inv;
    std::vector<BigInt> divisors;
    int rank = 0;
};

// Total and deterministic: pivots are chosen as the smallest nonzero
// absolute value in the working submatrix, ties broken in row-major order.
SnfResult snf(const IntMatrix& m);

// Rank over the rationals via fraction-free (Bareiss) elimination.
// Independent of snf(); the two must agree.
int rank(const IntMatrix& m);

// Exact determinant via Bareiss elimination; square input only.
BigInt determinant(const IntMatrix& m);

// Exact integer inverse of a unimodular matrix; throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace qsg

#endif
