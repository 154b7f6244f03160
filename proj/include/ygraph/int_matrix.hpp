#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "ygraph/bigint.hpp"

namespace ygraph {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Row-wise literal, e.g. IntMatrix{{2, -1}, {-1, 2}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<BigInt>& entries);
    /// T^power for the n×n cyclic shift T = circ(0, 1, 0, ..., 0); negative
    /// powers are allowed.
    static IntMatrix shift_power(std::size_t n, long power);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator-=(const IntMatrix& rhs);
    IntMatrix& operator*=(const BigInt& scalar);

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }
    friend IntMatrix operator*(const BigInt& s, IntMatrix a) { return a *= s; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(IntMatrix a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Copy of `block` written at (row, col).
    void set_block(std::size_t row, std::size_t col, const IntMatrix& block);
    /// The matrix with one row and one column removed.
    IntMatrix without(std::size_t row, std::size_t col) const;
    IntMatrix transpose() const;

    bool is_symmetric() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace ygraph
