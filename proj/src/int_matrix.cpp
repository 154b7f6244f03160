#include "ygraph/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace ygraph {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<BigInt>& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::shift_power(std::size_t n, long power) {
    IntMatrix m(n, n);
    const long len = static_cast<long>(n);
    const long shift = ((power % len) + len) % len;
    for (std::size_t i = 0; i < n; ++i) m(i, (i + static_cast<std::size_t>(shift)) % n) = 1;
    return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dimension mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("dimension mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in *");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

IntMatrix operator-(IntMatrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
}

void IntMatrix::set_block(std::size_t row, std::size_t col, const IntMatrix& block) {
    if (row + block.rows_ > rows_ || col + block.cols_ > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
}

IntMatrix IntMatrix::without(std::size_t row, std::size_t col) const {
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r(ri, rj++) = (*this)(i, j);
        }
        ++ri;
    }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace ygraph
