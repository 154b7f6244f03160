#include "ygraph/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ygraph/error.hpp"

namespace ygraph {

namespace {

void check_stop(const std::stop_token& stop) {
    if (stop.stop_requested()) throw Error(ErrorKind::Cancelled, "operation cancelled");
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b, std::size_t from_col = 0) {
    if (a == b) return;
    for (std::size_t j = from_col; j < m.cols(); ++j) swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b, std::size_t from_row = 0) {
    if (a == b) return;
    for (std::size_t i = from_row; i < m.rows(); ++i) swap(m(i, a), m(i, b));
}

struct Position {
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |entry| in the submatrix starting at (t, t).
std::optional<Position> smallest_entry(const IntMatrix& m, std::size_t t) {
    std::optional<Position> best;
    for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
            const BigInt& v = m(i, j);
            if (sgn(v) == 0) continue;
            if (!best || cmpabs(v, m(best->row, best->col)) < 0) {
                best = Position{i, j};
                if (v == 1 || v == -1) return best;
            }
        }
    }
    return best;
}

// Clears column t below and row t right of the pivot by division with
// remainder. Returns false when some remainder survived, in which case a
// smaller pivot has to be brought in.
bool reduce_against_pivot(IntMatrix& m, std::size_t t) {
    const BigInt pivot = m(t, t);
    bool clean = true;
    BigInt q;

    std::vector<std::size_t> pivot_row_support;
    for (std::size_t j = t; j < m.cols(); ++j)
        if (sgn(m(t, j)) != 0) pivot_row_support.push_back(j);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (sgn(m(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0)
            for (std::size_t j : pivot_row_support) m(i, j) -= q * m(t, j);
        if (sgn(m(i, t)) != 0) clean = false;
    }

    std::vector<std::size_t> pivot_col_support;
    for (std::size_t i = t; i < m.rows(); ++i)
        if (sgn(m(i, t)) != 0) pivot_col_support.push_back(i);
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (sgn(m(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0)
            for (std::size_t i : pivot_col_support) m(i, j) -= q * m(i, t);
        if (sgn(m(t, j)) != 0) clean = false;
    }
    return clean;
}

// Moves the smallest nonzero entry of row t / column t onto the diagonal.
void bring_smallest_in_line(IntMatrix& m, std::size_t t) {
    Position best{t, t};
    for (std::size_t i = t + 1; i < m.rows(); ++i)
        if (sgn(m(i, t)) != 0 && cmpabs(m(i, t), m(best.row, best.col)) < 0) best = {i, t};
    for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (sgn(m(t, j)) != 0 && cmpabs(m(t, j), m(best.row, best.col)) < 0) best = {t, j};
    swap_rows(m, t, best.row);
    swap_cols(m, t, best.col);
}

}  // namespace

BigInt bareiss_determinant(const IntMatrix& input, std::stop_token stop) {
    if (!input.is_square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
    IntMatrix m = input;
    const std::size_t n = m.rows();
    BigInt previous = 1;
    int sign = 1;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        check_stop(stop);
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(m(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            swap_rows(m, k, swap_with, k);
            sign = -sign;
        }
        const BigInt& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigInt& lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& target = m(i, j);
                target *= pivot;
                if (sgn(lead) != 0) target -= lead * m(k, j);
                mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = pivot;
    }
    BigInt det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

std::vector<BigInt> canonical_divisor_chain(std::vector<BigInt> diagonal) {
    for (auto& d : diagonal) d = abs(d);
    std::sort(diagonal.begin(), diagonal.end());
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            if (divides(diagonal[i], diagonal[j])) continue;
            BigInt g = big_gcd(diagonal[i], diagonal[j]);
            BigInt l = divexact(diagonal[i] * diagonal[j], g);
            diagonal[i] = std::move(g);
            diagonal[j] = std::move(l);
        }
    }
    return diagonal;
}

SmithForm smith_normal_form(IntMatrix m, std::stop_token stop) {
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::vector<BigInt> diagonal;
    std::size_t t = 0;
    for (; t < limit; ++t) {
        check_stop(stop);
        auto pivot = smallest_entry(m, t);
        if (!pivot) break;
        swap_rows(m, t, pivot->row);
        swap_cols(m, t, pivot->col);
        while (!reduce_against_pivot(m, t)) bring_smallest_in_line(m, t);
        diagonal.push_back(m(t, t));
    }

    SmithForm result;
    result.rank = diagonal.size();
    result.cokernel_free_rank = m.rows() - result.rank;
    result.factors = canonical_divisor_chain(std::move(diagonal));
    return result;
}

}  // namespace ygraph
