#pragma once

// Small seeded generators for the property tests. Every test that uses one
// prints nothing about the seed; it is fixed so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "ygraph/graph_model.hpp"
#include "ygraph/int_matrix.hpp"
#include "ygraph/polynomial.hpp"

namespace ygraph::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(in(0, static_cast<long>(v.size()) - 1))];
    }

    IntMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = in(lo, hi);
        return m;
    }

    // Degree exactly `degree` (nonzero leading coefficient).
    IntPoly poly(long degree, long lo, long hi) {
        std::vector<BigInt> c;
        for (long i = 0; i < degree; ++i) c.emplace_back(in(lo, hi));
        long lead = 0;
        while (lead == 0) lead = in(lo, hi);
        c.emplace_back(lead);
        return IntPoly(std::move(c));
    }

    // Any valid Y-graph with n in [2, max_n]; jumps are drawn unreduced.
    YGraphParams params(long max_n) {
        while (true) {
            const long n = in(2, max_n);
            try {
                return validate_params(n, in(1, n - 1), in(1, n - 1), in(1, n - 1));
            } catch (...) {
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace ygraph::testing
