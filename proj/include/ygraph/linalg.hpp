#pragma once

#include <cstddef>
#include <stop_token>
#include <vector>

#include "ygraph/bigint.hpp"
#include "ygraph/int_matrix.hpp"

namespace ygraph {

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws Error{NonSquare} for rectangular input and Error{Cancelled} if
/// `stop` is triggered between elimination steps.
BigInt bareiss_determinant(const IntMatrix& m, std::stop_token stop = {});

struct SmithForm {
    /// Positive invariant factors d_1 | d_2 | ... | d_rank (ones included).
    std::vector<BigInt> factors;
    std::size_t rank = 0;
    /// rows - rank: number of free Z summands in the cokernel.
    std::size_t cokernel_free_rank = 0;
};

/*
 * Smith normal form by unimodular row and column operations.
 *
 * Pivots are chosen as the smallest nonzero magnitude in the active
 * submatrix, which keeps entries small on the sparse, unit-heavy matrices
 * that come out of graph Laplacians. Only the diagonal is kept; the
 * transforming matrices are discarded. The diagonal is canonicalised into a
 * divisibility chain with pairwise gcd/lcm exchange at the end.
 */
SmithForm smith_normal_form(IntMatrix m, std::stop_token stop = {});

/// Rewrites a list of nonzero diagonal entries into d_1 | d_2 | ... order
/// (absolute values, same product).
std::vector<BigInt> canonical_divisor_chain(std::vector<BigInt> diagonal);

}  // namespace ygraph
