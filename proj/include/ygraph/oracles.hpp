#pragma once

#include <map>
#include <stop_token>
#include <string>
#include <vector>

#include "ygraph/bigint.hpp"
#include "ygraph/graph_model.hpp"
#include "ygraph/int_matrix.hpp"

namespace ygraph {

inline constexpr std::size_t kEnumerationMaxVertices = 14;
inline constexpr std::size_t kEnumerationMaxEdges = 24;
inline constexpr std::size_t kMinorGcdMaxDimension = 5;
inline constexpr long kConsistencyMaxN = 14;

/// Counts spanning trees by trying every (|V|-1)-subset of edges with a
/// union-find acyclicity test. Parallel edges are distinct. Throws
/// Error{TooLarge} above 14 vertices or 24 edges.
BigInt enumerate_spanning_trees(const EdgeMultiset& e);

/// Invariant factors from the determinantal divisors D_j = gcd of all j×j
/// minors (d_j = D_j / D_{j-1}); min(rows, cols) entries, zeros after the
/// rank. Minors are expanded by cofactors. Throws Error{TooLarge} above 5×5.
std::vector<BigInt> snf_minor_gcd(const IntMatrix& m);

struct ConsistencyEntry {
    YGraphParams params;
    int checks_run = 0;
    bool all_passed = true;
    /// Route name -> rendered value ("tree:kirchhoff" -> "218700", ...).
    std::map<std::string, std::string> route_values;
    std::vector<std::string> failures;
};

struct ConsistencyReport {
    std::vector<ConsistencyEntry> entries;
    bool all_passed = true;
    int checks_run = 0;
};

/// Every valid Y(n;k,l,m) with 2 <= n <= max_n and 1 <= k <= l <= m <= n/2,
/// with all applicable tree-count and Jacobian routes compared. Failures are
/// recorded, not thrown. Throws Error{TooLarge} for max_n > 14.
ConsistencyReport consistency_suite(long max_n, std::stop_token stop = {});

/// Every valid parameter tuple with 2 <= n <= max_n in normalised form
/// (1 <= k <= l <= m <= n/2), in lexicographic order.
std::vector<YGraphParams> normalized_params_up_to(long max_n);

}  // namespace ygraph
