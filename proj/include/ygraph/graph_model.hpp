#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ygraph/int_matrix.hpp"

namespace ygraph {

/*
 * Parameters of the Y-graph Y(n; k, l, m).
 *
 * The graph has four segments of n vertices v_{x,y} (x = 0..3, y in Z_n).
 * Segment 0 is the inner segment; v_{0,y} is joined to v_{1,y}, v_{2,y} and
 * v_{3,y}. Outer segments 1, 2, 3 join v_{x,y} to v_{x,y+k}, v_{x,y+l} and
 * v_{x,y+m} respectively.
 *
 * Values only come out of validate_params, so a YGraphParams always
 * describes a connected loopless graph: n >= 2, no jump divisible by n,
 * gcd(k, l, m, n) = 1. Jumps are stored reduced into 1..n/2, since T^k and
 * T^{-k} contribute the same Laplacian term.
 */
class YGraphParams {
public:
    long n() const { return n_; }
    long k() const { return k_; }
    long l() const { return l_; }
    long m() const { return m_; }

    std::size_t vertex_count() const { return 4 * static_cast<std::size_t>(n_); }
    /// Vertex index of v_{segment, position}.
    std::size_t vertex(int segment, long position) const;

    friend bool operator==(const YGraphParams&, const YGraphParams&) = default;

private:
    friend YGraphParams validate_params(long n, long k, long l, long m);
    YGraphParams(long n, long k, long l, long m) : n_(n), k_(k), l_(l), m_(m) {}

    long n_;
    long k_;
    long l_;
    long m_;
};

std::ostream& operator<<(std::ostream& os, const YGraphParams& p);

/// Throws Error{BadSize} for n < 2, Error{LoopEdge} when a jump is 0 mod n
/// and Error{DisconnectedGraph} when gcd(k, l, m, n) > 1.
YGraphParams validate_params(long n, long k, long l, long m);

struct Edge {
    std::size_t u;
    std::size_t v;
};

/// Edges listed one entry per edge, so parallel edges appear repeatedly.
struct EdgeMultiset {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
};

/// The 6n edges of the graph: 3n spokes then n edges per outer segment.
/// When 2·jump = n the outer segment degenerates to doubled edges.
EdgeMultiset edge_multiset(const YGraphParams& p);

/// Degree minus adjacency of an arbitrary loopless multigraph.
IntMatrix laplacian_from_edges(const EdgeMultiset& e);

/// 4n×4n Laplacian assembled from circulant blocks
/// [[3I, -I, -I, -I], [-I, A, 0, 0], [-I, 0, B, 0], [-I, 0, 0, C]]
/// with A = 3I - T^k - T^{-k} and likewise B (jump l), C (jump m).
IntMatrix laplacian_full(const YGraphParams& p);

/// 3I - T^jump - T^{-jump} of order n.
IntMatrix outer_block(long n, long jump);

/// 2n×2n matrix [[-A - B + 3AB, -A], [-B, C]] whose cokernel has the same
/// torsion as the Laplacian's.
IntMatrix reduced_matrix(const YGraphParams& p);

}  // namespace ygraph
