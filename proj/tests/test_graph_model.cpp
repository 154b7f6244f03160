#include <doctest.h>

#include <sstream>

#include "ygraph/error.hpp"
#include "ygraph/graph_model.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/oracles.hpp"

using namespace ygraph;

namespace {

ErrorKind kind_of(long n, long k, long l, long m) {
    try {
        validate_params(n, k, l, m);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected validate_params to throw");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("validate_params rejects degenerate graphs") {
    CHECK(kind_of(1, 1, 1, 1) == ErrorKind::BadSize);
    CHECK(kind_of(0, 1, 1, 1) == ErrorKind::BadSize);
    CHECK(kind_of(4, 1, 4, 1) == ErrorKind::LoopEdge);
    CHECK(kind_of(2, 1, 2, 2) == ErrorKind::LoopEdge);
    CHECK(kind_of(6, 2, 2, 4) == ErrorKind::DisconnectedGraph);

    try {
        validate_params(6, 2, 2, 4);
    } catch (const Error& e) {
        CHECK(std::string(e.what()) == "disconnected: gcd(k,l,m,n)=2");
    }
}

TEST_CASE("jumps are reduced into 1..n/2") {
    const auto p = validate_params(7, 6, 3, 5);
    CHECK(p.k() == 1);
    CHECK(p.l() == 3);
    CHECK(p.m() == 2);
    CHECK(p == validate_params(7, 1, 3, 2));
    std::ostringstream os;
    os << p;
    CHECK(os.str() == "Y(7;1,3,2)");
}

TEST_CASE("Laplacian shape for every valid graph up to n = 12") {
    for (const auto& p : normalized_params_up_to(12)) {
        const IntMatrix lap = laplacian_full(p);
        REQUIRE(lap.rows() == 4 * static_cast<std::size_t>(p.n()));
        CHECK(lap.is_symmetric());
        for (std::size_t i = 0; i < lap.rows(); ++i) {
            BigInt row_sum = 0;
            for (std::size_t j = 0; j < lap.cols(); ++j) row_sum += lap(i, j);
            CHECK(row_sum == 0);
            CHECK(lap(i, i) == 3);
        }
    }
}

TEST_CASE("edge and vertex counts up to n = 50") {
    for (const auto& p : normalized_params_up_to(50)) {
        const auto e = edge_multiset(p);
        REQUIRE(e.vertex_count == 4 * static_cast<std::size_t>(p.n()));
        REQUIRE(e.edges.size() == 6 * static_cast<std::size_t>(p.n()));
    }
}

TEST_CASE("doubled edges appear twice when 2k = n") {
    const auto p = validate_params(4, 2, 1, 1);
    const auto e = edge_multiset(p);
    const std::size_t a = p.vertex(1, 0);
    const std::size_t b = p.vertex(1, 2);
    int count = 0;
    for (const auto& edge : e.edges)
        if ((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) ++count;
    CHECK(count == 2);
    CHECK(laplacian_full(p)(a, b) == -2);
}

TEST_CASE("edge-list Laplacian equals the block Laplacian up to n = 20") {
    for (const auto& p : normalized_params_up_to(20))
        REQUIRE_MESSAGE(laplacian_from_edges(edge_multiset(p)) == laplacian_full(p), p);
}

TEST_CASE("outer block is a symmetric circulant") {
    const IntMatrix a = outer_block(5, 2);
    CHECK(a.is_symmetric());
    CHECK(a(0, 0) == 3);
    CHECK(a(0, 2) == -1);
    CHECK(a(0, 3) == -1);
    CHECK(a(0, 1) == 0);
    CHECK(outer_block(4, 2)(0, 2) == -2);
}

TEST_CASE("reduced and full cokernels share torsion up to n = 12") {
    for (const auto& p : normalized_params_up_to(12)) {
        const auto full = cokernel_torsion(laplacian_full(p)).torsion();
        const auto reduced = cokernel_torsion(reduced_matrix(p)).torsion();
        CHECK_MESSAGE(full == reduced, p);
    }
}
