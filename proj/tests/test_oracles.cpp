#include <doctest.h>

#include "ygraph/error.hpp"
#include "ygraph/oracles.hpp"
#include "ygraph/spanning_trees.hpp"

using namespace ygraph;

TEST_CASE("enumeration on small graphs") {
    // Triangle: 3 trees; two parallel edges: 2 trees.
    CHECK(enumerate_spanning_trees(EdgeMultiset{3, {{0, 1}, {1, 2}, {2, 0}}}) == 3);
    CHECK(enumerate_spanning_trees(EdgeMultiset{2, {{0, 1}, {0, 1}}}) == 2);
    CHECK(enumerate_spanning_trees(EdgeMultiset{3, {{0, 1}}}) == 0);
    // K4 has 16.
    CHECK(enumerate_spanning_trees(EdgeMultiset{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}) == 16);
}

TEST_CASE("enumeration equals Kirchhoff for n in {2, 3}") {
    for (const auto& p : normalized_params_up_to(3))
        CHECK_MESSAGE(enumerate_spanning_trees(edge_multiset(p)) == tree_count_kirchhoff(p), p);
}

TEST_CASE("oracle size guards") {
    CHECK_THROWS_AS(enumerate_spanning_trees(edge_multiset(validate_params(4, 1, 1, 1))), Error);
    CHECK_THROWS_AS(snf_minor_gcd(IntMatrix(6, 2)), Error);
    CHECK_THROWS_AS(consistency_suite(15), Error);
}

TEST_CASE("minor-gcd oracle on fixed matrices") {
    const auto d = snf_minor_gcd(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(d == std::vector<BigInt>{2, 6, 12});
    const auto z = snf_minor_gcd(IntMatrix{{1, 2}, {2, 4}});
    CHECK(z == std::vector<BigInt>{1, 0});
}

TEST_CASE("consistency suite up to n = 6") {
    const ConsistencyReport r = consistency_suite(6);
    CHECK(r.all_passed);
    CHECK(!r.entries.empty());
    for (const auto& e : r.entries) {
        CHECK_MESSAGE(e.failures.empty(), e.params);
        if (e.params.n() <= 3) CHECK(e.route_values.contains("tree:enumeration"));
    }
}
