#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>

#include "ygraph/asymptotics.hpp"
#include "ygraph/error.hpp"
#include "ygraph/graph_model.hpp"
#include "ygraph/spanning_trees.hpp"

using namespace ygraph;

TEST_CASE("known growth constants") {
    const double golden = (1 + std::sqrt(5.0)) / 2;
    CHECK(mahler_roots(1, 1, 1).a_roots.to_double() == doctest::Approx(3 * std::pow(golden, 4)).epsilon(1e-12));
    CHECK(mahler_roots(1, 1, 2).a_roots.to_double() == doctest::Approx(22.7697).epsilon(1e-5));
    CHECK(mahler_roots(1, 2, 2).a_roots.to_double() == doctest::Approx(23.5623).epsilon(1e-5));
}

TEST_CASE("roots and quadrature agree") {
    const std::array<std::array<long, 3>, 5> cases{{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 1, 3}}};
    for (const auto& [k, l, m] : cases) {
        const MahlerReport r = mahler_roots(k, l, m);
        const double rel = (abs(r.a_roots - r.a_integral) / r.a_roots).to_double();
        CHECK_MESSAGE(rel <= 1e-6, k << "," << l << "," << m);
    }
}

TEST_CASE("root census of Ptilde") {
    for (long k = 1; k <= 3; ++k)
        for (long l = k; l <= 4; ++l)
            for (long m = l; m <= 5; ++m) {
                if (std::gcd(std::gcd(k, l), m) != 1) continue;
                const MahlerReport r = mahler_root_census(k, l, m);
                int outside = 0;
                int inside = 0;
                for (const auto& z : r.roots_outside) outside += z.multiplicity;
                for (const auto& z : r.roots_inside) inside += z.multiplicity;
                const int s = static_cast<int>(k + l + m - 1);
                CHECK(outside == s);
                CHECK(inside == s);
                CHECK(r.unity_multiplicity == 2);
            }
}

TEST_CASE("gcd(k,l,m) > 1 is rejected") {
    try {
        mahler_roots(2, 2, 4);
        FAIL("expected BadGcd");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadGcd);
    }
    CHECK_THROWS_AS(asymptotic_estimate(3, 3, 3, 10), Error);
}

TEST_CASE("ratio to the asymptotic estimate tends to 1") {
    for (const auto& [k, l, m] : std::array<std::array<long, 3>, 2>{{{1, 1, 1}, {1, 1, 2}}}) {
        double previous = 1e9;
        for (long n : {20L, 30L, 40L}) {
            const BigInt tau = tree_count_resultant(validate_params(n, k, l, m));
            const BigFloat est = asymptotic_estimate(k, l, m, n);
            const double gap = std::abs((BigFloat(tau, est.precision()) / est).to_double() - 1);
            CHECK(gap < previous);
            previous = gap;
        }
        CHECK(previous < 0.01);
    }
}

TEST_CASE("quadrature converges with the grid") {
    const double coarse = mahler_integral(1, 2, 3, 256).to_double();
    const double fine = mahler_integral(1, 2, 3, 4096).to_double();
    const double exact = mahler_roots(1, 2, 3).a_roots.to_double();
    CHECK(std::abs(fine - exact) <= std::abs(coarse - exact) + 1e-12);
}
