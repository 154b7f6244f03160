#include <doctest.h>

#include "generators.hpp"
#include "ygraph/error.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/oracles.hpp"
#include "ygraph/spanning_trees.hpp"

using namespace ygraph;

TEST_CASE("spot values for Y(n;1,1,1)") {
    const auto p4 = validate_params(4, 1, 1, 1);
    CHECK(tree_count_kirchhoff(p4) == 218700);
    CHECK(tree_count_resultant(p4) == 218700);
    CHECK(tree_count_chebyshev(p4).value == 218700);
    CHECK(tree_count_y111_closed(4) == 218700);
    CHECK(tree_count_y111_closed(5) == 5929605);
    CHECK(tree_count_y111_closed(6) == 149299200);
    CHECK(tree_count_kirchhoff(validate_params(2, 1, 1, 1)) == 150);
    CHECK(tree_count_y111_closed(2) == 150);
    CHECK(tree_count_y111_closed(3) == 6912);
}

TEST_CASE("spectral polynomial of (1,1,1)") {
    const auto s = build_spectral(1, 1, 1);
    CHECK(s.q == IntPoly{-54, 72, -24});
    CHECK(s.s == 2);
    CHECK(s.ptilde.degree() == 6);
}

TEST_CASE("spectral polynomial invariants for k+l+m <= 12") {
    for (long k = 1; k <= 10; ++k)
        for (long l = k; k + l <= 11; ++l)
            for (long m = l; k + l + m <= 12; ++m) {
                const auto s = build_spectral(k, l, m);
                const long sum = k + l + m;
                const long sq = k * k + l * l + m * m;
                CHECK(s.q.degree() == sum - 1);
                CHECK(s.q(BigInt(1)) == -2 * sq);
                CHECK(s.q.leading() == -3 * big_pow(2, static_cast<unsigned long>(sum)));
                REQUIRE(s.ptilde.degree() == 2 * sum);
                for (long i = 0; i <= 2 * sum; ++i)
                    CHECK(s.ptilde.coeff(static_cast<std::size_t>(i)) ==
                          s.ptilde.coeff(static_cast<std::size_t>(2 * sum - i)));
                const BigInt one(1);
                CHECK(s.ptilde(one) == 0);
                CHECK(s.ptilde.derivative()(one) == 0);
                CHECK(s.ptilde.derivative().derivative()(one) != 0);
            }
}

TEST_CASE("P(1, lambda)") { CHECK(eval_P_lambda_at_unit() == IntPoly{0, -4, 9, -6, 1}); }

TEST_CASE("all tree routes agree for n <= 9") {
    for (const auto& p : normalized_params_up_to(9)) {
        const BigInt k = tree_count_kirchhoff(p);
        CHECK_MESSAGE(tree_count_resultant(p) == k, p);
        CHECK_MESSAGE(tree_count_chebyshev(p).value == k, p);
    }
}

TEST_CASE("surd formulas") {
    for (long n = 3; n <= 20; ++n) {
        CHECK(tree_count_y112_surd(n) == tree_count_resultant(validate_params(n, 1, 1, 2)));
        CHECK(tree_count_y122_surd(n) == tree_count_resultant(validate_params(n, 1, 2, 2)));
    }
}

TEST_CASE("Y(n;1,1,1) closed form for n = 4..30") {
    for (long n = 4; n <= 30; ++n) CHECK(tree_count_kirchhoff(validate_params(n, 1, 1, 1)) == tree_count_y111_closed(n));
}

TEST_CASE("tau increases with n for (1,1,1)") {
    BigInt previous = 0;
    for (long n = 4; n <= 20; ++n) {
        const BigInt t = tree_count_resultant(validate_params(n, 1, 1, 1));
        CHECK(t > previous);
        previous = t;
    }
}

TEST_CASE("certified rounding") {
    const auto r = round_certified([](PrecisionBits bits) { return BigFloat(7L, bits) / 2L + BigFloat(0.4, bits); });
    CHECK(r.value == 4);
    // x.5 never gets its residual below 1/4.
    CHECK_THROWS_AS(round_certified([](PrecisionBits bits) { return BigFloat(7L, bits) / 2L; }, 64, 256), Error);

    const auto c = tree_count_chebyshev(validate_params(13, 1, 3, 5));
    CHECK(c.value == tree_count_kirchhoff(validate_params(13, 1, 3, 5)));
    CHECK(c.precision_used >= kDefaultPrecision);
}

TEST_CASE("square property for (1,2,2)") {
    const auto rows = square_property(1, 2, 2, 2, 20);
    REQUIRE(rows.size() == 19);
    CHECK(rows[0].status == SquareStatus::invalid_params);
    CHECK(!rows[0].note.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].status == SquareStatus::holds);
        CHECK(*rows[i].tau == rows[i].n * *rows[i].a * *rows[i].a);
    }
    CHECK(*rows[1].a == 48);  // n = 3: 6912 = 3·48²
    CHECK(*rows[2].a == 85);
    CHECK(*rows[3].a == 1111);

    const auto y111 = square_property(1, 1, 1, 4, 4);
    CHECK(y111[0].status == SquareStatus::fails);
}
