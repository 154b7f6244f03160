#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "ygraph/error.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/oracles.hpp"
#include "ygraph/spanning_trees.hpp"

using namespace ygraph;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Canonical form through prime-power components, independent of the
// gcd/lcm route used by normalize_cyclic_sum.
AbelianGroup via_prime_powers(const std::vector<long>& orders) {
    std::map<long, std::vector<long>> by_prime;  // prime -> exponents
    for (long d : orders) {
        for (long p = 2; d > 1; ++p) {
            long e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            if (e > 0) by_prime[p].push_back(e);
        }
    }
    std::size_t length = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.rbegin(), exps.rend());
        length = std::max(length, exps.size());
    }
    // Largest factor collects the largest power of every prime, and so on.
    std::vector<BigInt> factors(length, BigInt(1));
    for (const auto& [p, exps] : by_prime)
        for (std::size_t i = 0; i < exps.size(); ++i) factors[length - 1 - i] *= big_pow(p, exps[i]);
    return AbelianGroup(factors);
}

}  // namespace

TEST_CASE("AbelianGroup canonical form and printing") {
    const AbelianGroup g(big({45, 1, 3, 15}), 1);
    CHECK(g.invariant_factors() == big({3, 15, 45}));
    CHECK(g.free_rank() == 1);
    CHECK(g.order() == 2025);
    CHECK(to_string(g) == "Z_3 + Z_15 + Z_45 + Z");
    CHECK(to_string(AbelianGroup()) == "0");
    CHECK(direct_sum(AbelianGroup(big({2})), AbelianGroup(big({3}))) == AbelianGroup(big({6})));
}

TEST_CASE("normalize_cyclic_sum") {
    CHECK(normalize_cyclic_sum(big({3, 9, 12, 15, 45})).invariant_factors() == big({3, 3, 3, 45, 180}));
    CHECK(normalize_cyclic_sum(big({3, 15, 11, 11, 33, 33})).invariant_factors() == big({33, 33, 33, 165}));
    CHECK_THROWS(normalize_cyclic_sum(big({1, 4})));

    testing::Gen gen(21);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<long> orders;
        std::vector<BigInt> as_big;
        const long count = gen.in(1, 6);
        for (long i = 0; i < count; ++i) {
            orders.push_back(gen.in(2, 360));
            as_big.emplace_back(orders.back());
        }
        CHECK(normalize_cyclic_sum(as_big) == via_prime_powers(orders));
    }
}

TEST_CASE("diagonal scaling: coker(kD) = sum of Z_{k d_i}") {
    testing::Gen gen(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> d;
        const long size = gen.in(1, 6);
        for (long i = 0; i < size; ++i) d.emplace_back(gen.in(1, 40));
        const long k = gen.in(1, 9);
        std::vector<BigInt> scaled;
        for (const auto& x : d) scaled.push_back(x * k);
        CHECK(cokernel_torsion(IntMatrix::diagonal(d) * BigInt(k)) == AbelianGroup(scaled));
    }
}

TEST_CASE("full and reduced routes agree and |Jac| = tau up to n = 10") {
    for (const auto& p : normalized_params_up_to(10)) {
        const AbelianGroup full_coker = cokernel_torsion(laplacian_full(p));
        CHECK(full_coker.free_rank() == 1);
        const AbelianGroup full = jacobian_of(p, JacobianRoute::full);
        CHECK_MESSAGE(full == jacobian_of(p, JacobianRoute::reduced), p);
        CHECK_MESSAGE(full.order() == tree_count_kirchhoff(p), p);
        CHECK(full == full_coker.torsion());
    }
}

TEST_CASE("Y(n;1,1,1): SNF, closed form and decomposition agree for n = 4..12") {
    for (long n = 4; n <= 12; ++n) {
        const AbelianGroup snf = jacobian_of(validate_params(n, 1, 1, 1), JacobianRoute::full);
        CHECK_MESSAGE(snf == jacobian_y111_closed(n), n);
        CHECK_MESSAGE(snf == jacobian_y111_decomposed(n), n);
    }
    CHECK(jacobian_y111_closed(5).invariant_factors() == big({33, 33, 33, 165}));
    CHECK(jacobian_y111_closed(4).invariant_factors() == big({3, 3, 3, 45, 180}));
    CHECK_THROWS_AS(jacobian_y111_closed(3), Error);
}

TEST_CASE("Y(n;1,1,1) for n = 2, 3 is computed by SNF only") {
    // No closed form is claimed here; the decomposition still holds.
    for (long n = 2; n <= 3; ++n)
        CHECK(jacobian_of(validate_params(n, 1, 1, 1), JacobianRoute::full) == jacobian_y111_decomposed(n));
    CHECK(jacobian_of(validate_params(2, 1, 1, 1)).order() == 150);
}

TEST_CASE("circulant cokernel closed form vs direct SNF") {
    testing::Gen gen(23);
    for (int trial = 0; trial < 300; ++trial) {
        const long a = gen.in(-6, 6);
        const long b = gen.pick(std::vector<long>{-2, -1, 1, 2});
        const long n = gen.in(2, 16);
        CHECK_MESSAGE(circulant_tridiag_coker(a, b, n) == cokernel_torsion(circulant_tridiag(a, b, n)),
                      "a=" << a << " b=" << b << " n=" << n);
    }
}

TEST_CASE("circulant specializations") {
    for (long n = 2; n <= 30; ++n) {
        // 2I - T - T^{-1} is the cycle Laplacian: Z_n + Z.
        const AbelianGroup cycle = circulant_tridiag_coker(2, -1, n);
        CHECK(cycle == AbelianGroup(std::vector<BigInt>{BigInt(n)}, 1));

        const auto fl = fib_lucas(static_cast<unsigned>(n));
        const AbelianGroup a = circulant_tridiag_coker(3, -1, n);
        if (n % 2 == 0)
            CHECK(a == AbelianGroup(std::vector<BigInt>{fl.fibonacci, 5 * fl.fibonacci}));
        else
            CHECK(a == AbelianGroup(std::vector<BigInt>{fl.lucas, fl.lucas}));
    }
}

TEST_CASE("Fibonacci and Lucas numbers") {
    CHECK(fib_lucas(1).fibonacci == 1);
    CHECK(fib_lucas(2).fibonacci == 1);
    CHECK(fib_lucas(10).fibonacci == 55);
    CHECK(fib_lucas(1).lucas == 1);
    CHECK(fib_lucas(2).lucas == 3);
    CHECK(fib_lucas(10).lucas == 123);
}
