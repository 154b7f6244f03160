#pragma once

#include <cstddef>
#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

#include "ygraph/bigint.hpp"
#include "ygraph/graph_model.hpp"
#include "ygraph/int_matrix.hpp"

namespace ygraph {

/// Finitely generated abelian group Z_{d_1} ⊕ ... ⊕ Z_{d_r} ⊕ Z^free_rank in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Canonicalises an arbitrary list of cyclic orders (each >= 1; ones are
    /// dropped) plus a free rank.
    explicit AbelianGroup(std::vector<BigInt> cyclic_orders, std::size_t free_rank = 0);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    /// Order of the torsion part.
    BigInt order() const;
    /// Same group without its free part.
    AbelianGroup torsion() const { return AbelianGroup(factors_, 0); }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<BigInt> factors_;
    std::size_t free_rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);
std::string to_string(const AbelianGroup& g);

/// Direct sum of two groups.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// coker(M) = Z^rows / im(M): torsion from the Smith form, free rank = rows - rank.
AbelianGroup cokernel_torsion(const IntMatrix& m, std::stop_token stop = {});

/// Canonical form of ⊕ Z_{orders[i]}; every order must be >= 2.
AbelianGroup normalize_cyclic_sum(const std::vector<BigInt>& orders);

bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b);

enum class JacobianRoute {
    /// Smith form of the 4n×4n Laplacian.
    full,
    /// Smith form of the 2n×2n reduced matrix.
    reduced,
};

/// Jacobian (critical) group: the torsion part of the Laplacian cokernel.
AbelianGroup jacobian_of(const YGraphParams& p, JacobianRoute route = JacobianRoute::reduced,
                         std::stop_token stop = {});

/// Closed form for Y(n;1,1,1), n >= 4:
///   odd n:  Z_3^{n-4} ⊕ Z_{3n} ⊕ Z_{L_n}^2 ⊕ Z_{3L_n}^2
///   even n: Z_3^{n-4} ⊕ Z_{3n} ⊕ Z_{F_n} ⊕ Z_{3F_n} ⊕ Z_{5F_n} ⊕ Z_{15F_n}
/// Throws Error{OutOfStatedRange} for n < 4.
AbelianGroup jacobian_y111_closed(long n);

/// Torsion of coker(3(A^2 - A)) ⊕ coker(A) with A = 3I - T - T^{-1}; n >= 2.
AbelianGroup jacobian_y111_decomposed(long n);

/// coker(aI + bT + bT^{-1}) of order n >= 2, b != 0, from the 2×2 closed form
///   even n: f_{n/2-1}(a,b)·[[a, 2b], [2b, a]]
///   odd n:  (f_{(n-1)/2}(a,b) - b·f_{(n-3)/2}(a,b))·diag(1, a + 2b)
/// with f_j = lucas_like. The closed form needs gcd(a, b) = 1; a common
/// factor g is pulled out first and put back with coker(gD) = ⊕ Z_{g·d_i}.
AbelianGroup circulant_tridiag_coker(long a, long b, long n);

/// The explicit n×n matrix aI + bT + bT^{-1}.
IntMatrix circulant_tridiag(long a, long b, long n);

struct FibLucasPair {
    unsigned n = 0;
    BigInt fibonacci;
    BigInt lucas;
};

/// F_n and L_n (F_1 = F_2 = 1, L_1 = 1, L_2 = 3).
FibLucasPair fib_lucas(unsigned n);

}  // namespace ygraph
