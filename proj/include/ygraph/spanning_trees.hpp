#pragma once

#include <functional>
#include <optional>
#include <stop_token>
#include <string_view>
#include <vector>

#include "ygraph/bigfloat.hpp"
#include "ygraph/bigint.hpp"
#include "ygraph/graph_model.hpp"
#include "ygraph/polynomial.hpp"

namespace ygraph {

inline constexpr PrecisionBits kDefaultPrecisionCap = 4096;

/// The Laurent polynomial P(z) = 3abc - ab - bc - ac with
/// a = 3 - z^k - z^-k (b, c likewise for l, m), together with
/// Ptilde = z^{k+l+m}·P(z) and Q(w) defined by P(z) = (w - 1)·Q(w),
/// w = (z + 1/z)/2.
struct SpectralPolynomial {
    LaurentPoly laurent;
    IntPoly ptilde;
    IntPoly q;
    /// k + l + m - 1 = deg Q.
    long s = 0;
};

/// Throws Error{InternalInconsistency} if (w - 1) does not divide exactly.
SpectralPolynomial build_spectral(long k, long l, long m);
inline SpectralPolynomial build_spectral(const YGraphParams& p) { return build_spectral(p.k(), p.l(), p.m()); }

/// P(1, λ) as a polynomial in λ, expanded from the general eigenvalue
/// equation with a = b = c = 1.
IntPoly eval_P_lambda_at_unit();

enum class TreeMethod { kirchhoff, resultant, chebyshev, closed111 };
std::string_view to_string(TreeMethod m);

struct TreeCountReport {
    YGraphParams params;
    TreeMethod method;
    BigInt value;
    /// Precision at which the chebyshev route certified its rounding.
    std::optional<PrecisionBits> precision_used;
};

/// Cofactor of the Laplacian with vertex 0 (an inner vertex) removed.
BigInt tree_count_kirchhoff(const YGraphParams& p, std::stop_token stop = {});

/// |Res(1 + z + ... + z^{n-1}, Ptilde)| / n. Throws Error{InexactDivision}
/// if n does not divide the resultant.
BigInt tree_count_resultant(const YGraphParams& p);

/// n·3^n/(k^2+l^2+m^2) · Π_{Q(w_p)=0} |2T_n(w_p) - 2| with roots found
/// numerically; precision doubles from `start_precision` until the rounded
/// value repeats and the rounding residual is below 1/4.
/// Throws Error{NoConvergence} past `precision_cap`.
TreeCountReport tree_count_chebyshev(const YGraphParams& p, PrecisionBits start_precision = kDefaultPrecision,
                                     PrecisionBits precision_cap = kDefaultPrecisionCap);

/// 3^{n-1}·n·L_n^4 for odd n, 25·3^{n-1}·n·F_n^4 for even n (n >= 2).
BigInt tree_count_y111_closed(long n);

/// Rounds a real-valued integer formula with the same contract as the
/// chebyshev route. `evaluate` is called at increasing precisions.
struct CertifiedInteger {
    BigInt value;
    PrecisionBits precision_used;
};
CertifiedInteger round_certified(const std::function<BigFloat(PrecisionBits)>& evaluate,
                                 PrecisionBits start_precision = kDefaultPrecision,
                                 PrecisionBits precision_cap = kDefaultPrecisionCap);

/// Closed surd formula for Y(n;1,1,2):
/// 4n·3^{n-1}·|(T_n(3/2)-1)(T_n((1+√193)/12)-1)(T_n((1-√193)/12)-1)|.
BigInt tree_count_y112_surd(long n);

/// Closed surd formula for Y(n;1,2,2):
/// n·3^{n-2}·Π (x^n + x^{-n} - 2) over x in {(1±√13)/2, (1+√5)/2, (-1-√5)/2}.
BigInt tree_count_y122_surd(long n);

enum class SquareStatus { holds, fails, invalid_params };

struct SquareRow {
    long n = 0;
    SquareStatus status = SquareStatus::invalid_params;
    std::optional<BigInt> tau;
    /// a(n) with tau = n·a(n)^2 when it exists.
    std::optional<BigInt> a;
    /// Validation message for invalid parameters.
    std::string note;
};

/// For each n in [n_from, n_to], tests whether n | τ(n) and τ(n)/n is a
/// perfect square. Parameter combinations that do not describe a valid
/// Y-graph are reported as invalid_params rather than skipped.
std::vector<SquareRow> square_property(long k, long l, long m, long n_from, long n_to);

}  // namespace ygraph
