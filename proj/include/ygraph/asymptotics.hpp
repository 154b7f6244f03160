#pragma once

#include <cstddef>
#include <vector>

#include "ygraph/bigfloat.hpp"
#include "ygraph/root_finder.hpp"

namespace ygraph {

inline constexpr PrecisionBits kMahlerPrecision = 128;
inline constexpr PrecisionBits kMahlerPrecisionCap = 2048;
inline constexpr long kMahlerGridPoints = 1L << 14;

struct MahlerReport {
    long k = 0;
    long l = 0;
    long m = 0;
    /// 3·Π_{|z|>1} |z| over the roots of Ptilde.
    BigFloat a_roots;
    /// exp of the mean of log|P| on the unit circle.
    BigFloat a_integral;
    std::vector<ApproxRoot> roots_outside;
    std::vector<ApproxRoot> roots_inside;
    /// Multiplicity of the root z = 1.
    int unity_multiplicity = 0;
    PrecisionBits precision = 0;
};

/*
 * Growth constant A_{k,l,m} from the roots of Ptilde = z^{k+l+m}·P(z).
 *
 * Roots are classified as inside/outside the unit circle only when their
 * inclusion disk does not meet the circle; otherwise the precision doubles
 * (up to kMahlerPrecisionCap). The report also carries the quadrature value
 * from mahler_integral so the two can be compared.
 *
 * Throws Error{BadGcd} when gcd(k, l, m) > 1 and Error{UnitCircleRoot} when
 * a root other than z = 1 lies within 1e-8 of the unit circle.
 */
MahlerReport mahler_roots(long k, long l, long m, PrecisionBits precision = kMahlerPrecision);

/// The root half of mahler_roots; a_integral is left at zero.
MahlerReport mahler_root_census(long k, long l, long m, PrecisionBits precision = kMahlerPrecision);

/// exp(∫_0^1 log|P(e^{2πit})| dt) by the trapezoidal rule on `grid_points`
/// nodes, applied to the smooth integrand log|Ptilde(z)/(z-1)^2| (the
/// removed factor integrates to zero). Terms are summed pairwise.
BigFloat mahler_integral(long k, long l, long m, long grid_points = kMahlerGridPoints,
                         PrecisionBits precision = kMahlerPrecision);

/// n/(k^2+l^2+m^2) · A^n with A from mahler_roots.
BigFloat asymptotic_estimate(long k, long l, long m, long n, PrecisionBits precision = kMahlerPrecision);

}  // namespace ygraph
