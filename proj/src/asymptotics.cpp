#include "ygraph/asymptotics.hpp"

#include <numeric>
#include <span>
#include <string>

#include "ygraph/error.hpp"
#include "ygraph/spanning_trees.hpp"

namespace ygraph {

namespace {

void require_coprime_jumps(long k, long l, long m) {
    if (k < 1 || l < 1 || m < 1) throw std::invalid_argument("jumps must be positive");
    const long g = std::gcd(std::gcd(k, l), m);
    if (g != 1) throw Error(ErrorKind::BadGcd, "asymptotics need gcd(k,l,m)=1, got " + std::to_string(g));
}

BigFloat pairwise_sum(std::span<const BigFloat> terms, PrecisionBits bits) {
    if (terms.empty()) return BigFloat(0L, bits);
    if (terms.size() == 1) return terms.front();
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half), bits) + pairwise_sum(terms.subspan(half), bits);
}

}  // namespace

MahlerReport mahler_root_census(long k, long l, long m, PrecisionBits precision) {
    require_coprime_jumps(k, l, m);
    const IntPoly ptilde = build_spectral(k, l, m).ptilde;
    const BigFloat circle_gap(1e-8, 64);

    for (PrecisionBits bits = precision; bits <= kMahlerPrecisionCap; bits *= 2) {
        MahlerReport report;
        report.k = k;
        report.l = l;
        report.m = m;
        report.precision = bits;
        bool ambiguous = false;
        const BigFloat one(1L, bits);
        for (auto& root : polynomial_roots(ptilde, bits)) {
            if (abs(root.value - 1L) <= root.error_radius) {
                report.unity_multiplicity += root.multiplicity;
                continue;
            }
            const BigFloat gap = abs(abs(root.value) - one);
            if (gap <= root.error_radius) {
                ambiguous = true;
                break;
            }
            if (gap < circle_gap)
                throw Error(ErrorKind::UnitCircleRoot, "root " + abs(root.value).to_string(30) +
                                                           " lies on or near the unit circle");
            (abs(root.value) > one ? report.roots_outside : report.roots_inside).push_back(std::move(root));
        }
        if (ambiguous) continue;
        if (report.unity_multiplicity != 2)
            throw Error(ErrorKind::InternalInconsistency,
                        "z = 1 should be a double root, found multiplicity " +
                            std::to_string(report.unity_multiplicity));

        report.a_roots = BigFloat(3L, bits);
        for (const auto& root : report.roots_outside)
            report.a_roots *= pow(abs(root.value), static_cast<unsigned long>(root.multiplicity));
        return report;
    }
    throw Error(ErrorKind::NoConvergence, "could not separate roots from the unit circle");
}

MahlerReport mahler_roots(long k, long l, long m, PrecisionBits precision) {
    MahlerReport report = mahler_root_census(k, l, m, precision);
    report.a_integral = mahler_integral(k, l, m, kMahlerGridPoints, precision);
    return report;
}

BigFloat mahler_integral(long k, long l, long m, long grid_points, PrecisionBits precision) {
    require_coprime_jumps(k, l, m);
    if (grid_points < 256) throw std::invalid_argument("at least 256 grid points are required");
    const IntPoly smooth = poly_exact_div(build_spectral(k, l, m).ptilde, IntPoly{1, -2, 1});

    const PrecisionBits bits = precision;
    const BigFloat step = 2L * pi(bits) / grid_points;
    std::vector<BigFloat> terms;
    terms.reserve(static_cast<std::size_t>(grid_points));
    for (long j = 0; j < grid_points; ++j) {
        const BigFloat angle = step * j;
        const BigComplex z(cos(angle), sin(angle));
        terms.push_back(log(abs(smooth(z))));
    }
    const BigFloat mean = pairwise_sum(terms, bits) / grid_points;
    return exp(mean);
}

BigFloat asymptotic_estimate(long k, long l, long m, long n, PrecisionBits precision) {
    const MahlerReport report = mahler_root_census(k, l, m, precision);
    const BigFloat a = report.a_roots.with_precision(precision);
    return pow(a, static_cast<unsigned long>(n)) * n / (k * k + l * l + m * m);
}

}  // namespace ygraph
