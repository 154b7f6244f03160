#include "ygraph/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ygraph/error.hpp"

namespace ygraph {

namespace {

using Cd = std::complex<double>;

std::vector<Cd> initial_guesses(const std::vector<double>& c) {
    const std::size_t d = c.size() - 1;
    double radius = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double ratio = std::abs(c[i] / c[d]);
        if (ratio > 0) radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(d - i)));
    }
    if (radius == 0.0) radius = 1.0;
    std::vector<Cd> z(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
        z[k] = std::polar(radius, angle);
    }
    return z;
}

// Double-precision Aberth pass; only used for starting values, so failure
// to converge is not an error.
std::vector<Cd> aberth_double(const IntPoly& p) {
    std::vector<double> c;
    for (const auto& a : p.coefficients()) {
        c.push_back(a.get_d());
        if (!std::isfinite(c.back())) return {};
    }
    std::vector<Cd> z = initial_guesses(c);
    const std::size_t d = z.size();
    for (int iter = 0; iter < 500; ++iter) {
        double largest = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            Cd value = c[d];
            Cd slope = 0.0;
            for (std::size_t k = d; k-- > 0;) {
                slope = slope * z[i] + value;
                value = value * z[i] + c[k];
            }
            if (value == 0.0) continue;
            const Cd ratio = value / slope;
            Cd repulsion = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            const Cd step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            largest = std::max(largest, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (!(largest == largest)) return {};
        if (largest < 1e-15) break;
    }
    for (const auto& v : z)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {};
    return z;
}

void eval_with_derivative(const IntPoly& p, const BigComplex& x, BigComplex& value, BigComplex& slope) {
    const auto& c = p.coefficients();
    const PrecisionBits bits = x.precision();
    value = BigComplex(BigFloat(c.back(), bits));
    slope = BigComplex(bits);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        slope *= x;
        slope += value;
        value *= x;
        value.re += BigFloat(c[k], bits);
    }
}

// Upper bound for the rounding error committed by Horner at x.
BigFloat evaluation_slack(const IntPoly& p, const BigFloat& modulus) {
    const PrecisionBits bits = modulus.precision();
    BigFloat sum(0L, bits);
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        sum *= modulus;
        sum += abs(BigFloat(*it, bits));
    }
    const long degree = p.degree();
    return sum * exp2_int(-bits + 2, bits) * (2 * degree + 2);
}

std::vector<ApproxRoot> solve_squarefree(const IntPoly& p, int multiplicity, PrecisionBits bits) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    std::vector<ApproxRoot> out;
    if (d == 1) {
        BigFloat root = -BigFloat(p.coeff(0), bits) / BigFloat(p.coeff(1), bits);
        BigFloat radius = abs(root) * exp2_int(-bits + 1, bits);
        out.push_back({BigComplex(root), multiplicity, radius});
        return out;
    }

    std::vector<Cd> seed = aberth_double(p);
    if (seed.empty()) {
        std::vector<double> unit(d + 1, 1.0);
        seed = initial_guesses(unit);
    }
    std::vector<BigComplex> z;
    z.reserve(d);
    for (const auto& s : seed) z.emplace_back(BigFloat(s.real(), bits), BigFloat(s.imag(), bits));

    const BigFloat tolerance = exp2_int(-bits + 6, bits);
    const BigFloat acceptable = exp2_int(-bits / 2, bits);
    const int max_iterations = 200 + static_cast<int>(bits);
    BigComplex value(bits), slope(bits);
    BigFloat previous_largest(1e300, bits);
    int stagnant = 0;
    bool converged = false;
    for (int iter = 0; iter < max_iterations && !converged; ++iter) {
        BigFloat largest(0L, bits);
        for (std::size_t i = 0; i < d; ++i) {
            eval_with_derivative(p, z[i], value, slope);
            if (value.re.is_zero() && value.im.is_zero()) continue;
            BigComplex ratio = value / slope;
            BigComplex repulsion(bits);
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                BigFloat n2 = norm(diff);
                repulsion.re += diff.re / n2;
                repulsion.im -= diff.im / n2;
            }
            BigComplex denom = BigComplex(BigFloat(1L, bits)) - ratio * repulsion;
            BigComplex step = ratio / denom;
            z[i] -= step;
            BigFloat scale = abs(z[i]);
            if (scale < 1L) scale = BigFloat(1L, bits);
            BigFloat rel = abs(step) / scale;
            if (rel > largest) largest = rel;
        }
        if (!largest.is_finite()) break;
        if (largest <= tolerance) {
            converged = true;
        } else if (largest <= acceptable) {
            // Rounding noise floor: stop once corrections no longer shrink.
            stagnant = (largest * 2L > previous_largest) ? stagnant + 1 : 0;
            if (stagnant >= 3) converged = true;
        }
        previous_largest = largest;
    }
    if (!converged) throw Error(ErrorKind::NoConvergence, "Aberth iteration did not converge");

    const BigFloat lead = abs(BigFloat(p.leading(), bits));
    for (std::size_t i = 0; i < d; ++i) {
        eval_with_derivative(p, z[i], value, slope);
        BigFloat denom = lead;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) denom *= abs(z[i] - z[j]);
        BigFloat residual = abs(value) + evaluation_slack(p, abs(z[i]));
        BigFloat radius = residual * static_cast<long>(d) / denom;
        out.push_back({z[i], multiplicity, radius});
    }
    return out;
}

}  // namespace

std::vector<ApproxRoot> polynomial_roots(const IntPoly& p, PrecisionBits bits) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    std::vector<ApproxRoot> roots;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        auto part = solve_squarefree(factor, multiplicity, bits);
        roots.insert(roots.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return roots;
}

}  // namespace ygraph
