#include "ygraph/spanning_trees.hpp"

#include <cstdlib>
#include <string>

#include "ygraph/chebyshev.hpp"
#include "ygraph/error.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/linalg.hpp"
#include "ygraph/root_finder.hpp"

namespace ygraph {

namespace {

// 3 - z^j - z^-j
LaurentPoly outer_symbol(long jump) {
    std::vector<BigInt> c(static_cast<std::size_t>(2 * jump + 1));
    c.front() = -1;
    c.back() = -1;
    c[static_cast<std::size_t>(jump)] += 3;
    return LaurentPoly(-jump, std::move(c));
}

// 3 - 2T_j(w)
IntPoly outer_symbol_in_w(long jump) {
    return IntPoly{3} - chebyshev_T(static_cast<unsigned>(jump)) * BigInt(2);
}

BigInt jump_norm(long k, long l, long m) { return BigInt(k * k + l * l + m * m); }

}  // namespace

std::string_view to_string(TreeMethod m) {
    switch (m) {
        case TreeMethod::kirchhoff: return "kirchhoff";
        case TreeMethod::resultant: return "resultant";
        case TreeMethod::chebyshev: return "chebyshev";
        case TreeMethod::closed111: return "closed111";
    }
    return "unknown";
}

SpectralPolynomial build_spectral(long k, long l, long m) {
    if (k < 1 || l < 1 || m < 1) throw std::invalid_argument("jumps must be positive");
    SpectralPolynomial sp;
    const LaurentPoly a = outer_symbol(k);
    const LaurentPoly b = outer_symbol(l);
    const LaurentPoly c = outer_symbol(m);
    sp.laurent = a * b * c * 3 - a * b - b * c - a * c;
    sp.ptilde = sp.laurent.times_power(k + l + m);
    sp.s = k + l + m - 1;

    const IntPoly aw = outer_symbol_in_w(k);
    const IntPoly bw = outer_symbol_in_w(l);
    const IntPoly cw = outer_symbol_in_w(m);
    const IntPoly in_w = aw * bw * cw * BigInt(3) - aw * bw - bw * cw - aw * cw;
    try {
        sp.q = poly_exact_div(in_w, IntPoly{-1, 1});
    } catch (const Error& e) {
        throw Error(ErrorKind::InternalInconsistency, std::string("P(w) not divisible by w - 1: ") + e.what());
    }
    return sp;
}

IntPoly eval_P_lambda_at_unit() {
    // Coefficients are polynomials in λ; a = b = c = 1 at z = 1.
    const IntPoly lambda{0, 1};
    const IntPoly a = IntPoly{1} - lambda;
    const IntPoly b = a;
    const IntPoly c = a;
    return (IntPoly{3} - lambda) * a * b * c - a * b - b * c - a * c;
}

BigInt tree_count_kirchhoff(const YGraphParams& p, std::stop_token stop) {
    return bareiss_determinant(laplacian_full(p).without(0, 0), stop);
}

BigInt tree_count_resultant(const YGraphParams& p) {
    const SpectralPolynomial sp = build_spectral(p);
    const IntPoly cyclotomic_sum(std::vector<BigInt>(static_cast<std::size_t>(p.n()), BigInt(1)));
    const BigInt res = abs(resultant(cyclotomic_sum, sp.ptilde, ResultantMethod::subresultant));
    const BigInt n(p.n());
    if (!divides(n, res))
        throw Error(ErrorKind::InexactDivision, "resultant is not divisible by n for " + std::to_string(p.n()));
    return divexact(res, n);
}

CertifiedInteger round_certified(const std::function<BigFloat(PrecisionBits)>& evaluate,
                                 PrecisionBits start_precision, PrecisionBits precision_cap) {
    std::optional<BigInt> previous;
    const BigFloat quarter(0.25, 64);
    for (PrecisionBits bits = start_precision; bits <= precision_cap; bits *= 2) {
        BigFloat value(bits);
        try {
            value = evaluate(bits);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoConvergence) throw;
            previous.reset();
            continue;
        }
        if (!value.is_finite()) {
            previous.reset();
            continue;
        }
        BigInt rounded = value.round_to_integer();
        const BigFloat residual = abs(value - BigFloat(rounded, bits));
        if (previous && *previous == rounded && residual < quarter) return {rounded, bits};
        previous = std::move(rounded);
    }
    throw Error(ErrorKind::NoConvergence,
                "rounding not certified below the precision cap of " + std::to_string(precision_cap) + " bits");
}

TreeCountReport tree_count_chebyshev(const YGraphParams& p, PrecisionBits start_precision,
                                     PrecisionBits precision_cap) {
    const SpectralPolynomial sp = build_spectral(p);
    const auto n = static_cast<unsigned>(p.n());
    auto evaluate = [&](PrecisionBits bits) {
        BigFloat product(1L, bits);
        for (const auto& root : polynomial_roots(sp.q, bits)) {
            BigComplex t = chebyshev_T_eval(n, root.value);
            BigFloat factor = abs(2L * t - 2L);
            product *= pow(factor, static_cast<unsigned long>(root.multiplicity));
        }
        BigFloat scale(BigInt(p.n()) * big_pow(BigInt(3), n), bits);
        return scale * product / BigFloat(jump_norm(p.k(), p.l(), p.m()), bits);
    };
    const CertifiedInteger c = round_certified(evaluate, start_precision, precision_cap);
    return TreeCountReport{p, TreeMethod::chebyshev, c.value, c.precision_used};
}

BigInt tree_count_y111_closed(long n) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2");
    const FibLucasPair fl = fib_lucas(static_cast<unsigned>(n));
    const BigInt base = big_pow(BigInt(3), static_cast<unsigned long>(n - 1)) * n;
    if (n % 2 == 1) return base * big_pow(fl.lucas, 4);
    return 25 * base * big_pow(fl.fibonacci, 4);
}

BigInt tree_count_y112_surd(long n) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2");
    const auto un = static_cast<unsigned>(n);
    auto evaluate = [&](PrecisionBits bits) {
        const BigFloat root193 = sqrt(BigFloat(193L, bits));
        const BigFloat w1 = BigFloat(3L, bits) / 2L;
        const BigFloat w2 = (root193 + 1L) / 12L;
        const BigFloat w3 = (BigFloat(1L, bits) - root193) / 12L;
        BigFloat product = (chebyshev_T_eval(un, w1) - 1L) * (chebyshev_T_eval(un, w2) - 1L) *
                           (chebyshev_T_eval(un, w3) - 1L);
        return abs(product) * BigFloat(4 * BigInt(n) * big_pow(BigInt(3), un - 1), bits);
    };
    return round_certified(evaluate).value;
}

BigInt tree_count_y122_surd(long n) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2");
    const auto un = static_cast<unsigned>(n);
    auto evaluate = [&](PrecisionBits bits) {
        const BigFloat r13 = sqrt(BigFloat(13L, bits));
        const BigFloat r5 = sqrt(BigFloat(5L, bits));
        const BigFloat xs[] = {(r13 + 1L) / 2L, (BigFloat(1L, bits) - r13) / 2L, (r5 + 1L) / 2L,
                               (-r5 - 1L) / 2L};
        BigFloat product(1L, bits);
        for (const auto& x : xs) {
            const BigFloat xn = pow(x, un);
            product *= xn + BigFloat(1L, bits) / xn - 2L;
        }
        // n·3^{n-2} = n·3^n / 9 keeps n = 2 integral too.
        return product * BigFloat(BigInt(n) * big_pow(BigInt(3), un), bits) / 9L;
    };
    return round_certified(evaluate).value;
}

std::vector<SquareRow> square_property(long k, long l, long m, long n_from, long n_to) {
    std::vector<SquareRow> rows;
    for (long n = n_from; n <= n_to; ++n) {
        SquareRow row;
        row.n = n;
        try {
            const YGraphParams p = validate_params(n, k, l, m);
            const BigInt tau = tree_count_resultant(p);
            row.tau = tau;
            row.status = SquareStatus::fails;
            if (divides(BigInt(n), tau)) {
                if (auto root = exact_sqrt(divexact(tau, BigInt(n)))) {
                    row.a = *root;
                    row.status = SquareStatus::holds;
                }
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::LoopEdge && e.kind() != ErrorKind::DisconnectedGraph &&
                e.kind() != ErrorKind::BadSize)
                throw;
            row.status = SquareStatus::invalid_params;
            row.note = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ygraph
