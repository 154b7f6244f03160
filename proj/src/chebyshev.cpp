#include "ygraph/chebyshev.hpp"

#include <bit>
#include <stdexcept>

namespace ygraph {

IntPoly chebyshev_T(unsigned j) {
    IntPoly previous{1};
    if (j == 0) return previous;
    IntPoly current{0, 1};
    const IntPoly two_w{0, 2};
    for (unsigned i = 1; i < j; ++i) {
        IntPoly next = two_w * current - previous;
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

BigFloat chebyshev_T_eval(unsigned j, const BigFloat& x, ChebyshevEval how) {
    const PrecisionBits bits = x.precision();
    if (how == ChebyshevEval::closed_form) {
        if (abs(x) <= 1L) throw std::domain_error("closed-form Chebyshev evaluation needs |x| > 1");
        BigFloat root = sqrt(x * x - 1L);
        BigFloat z = x.sign() > 0 ? x + root : x - root;
        BigFloat zj = pow(z, j);
        return (zj + BigFloat(1L, bits) / zj) / 2L;
    }
    BigFloat previous(1L, bits);
    if (j == 0) return previous;
    BigFloat current = x;
    for (unsigned i = 1; i < j; ++i) {
        BigFloat next = 2L * x * current - previous;
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

BigComplex chebyshev_T_eval(unsigned j, const BigComplex& w) {
    const PrecisionBits bits = w.precision();
    BigComplex one(BigFloat(1L, bits));
    if (j == 0) return one;
    // Invariant: (lo, hi) = (T_i, T_{i+1}) for the prefix i of j's bits.
    BigComplex lo = one;
    BigComplex hi = w;
    for (int bit = std::bit_width(j) - 1; bit >= 0; --bit) {
        BigComplex cross = 2L * lo * hi - w;
        if ((j >> bit) & 1U) {
            hi = 2L * hi * hi - 1L;
            lo = std::move(cross);
        } else {
            lo = 2L * lo * lo - 1L;
            hi = std::move(cross);
        }
    }
    return lo;
}

BigInt lucas_like(const BigInt& a, const BigInt& b, unsigned j) {
    BigInt previous = 1;
    if (j == 0) return previous;
    BigInt current = a;
    const BigInt b2 = b * b;
    for (unsigned i = 1; i < j; ++i) {
        BigInt next = a * current - b2 * previous;
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

}  // namespace ygraph
