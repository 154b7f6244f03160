#include "ygraph/jacobian.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ygraph/chebyshev.hpp"
#include "ygraph/error.hpp"
#include "ygraph/linalg.hpp"

namespace ygraph {

AbelianGroup::AbelianGroup(std::vector<BigInt> cyclic_orders, std::size_t free_rank) : free_rank_(free_rank) {
    for (const auto& d : cyclic_orders)
        if (sgn(d) <= 0) throw std::invalid_argument("cyclic orders must be positive");
    for (auto& d : canonical_divisor_chain(std::move(cyclic_orders)))
        if (d != 1) factors_.push_back(std::move(d));
}

BigInt AbelianGroup::order() const {
    BigInt r = 1;
    for (const auto& d : factors_) r *= d;
    return r;
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) {
    bool first = true;
    for (const auto& d : g.invariant_factors()) {
        os << (first ? "" : " + ") << "Z_" << d;
        first = false;
    }
    if (g.free_rank() > 0) {
        os << (first ? "" : " + ") << "Z";
        if (g.free_rank() > 1) os << '^' << g.free_rank();
        first = false;
    }
    if (first) os << "0";
    return os;
}

std::string to_string(const AbelianGroup& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<BigInt> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return AbelianGroup(std::move(orders), a.free_rank() + b.free_rank());
}

AbelianGroup cokernel_torsion(const IntMatrix& m, std::stop_token stop) {
    SmithForm snf = smith_normal_form(m, stop);
    return AbelianGroup(std::move(snf.factors), snf.cokernel_free_rank);
}

AbelianGroup normalize_cyclic_sum(const std::vector<BigInt>& orders) {
    for (const auto& d : orders)
        if (d < 2) throw std::invalid_argument("cyclic orders must be at least 2");
    return AbelianGroup(orders);
}

bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

AbelianGroup jacobian_of(const YGraphParams& p, JacobianRoute route, std::stop_token stop) {
    const IntMatrix m = route == JacobianRoute::full ? laplacian_full(p) : reduced_matrix(p);
    return cokernel_torsion(m, stop).torsion();
}

FibLucasPair fib_lucas(unsigned n) {
    FibLucasPair r{n, 0, 2};
    BigInt f_next = 1;
    BigInt l_next = 1;
    for (unsigned i = 0; i < n; ++i) {
        BigInt f = f_next + r.fibonacci;
        BigInt l = l_next + r.lucas;
        r.fibonacci = std::move(f_next);
        r.lucas = std::move(l_next);
        f_next = std::move(f);
        l_next = std::move(l);
    }
    return r;
}

AbelianGroup jacobian_y111_closed(long n) {
    if (n < 4)
        throw Error(ErrorKind::OutOfStatedRange,
                    "closed form for Y(n;1,1,1) requires n >= 4, got " + std::to_string(n));
    const FibLucasPair fl = fib_lucas(static_cast<unsigned>(n));
    std::vector<BigInt> orders(static_cast<std::size_t>(n - 4), BigInt(3));
    orders.push_back(BigInt(3 * n));
    if (n % 2 == 1) {
        const BigInt& ln = fl.lucas;
        orders.insert(orders.end(), {ln, ln, 3 * ln, 3 * ln});
    } else {
        const BigInt& fn = fl.fibonacci;
        orders.insert(orders.end(), {fn, 3 * fn, 5 * fn, 15 * fn});
    }
    return normalize_cyclic_sum(orders);
}

AbelianGroup jacobian_y111_decomposed(long n) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2");
    const IntMatrix a = outer_block(n, 1);
    const IntMatrix three_a2_minus_a = BigInt(3) * (a * a - a);
    return direct_sum(cokernel_torsion(three_a2_minus_a), cokernel_torsion(a)).torsion();
}

IntMatrix circulant_tridiag(long a, long b, long n) {
    const auto size = static_cast<std::size_t>(n);
    IntMatrix m = IntMatrix::identity(size) * BigInt(a);
    m += (IntMatrix::shift_power(size, 1) + IntMatrix::shift_power(size, -1)) * BigInt(b);
    return m;
}

AbelianGroup circulant_tridiag_coker(long a, long b, long n) {
    if (n < 2) throw Error(ErrorKind::BadSize, "n must be at least 2");
    if (b == 0) throw std::invalid_argument("b must be nonzero");
    const long g = std::gcd(a, b);
    const BigInt ca(a / g);
    const BigInt cb(b / g);

    IntMatrix closed(2, 2);
    if (n % 2 == 0) {
        const BigInt f = lucas_like(ca, cb, static_cast<unsigned>(n / 2 - 1));
        closed = IntMatrix{{1, 0}, {0, 1}};
        closed(0, 0) = f * ca;
        closed(0, 1) = f * 2 * cb;
        closed(1, 0) = f * 2 * cb;
        closed(1, 1) = f * ca;
    } else {
        const BigInt f = lucas_like(ca, cb, static_cast<unsigned>((n - 1) / 2)) -
                         cb * lucas_like(ca, cb, static_cast<unsigned>((n - 3) / 2));
        closed(0, 0) = f;
        closed(1, 1) = f * (ca + 2 * cb);
    }
    const SmithForm small = smith_normal_form(closed);

    // coker(aI + bT + bT^-1) = coker(g·D) with D ~ diag(1, ..., 1, small).
    std::vector<BigInt> orders(static_cast<std::size_t>(n - 2), BigInt(g));
    for (const auto& d : small.factors) orders.push_back(g * d);
    return AbelianGroup(std::move(orders), small.cokernel_free_rank);
}

}  // namespace ygraph
