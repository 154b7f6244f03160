#include <algorithm>

#include "ygraph/error.hpp"
#include "ygraph/int_matrix.hpp"
#include "ygraph/linalg.hpp"
#include "ygraph/polynomial.hpp"

namespace ygraph {

namespace {

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    IntMatrix s(m + n, m + n);
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g, highest
    // coefficient first.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f.coefficients()[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g.coefficients()[n - i];
    return bareiss_determinant(s);
}

IntPoly divide_by_content(const IntPoly& p, const BigInt& c) {
    std::vector<BigInt> r;
    r.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) r.push_back(divexact(a, c));
    return IntPoly(std::move(r));
}

// Subresultant pseudo-remainder sequence (Collins/Brown), following the
// classical formulation with running scalars g and h.
BigInt resultant_subresultant(IntPoly a, IntPoly b) {
    const BigInt ca = content(a);
    const BigInt cb = content(b);
    BigInt t = big_pow(ca, static_cast<unsigned long>(b.degree())) * big_pow(cb, static_cast<unsigned long>(a.degree()));
    a = divide_by_content(a, ca);
    b = divide_by_content(b, cb);

    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
    }

    BigInt g = 1;
    BigInt h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        const BigInt divisor = g * big_pow(h, static_cast<unsigned long>(delta));
        b = divide_by_content(r, divisor);
        g = a.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divexact(big_pow(g, static_cast<unsigned long>(delta)), big_pow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.is_zero()) return 0;
        if (b.degree() == 0) break;
    }
    const auto da = static_cast<unsigned long>(a.degree());
    h = divexact(big_pow(b.leading(), da), big_pow(h, da - 1));
    return s * t * h;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g, ResultantMethod method) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
    if (f.degree() == 0) return big_pow(f.leading(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return big_pow(g.leading(), static_cast<unsigned long>(f.degree()));
    return method == ResultantMethod::sylvester ? resultant_sylvester(f, g) : resultant_subresultant(f, g);
}

}  // namespace ygraph
