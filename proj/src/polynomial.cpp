#include "ygraph/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "ygraph/error.hpp"

namespace ygraph {

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

BigInt IntPoly::operator()(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

BigFloat IntPoly::operator()(const BigFloat& x) const {
    BigFloat r(0L, x.precision());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= x;
        r += BigFloat(*it, x.precision());
    }
    return r;
}

BigComplex IntPoly::operator()(const BigComplex& x) const {
    BigComplex r(x.precision());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r *= x;
        r.re += BigFloat(*it, x.precision());
    }
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * inner + IntPoly::constant(*it);
    return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(k);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
        const BigInt mag = abs(c);
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << (mag != 1 ? "*x" : "x");
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return os;
}

IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw Error(ErrorKind::InexactDivision, "divisor has larger degree than dividend");

    std::vector<BigInt> rem = f.coefficients();
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<BigInt> quot(rem.size() - dg);
    const BigInt& lead = g.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dg];
        if (sgn(top) == 0) continue;
        if (!divides(lead, top)) throw Error(ErrorKind::InexactDivision, "quotient is not integral");
        quot[k] = divexact(top, lead);
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= quot[k] * g.coefficients()[j];
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw Error(ErrorKind::InexactDivision, "nonzero remainder");
    return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo-remainder by the zero polynomial");
    if (f.degree() < g.degree()) return f;
    IntPoly r = f;
    long e = f.degree() - g.degree() + 1;
    const BigInt& lead = g.leading();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        IntPoly s = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - g.degree()));
        r = r * lead - s * g;
        --e;
    }
    return r * big_pow(lead, static_cast<unsigned long>(e));
}

BigInt content(const IntPoly& p) {
    BigInt c = 0;
    for (const auto& a : p.coefficients()) c = big_gcd(c, a);
    return c;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    BigInt c = content(p);
    if (sgn(p.leading()) < 0) c = -c;
    std::vector<BigInt> r;
    r.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) r.push_back(divexact(a, c));
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free decomposition of zero");
    std::vector<std::pair<IntPoly, int>> result;
    const IntPoly p = primitive_part(f);
    if (p.degree() < 1) return result;

    IntPoly repeated = poly_gcd(p, p.derivative());
    IntPoly distinct = primitive_part(poly_exact_div(p, repeated));
    for (int multiplicity = 1; distinct.degree() > 0; ++multiplicity) {
        IntPoly higher = poly_gcd(repeated, distinct);
        IntPoly exact = primitive_part(poly_exact_div(distinct, higher));
        if (exact.degree() > 0) result.emplace_back(std::move(exact), multiplicity);
        repeated = primitive_part(poly_exact_div(repeated, higher));
        distinct = std::move(higher);
    }
    return result;
}

LaurentPoly::LaurentPoly(long min_degree, std::vector<BigInt> coefficients)
    : min_degree_(min_degree), coeffs_(std::move(coefficients)) {
    trim();
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, long e) { return LaurentPoly(e, {c}); }

void LaurentPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    std::size_t lead_zeros = 0;
    while (lead_zeros < coeffs_.size() && sgn(coeffs_[lead_zeros]) == 0) ++lead_zeros;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead_zeros));
    min_degree_ = coeffs_.empty() ? 0 : min_degree_ + static_cast<long>(lead_zeros);
}

BigInt LaurentPoly::coeff(long e) const {
    if (is_zero() || e < min_degree_ || e > max_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(e - min_degree_)];
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, int sign_b) {
    if (a.is_zero() && b.is_zero()) return {};
    const long lo = a.is_zero() ? b.min_degree() : (b.is_zero() ? a.min_degree() : std::min(a.min_degree(), b.min_degree()));
    const long hi = a.is_zero() ? b.max_degree() : (b.is_zero() ? a.max_degree() : std::max(a.max_degree(), b.max_degree()));
    std::vector<BigInt> r(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        r[static_cast<std::size_t>(e - lo)] = sign_b > 0 ? BigInt(a.coeff(e) + b.coeff(e)) : BigInt(a.coeff(e) - b.coeff(e));
    }
    return LaurentPoly(lo, std::move(r));
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return *this = combine(*this, rhs, +1); }

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this = combine(*this, rhs, -1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.min_degree_ + b.min_degree_, std::move(r));
}

LaurentPoly operator*(LaurentPoly a, long s) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
}

IntPoly LaurentPoly::times_power(long shift) const {
    if (is_zero()) return {};
    if (min_degree_ + shift < 0) throw std::invalid_argument("shift leaves negative powers");
    return IntPoly(coeffs_).shifted(static_cast<std::size_t>(min_degree_ + shift));
}

}  // namespace ygraph
