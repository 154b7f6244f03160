#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ygraph/bigfloat.hpp"
#include "ygraph/bigint.hpp"

namespace ygraph {

/// Univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no stored coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(const BigInt& c);
    /// c·x^degree
    static IntPoly monomial(const BigInt& c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }
    /// Coefficient of x^i (zero beyond the degree).
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& scalar);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    BigInt operator()(const BigInt& x) const;
    BigFloat operator()(const BigFloat& x) const;
    BigComplex operator()(const BigComplex& x) const;

    IntPoly derivative() const;
    /// this(inner(x))
    IntPoly compose(const IntPoly& inner) const;
    /// Multiplies by x^k.
    IntPoly shifted(std::size_t k) const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Exact quotient f / g over Z. Throws Error{ZeroPolynomial} if g = 0 and
/// Error{InexactDivision} if g does not divide f in Z[x].
IntPoly poly_exact_div(const IntPoly& f, const IntPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1)·f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

BigInt content(const IntPoly& p);
/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Primitive gcd over Z[x] with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

/// Square-free decomposition f = c · Π factor_i^multiplicity_i with pairwise
/// coprime primitive square-free factors (Yun's algorithm).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

enum class ResultantMethod { sylvester, subresultant };

/// Res(f, g) = lc(f)^deg g · Π_{f(α)=0} g(α). Throws Error{ZeroPolynomial}.
BigInt resultant(const IntPoly& f, const IntPoly& g, ResultantMethod method = ResultantMethod::sylvester);

/// Laurent polynomial Σ c_i z^(min_degree + i).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long min_degree, std::vector<BigInt> coefficients);

    static LaurentPoly constant(const BigInt& c);
    /// c·z^e
    static LaurentPoly monomial(const BigInt& c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const { return min_degree_; }
    long max_degree() const { return min_degree_ + static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(long e) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, long s);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// z^shift · this as an ordinary polynomial; requires shift + min_degree >= 0.
    IntPoly times_power(long shift) const;

private:
    void trim();
    long min_degree_ = 0;
    std::vector<BigInt> coeffs_;
};

}  // namespace ygraph
