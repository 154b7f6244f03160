#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "ygraph/bigint.hpp"

namespace ygraph {

/// Working precision in bits.
using PrecisionBits = mpfr_prec_t;

inline constexpr PrecisionBits kDefaultPrecision = 64;

/*
 * Arbitrary-precision binary floating point on top of MPFR.
 *
 * Every value owns its precision. Binary operations produce a result at the
 * larger of the two operand precisions, so mixing values never loses bits.
 * Plain integers and doubles take on the precision of the BigFloat they are
 * combined with. All operations round to nearest.
 */
class BigFloat {
public:
    explicit BigFloat(PrecisionBits bits = kDefaultPrecision);
    BigFloat(long value, PrecisionBits bits);
    BigFloat(int value, PrecisionBits bits) : BigFloat(static_cast<long>(value), bits) {}
    BigFloat(double value, PrecisionBits bits);
    BigFloat(const BigInt& value, PrecisionBits bits);
    /// Parses a decimal literal such as "1.5" or "-3e-4".
    BigFloat(const std::string& decimal, PrecisionBits bits);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    PrecisionBits precision() const { return mpfr_get_prec(value_); }
    /// Copy rounded to `bits` (may increase or decrease precision).
    BigFloat with_precision(PrecisionBits bits) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator*=(long rhs);
    BigFloat& operator/=(long rhs);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
    friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
    friend BigFloat operator*(long lhs, BigFloat rhs) { return rhs *= lhs; }
    friend BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }
    friend BigFloat operator+(BigFloat lhs, long rhs);
    friend BigFloat operator-(BigFloat lhs, long rhs);

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, long b);
    friend std::partial_ordering operator<=>(const BigFloat& a, long b);

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Nearest integer (ties away from zero are irrelevant at our scales).
    BigInt round_to_integer() const;
    /// Decimal rendering with `digits` significant digits.
    std::string to_string(int digits = 20) const;

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat pow(const BigFloat& x, unsigned long e);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pi(PrecisionBits bits);
/// 2^e at the given precision.
BigFloat exp2_int(long e, PrecisionBits bits);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

/// Complex number with BigFloat parts; both parts share a precision.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(PrecisionBits bits = kDefaultPrecision) : re(0L, bits), im(0L, bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0L, r.precision()) {}

    PrecisionBits precision() const { return re.precision(); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);
    BigComplex& operator*=(const BigFloat& rhs);
    BigComplex& operator*=(long rhs);
    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
    friend BigComplex operator*(long b, BigComplex a) { return a *= b; }
    friend BigComplex operator-(BigComplex a, long b) {
        a.re = a.re - b;
        return a;
    }
};

BigFloat abs(const BigComplex& z);
/// |z|^2
BigFloat norm(const BigComplex& z);
BigComplex conj(const BigComplex& z);

}  // namespace ygraph
