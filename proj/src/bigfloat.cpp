#include "ygraph/bigfloat.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "ygraph/error.hpp"

namespace ygraph {

namespace {

PrecisionBits widest(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

// Raises the precision of `x` in place (keeping its value) when needed.
void widen(BigFloat& x, PrecisionBits bits) {
    if (x.precision() < bits) mpfr_prec_round(x.get(), bits, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(PrecisionBits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, PrecisionBits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, PrecisionBits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, PrecisionBits bits) {
    mpfr_init2(value_, bits);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, PrecisionBits bits) {
    mpfr_init2(value_, bits);
    if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Steal the limbs and leave `other` as a valid minimal-precision zero.
    *value_ = *other.value_;
    mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(PrecisionBits bits) const {
    BigFloat r(bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    widen(*this, rhs.precision());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    widen(*this, rhs.precision());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    widen(*this, rhs.precision());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    widen(*this, rhs.precision());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigFloat operator+(BigFloat lhs, long rhs) {
    mpfr_add_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
    return lhs;
}

BigFloat operator-(BigFloat lhs, long rhs) {
    mpfr_sub_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
    return lhs;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

std::partial_ordering operator<=>(const BigFloat& a, long b) {
    if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigInt BigFloat::round_to_integer() const {
    if (!is_finite()) throw Error(ErrorKind::NoConvergence, "cannot round a non-finite value");
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), value_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    const int needed = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
    std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
    return std::string(buf.data());
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, unsigned long e) {
    BigFloat r(x.precision());
    mpfr_pow_ui(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(widest(x, y));
    mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

BigFloat pi(PrecisionBits bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat exp2_int(long e, PrecisionBits bits) {
    BigFloat r(1L, bits);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigFloat r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    // Smith's algorithm avoids overflow in the denominator.
    if (abs(rhs.re) >= abs(rhs.im)) {
        BigFloat ratio = rhs.im / rhs.re;
        BigFloat denom = rhs.re + rhs.im * ratio;
        BigFloat r = (re + im * ratio) / denom;
        im = (im - re * ratio) / denom;
        re = std::move(r);
    } else {
        BigFloat ratio = rhs.re / rhs.im;
        BigFloat denom = rhs.re * ratio + rhs.im;
        BigFloat r = (re * ratio + im) / denom;
        im = (im * ratio - re) / denom;
        re = std::move(r);
    }
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

}  // namespace ygraph
