#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ygraph {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Sign of |a| - |b|.
inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact quotient; caller guarantees divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& v) {
    return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Integer square root when `v` is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

}  // namespace ygraph
