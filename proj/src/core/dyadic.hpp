#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace betarec {

// Binary fixed-point value m * 2^e with arbitrary-size mantissa.
// All arithmetic here is exact unless a rounding variant is called.
struct Dyadic {
    mpz_class m;
    long e = 0;

    Dyadic() = default;
    Dyadic(long v) : m(v) {}
    Dyadic(mpz_class mm, long ee) : m(std::move(mm)), e(ee) { normalize(); }

    static Dyadic pow2(long k) { return Dyadic(mpz_class(1), k); }

    bool is_zero() const { return sgn(m) == 0; }
    int sign() const { return sgn(m); }

    // strip trailing zero bits so equal values share a representation
    void normalize();

    size_t mant_bits() const;  // bit length of |m|, 0 for zero
    // smallest E with |value| < 2^E; meaningless for zero
    long mag_upper() const { return (long)mant_bits() + e; }
    double log2_approx() const;  // log2 |value|; -HUGE_VAL for zero
    double to_double() const;

    Dyadic neg() const { return Dyadic(-m, e); }
    Dyadic abs() const { return Dyadic(::abs(m), e); }
    mpz_class floor() const;
    mpz_class ceil() const;

    std::string str() const;  // "m" or "m*2^e"
};

Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_sub(const Dyadic& a, const Dyadic& b);
Dyadic dy_mul(const Dyadic& a, const Dyadic& b);
int dy_cmp(const Dyadic& a, const Dyadic& b);
int cmp_dyadic_mpq(const Dyadic& a, const mpq_class& q);

// Truncate toward zero to at most prec mantissa bits; |a - result| <= *err.
Dyadic dy_round(const Dyadic& a, unsigned prec, Dyadic* err);
Dyadic dy_round_down(const Dyadic& a, unsigned prec);  // toward -inf
Dyadic dy_round_up(const Dyadic& a, unsigned prec);    // toward +inf

// Directed quotients to roughly prec bits.
Dyadic dy_div_down(const Dyadic& a, const Dyadic& b, unsigned prec);
Dyadic dy_div_up(const Dyadic& a, const Dyadic& b, unsigned prec);

}  // namespace betarec
