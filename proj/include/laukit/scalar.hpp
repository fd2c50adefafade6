#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace laukit {

using Integer = mpz_class;

/// Unbounded rational backed by GMP. Every value is kept canonical (lowest
/// terms, positive denominator), which is exactly the invariant the scalar
/// type needs: equality is structural equality of reduced forms. All
/// construction goes through make_rational so the canonical form can never
/// be skipped; GMP's arithmetic preserves it from there.
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

/// Exact element of Q(i) = { re + im*i }, the subfield of C this library
/// computes in. All algebraic checks are tolerance-free because arithmetic
/// here never rounds.
struct Scalar {
    Rational re{0};
    Rational im{0};

    Scalar() = default;
    Scalar(int n) : re(n) {}                       // NOLINT: intentionally implicit
    Scalar(long n) : re(n) {}                      // NOLINT
    Scalar(Rational r) : re(std::move(r)) {}       // NOLINT
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar{}; }
    static Scalar one() { return Scalar{1}; }
    static Scalar imaginary_unit() { return Scalar{Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar{re, -im}; }

    /// |z|^2 = re^2 + im^2, exact.
    Rational norm_sq() const { return re * re + im * im; }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // real factors dominate on 0/1 structure tensors; skip the full
        // complex product when either side has no imaginary part
        if (o.im == 0) {
            re *= o.re;
            im *= o.re;
            return *this;
        }
        if (im == 0) {
            im = re * o.im;
            re *= o.re;
            return *this;
        }
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    bool is_one() const { return re == 1 && im == 0; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar{-a.re, -a.im}; }
};

/// Canonical text form, the same grammar the file formats use:
///   "0", "3/2", "-1", "i", "-i", "2i", "-3/4i", "-1+2i", "1/2-3/4i".
/// Rationals appear reduced with the sign on the numerator.
std::string to_string(const Scalar& s);

/// Approximate value for the float-only norm checks.
double to_double(const Rational& r);

/// |z| as a double (the only place square roots enter the library).
double abs_double(const Scalar& s);

}  // namespace laukit
