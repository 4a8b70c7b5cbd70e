#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "willsym/errors.hpp"

namespace willsym {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Element of Q(i): re + i*im with exact rational components.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r) : re(r) {}
    GaussRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational conjugate() const { return {re, -im}; }
    Complex to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error("GaussRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool is_square_free(unsigned long d) {
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

/// n = s^2 * d with d square-free; returns (s, d).
inline std::pair<unsigned long, unsigned long> extract_square(unsigned long n) {
    unsigned long s = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            s *= p;
        }
    }
    return {s, n};
}

/// Element of Q(i)(sqrt(d)): rat + surd*sqrt(d), rat and surd in Q(i),
/// d a square-free nonnegative integer.  d = 0 encodes a plain Gaussian
/// rational (surd part forced to zero).  Mixing two distinct nonzero
/// radicands is a FieldMixError; values with d = 0 promote freely.
class SurdScalar {
public:
    SurdScalar() = default;
    SurdScalar(long v) : rat_(v) {}
    SurdScalar(Rational v) : rat_(std::move(v)) {}
    SurdScalar(GaussRational v) : rat_(std::move(v)) {}
    SurdScalar(GaussRational rat, GaussRational surd, unsigned long d)
        : rat_(std::move(rat)), surd_(std::move(surd)), d_(d) {
        if (d_ != 0 && !is_square_free(d_))
            throw Error("SurdScalar: radicand " + std::to_string(d_) + " is not square-free");
        normalize();
    }

    /// sqrt(n) for any nonnegative integer, with the square part extracted
    /// so the stored radicand stays square-free.
    static SurdScalar sqrt_d(unsigned long n) {
        if (n == 0) return SurdScalar(0);
        auto [s, d] = extract_square(n);
        if (d == 1) return SurdScalar(GaussRational(Rational(static_cast<long>(s))));
        return SurdScalar(GaussRational(0), GaussRational(Rational(static_cast<long>(s))), d);
    }
    static SurdScalar i() { return SurdScalar(GaussRational(Rational(0), Rational(1))); }

    const GaussRational& rat() const { return rat_; }
    const GaussRational& surd() const { return surd_; }
    unsigned long radicand() const { return d_; }

    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

    SurdScalar conjugate() const { return SurdScalar(rat_.conjugate(), surd_.conjugate(), d_); }

    Complex to_complex() const {
        Complex v = rat_.to_complex();
        if (!surd_.is_zero()) v += surd_.to_complex() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    friend SurdScalar operator+(const SurdScalar& a, const SurdScalar& b) {
        unsigned long d = common_radicand(a, b);
        return SurdScalar(a.rat_ + b.rat_, a.surd_ + b.surd_, d);
    }
    friend SurdScalar operator-(const SurdScalar& a, const SurdScalar& b) {
        unsigned long d = common_radicand(a, b);
        return SurdScalar(a.rat_ - b.rat_, a.surd_ - b.surd_, d);
    }
    friend SurdScalar operator-(const SurdScalar& a) { return SurdScalar(-a.rat_, -a.surd_, a.d_); }
    friend SurdScalar operator*(const SurdScalar& a, const SurdScalar& b) {
        unsigned long d = common_radicand(a, b);
        GaussRational dd{Rational(static_cast<long>(d))};
        return SurdScalar(a.rat_ * b.rat_ + a.surd_ * b.surd_ * dd,
                          a.rat_ * b.surd_ + a.surd_ * b.rat_, d);
    }
    friend SurdScalar operator/(const SurdScalar& a, const SurdScalar& b) { return a * b.inverse(); }

    SurdScalar inverse() const {
        if (is_zero()) throw Error("SurdScalar: division by zero");
        // 1/(g + s*sqrt(d)) = (g - s*sqrt(d)) / (g^2 - s^2 d); the norm is
        // nonzero because sqrt(d) is irrational over Q(i) for square-free d > 1.
        GaussRational dd{Rational(static_cast<long>(d_))};
        GaussRational norm = rat_ * rat_ - surd_ * surd_ * dd;
        if (norm.is_zero()) throw Error("SurdScalar: zero norm in inversion");
        return SurdScalar(rat_ / norm, -(surd_ / norm), d_);
    }

    SurdScalar& operator+=(const SurdScalar& o) { return *this = *this + o; }
    SurdScalar& operator-=(const SurdScalar& o) { return *this = *this - o; }
    SurdScalar& operator*=(const SurdScalar& o) { return *this = *this * o; }
    SurdScalar& operator/=(const SurdScalar& o) { return *this = *this / o; }

    friend bool operator==(const SurdScalar& a, const SurdScalar& b) {
        if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) return false;
        return a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const SurdScalar& a, const SurdScalar& b) { return !(a == b); }

private:
    static unsigned long common_radicand(const SurdScalar& a, const SurdScalar& b) {
        if (a.d_ == 0) return b.d_;
        if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
        throw FieldMixError("cannot mix sqrt(" + std::to_string(a.d_) + ") with sqrt(" +
                            std::to_string(b.d_) + ")");
    }

    void normalize() {
        if (surd_.is_zero()) {
            d_ = 0;
        } else if (d_ == 0) {
            surd_ = GaussRational(0);
        } else if (d_ == 1) {
            rat_ = rat_ + surd_;
            surd_ = GaussRational(0);
            d_ = 0;
        }
    }

    GaussRational rat_;
    GaussRational surd_;
    unsigned long d_ = 0;
};

// Uniform scalar access for the templated polynomial/rational-map layer.
// Exact instantiations use SurdScalar; floating ones use std::complex<double>.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<SurdScalar> {
    static constexpr bool exact = true;
    static SurdScalar zero() { return SurdScalar(); }
    static SurdScalar one() { return SurdScalar(1); }
    static bool is_zero(const SurdScalar& s) { return s.is_zero(); }
    static SurdScalar conj(const SurdScalar& s) { return s.conjugate(); }
    static Complex to_complex(const SurdScalar& s) { return s.to_complex(); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& s) { return s == Complex(0.0, 0.0); }
    static Complex conj(const Complex& s) { return std::conj(s); }
    static Complex to_complex(const Complex& s) { return s; }
};

template <class S>
inline constexpr bool is_exact_scalar_v = scalar_traits<S>::exact;

}  // namespace willsym
