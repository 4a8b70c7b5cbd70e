#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "willsym/polynomial.hpp"

namespace willsym {

/// Formal variable tag.  Maps in w stand for functions of z-bar wherever the
/// descent machinery substitutes w = conj(z).
enum class Var { z, w };

/// Quotient of two polynomials over S.  Exact instantiations keep a canonical
/// reduced form: gcd(num, den) = 1 and den monic, so equality and the zero
/// test are decidable.  Floating instantiations skip reduction.
template <class S>
class RationalMap {
public:
    using Traits = scalar_traits<S>;
    using Poly = Polynomial<S>;

    RationalMap() : den_(Poly::constant(Traits::one())) {}
    RationalMap(Poly num, Poly den, Var var = Var::z)
        : num_(std::move(num)), den_(std::move(den)), var_(var) {
        if (den_.is_zero()) throw Error("RationalMap: zero denominator");
        reduce();
    }
    explicit RationalMap(Poly num, Var var = Var::z)
        : num_(std::move(num)), den_(Poly::constant(Traits::one())), var_(var) {}

    static RationalMap constant(S v, Var var = Var::z) {
        return RationalMap(Poly::constant(std::move(v)), var);
    }
    static RationalMap variable(Var var = Var::z) { return RationalMap(Poly::monomial(1), var); }
    static RationalMap monomial(int k, S v, Var var = Var::z) {
        return RationalMap(Poly::monomial(k, std::move(v)), var);
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    Var var() const { return var_; }
    void set_var(Var v) { var_ = v; }

    bool is_zero_exact() const {
        static_assert(Traits::exact, "use rf_is_zero/approx test dispatch");
        return num_.is_zero();
    }

    friend RationalMap operator+(const RationalMap& a, const RationalMap& b) {
        return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_);
    }
    friend RationalMap operator-(const RationalMap& a, const RationalMap& b) {
        return RationalMap(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.var_);
    }
    friend RationalMap operator-(const RationalMap& a) { return RationalMap(-a.num_, a.den_, a.var_); }
    friend RationalMap operator*(const RationalMap& a, const RationalMap& b) {
        return RationalMap(a.num_ * b.num_, a.den_ * b.den_, a.var_);
    }
    friend RationalMap operator*(const S& s, const RationalMap& a) {
        return RationalMap(s * a.num_, a.den_, a.var_);
    }
    friend RationalMap operator/(const RationalMap& a, const RationalMap& b) {
        if (b.num_.is_zero()) throw Error("RationalMap: division by zero map");
        return RationalMap(a.num_ * b.den_, a.den_ * b.num_, a.var_);
    }

    /// Exact equality by cross-multiplication; canonical forms make this a
    /// plain comparison for exact scalars.
    friend bool operator==(const RationalMap& a, const RationalMap& b) {
        if constexpr (Traits::exact) {
            return a.num_ == b.num_ && a.den_ == b.den_;
        } else {
            return a.num_ * b.den_ == b.num_ * a.den_;
        }
    }

    RationalMap derivative() const {
        // (p/q)' = (p'q - pq') / q^2
        return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, var_);
    }

    RationalMap conj_coeffs() const { return RationalMap(num_.conj_coeffs(), den_.conj_coeffs(), var_); }

    Complex eval(Complex zv) const {
        Complex q = den_.eval(zv);
        double scale = den_.max_abs() * std::pow(std::max(1.0, std::abs(zv)), std::max(0, den_.degree()));
        if (std::abs(q) <= 1e-14 * std::max(1.0, scale))
            throw PoleError("rational map evaluated at a pole");
        return num_.eval(zv) / q;
    }

    /// f((a x + b) / (c x + d)) as a rational map in x.
    RationalMap compose_moebius(const S& a, const S& b, const S& c, const S& d) const {
        Poly la({b, a});  // a*x + b
        Poly lc({d, c});  // c*x + d
        int n = std::max(num_.degree(), den_.degree());
        if (n < 0) return RationalMap(Poly{}, Poly::constant(Traits::one()), var_);
        std::vector<Poly> pow_la(n + 1), pow_lc(n + 1);
        pow_la[0] = Poly::constant(Traits::one());
        pow_lc[0] = Poly::constant(Traits::one());
        for (int i = 1; i <= n; ++i) {
            pow_la[i] = pow_la[i - 1] * la;
            pow_lc[i] = pow_lc[i - 1] * lc;
        }
        Poly pnum, pden;
        for (int i = 0; i <= num_.degree(); ++i)
            pnum = pnum + num_.coeff(i) * (pow_la[i] * pow_lc[n - i]);
        for (int i = 0; i <= den_.degree(); ++i)
            pden = pden + den_.coeff(i) * (pow_la[i] * pow_lc[n - i]);
        if (pden.is_zero()) throw Error("RationalMap: Moebius composition hit a constant pole");
        return RationalMap(std::move(pnum), std::move(pden), var_);
    }

private:
    void reduce() {
        if constexpr (Traits::exact) {
            if (num_.is_zero()) {
                den_ = Poly::constant(Traits::one());
                return;
            }
            Poly g = Poly::gcd(num_, den_);
            if (g.degree() > 0) {
                Poly q, r;
                Poly::divrem(num_, g, q, r);
                num_ = q;
                Poly::divrem(den_, g, q, r);
                den_ = q;
            }
            S lead_inv = Traits::one() / den_.leading();
            num_ = lead_inv * num_;
            den_ = lead_inv * den_;
        }
    }

    Poly num_;
    Poly den_;
    Var var_ = Var::z;
};

/// z -> (a z + b)/(c z + d), or the same applied to conj(z) when
/// antiholomorphic.  ad - bc must not vanish.
template <class S>
struct MoebiusSymmetry {
    using Traits = scalar_traits<S>;

    S a, b, c, d;
    bool antiholomorphic = false;

    MoebiusSymmetry(S a_, S b_, S c_, S d_, bool anti)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), antiholomorphic(anti) {
        if (Traits::is_zero(a * d - b * c)) throw Error("MoebiusSymmetry: ad - bc = 0");
    }

    static MoebiusSymmetry conjugation() {  // z -> conj(z)
        return {S(1), S(0), S(0), S(1), true};
    }
    static MoebiusSymmetry antipodal() {  // z -> -1/conj(z)
        return {S(0), S(-1), S(1), S(0), true};
    }

    Complex apply(Complex z) const {
        if (antiholomorphic) z = std::conj(z);
        return (Traits::to_complex(a) * z + Traits::to_complex(b)) /
               (Traits::to_complex(c) * z + Traits::to_complex(d));
    }

    MoebiusSymmetry conj_coeffs() const {
        return {Traits::conj(a), Traits::conj(b), Traits::conj(c), Traits::conj(d), antiholomorphic};
    }

    /// Composition as transformations: (m1 * m2)(z) = m1(m2(z)).
    friend MoebiusSymmetry operator*(const MoebiusSymmetry& m1, const MoebiusSymmetry& m2) {
        MoebiusSymmetry r2 = m1.antiholomorphic ? m2.conj_coeffs() : m2;
        return {m1.a * r2.a + m1.b * r2.c, m1.a * r2.b + m1.b * r2.d,
                m1.c * r2.a + m1.d * r2.c, m1.c * r2.b + m1.d * r2.d,
                m1.antiholomorphic != m2.antiholomorphic};
    }

    bool is_identity() const {
        if (antiholomorphic) return false;
        if constexpr (Traits::exact) {
            return Traits::is_zero(b) && Traits::is_zero(c) && a == d;
        } else {
            double s = std::max(std::abs(Traits::to_complex(a)), std::abs(Traits::to_complex(d)));
            return std::abs(Traits::to_complex(b)) < 1e-12 * s &&
                   std::abs(Traits::to_complex(c)) < 1e-12 * s &&
                   std::abs(Traits::to_complex(a) - Traits::to_complex(d)) < 1e-12 * s;
        }
    }

    /// Order under iterated composition, or nullopt when none is found
    /// within max_order (e.g. the translation z -> conj(z) + c0).
    std::optional<int> order(int max_order = 16) const {
        MoebiusSymmetry acc = *this;
        for (int k = 1; k <= max_order; ++k) {
            if (acc.is_identity()) return k;
            acc = *this * acc;
        }
        return std::nullopt;
    }
};

// --- ratfun operations ------------------------------------------------------

template <class S>
Complex rf_eval(const RationalMap<S>& f, Complex z) {
    return f.eval(z);
}

template <class S>
RationalMap<S> rf_derivative(const RationalMap<S>& f) {
    return f.derivative();
}

/// Exact zero test.  Floating mode must use rf_is_zero_approx instead.
template <class S>
bool rf_is_zero(const RationalMap<S>& f) {
    if constexpr (scalar_traits<S>::exact) {
        return f.num().is_zero();
    } else {
        throw ApproxModeError("rf_is_zero requires exact mode; use rf_is_zero_approx");
    }
}

/// Floating-mode zero test: sampled values below tol at 50
/// Chebyshev-distributed points on the circles |z| = 1/2 and |z| = 2
/// (avoiding accidental zeros at special radii).  Near-pole samples are
/// skipped; the criterion is on |f(z)| itself, since the coefficients of a
/// numerically-cancelled residual carry no usable scale.
template <class S>
bool rf_is_zero_approx(const RationalMap<S>& f, double tol = 1e-10) {
    double dscale = std::max(f.den().max_abs(), 1e-300);
    for (int ring = 0; ring < 2; ++ring) {
        double radius = ring == 0 ? 0.5 : 2.0;
        for (int k = 0; k < 25; ++k) {
            double theta = M_PI * (2.0 * k + 1.0) / 50.0;
            Complex z = radius * Complex(std::cos(theta), std::sin(theta));
            Complex qn = f.num().eval(z);
            Complex qd = f.den().eval(z);
            double dpow = std::pow(std::max(1.0, std::abs(z)), std::max(0, f.den().degree()));
            if (std::abs(qd) < 1e-8 * dscale * dpow) continue;  // near-pole sample, skip
            if (std::abs(qn / qd) > tol) return false;
        }
    }
    return true;
}

/// Zero test dispatching on the scalar mode.
template <class S>
bool is_zero_map(const RationalMap<S>& f, double tol = 1e-10) {
    if constexpr (scalar_traits<S>::exact) {
        (void)tol;
        return f.num().is_zero();
    } else {
        return rf_is_zero_approx(f, tol);
    }
}

/// z -> conj(f(mu(z))) as a rational map in z: conjugate the coefficients of
/// f and of mu, then compose with the resulting holomorphic Moebius map.
/// Every symmetry condition in the descent machinery normalizes through here.
template <class S>
RationalMap<S> mu_pullback_conjugate(const RationalMap<S>& f, const MoebiusSymmetry<S>& mu) {
    if (!mu.antiholomorphic)
        throw Error("mu_pullback_conjugate requires an antiholomorphic symmetry");
    using Traits = scalar_traits<S>;
    RationalMap<S> fc = f.conj_coeffs();
    return fc.compose_moebius(Traits::conj(mu.a), Traits::conj(mu.b), Traits::conj(mu.c),
                              Traits::conj(mu.d));
}

/// f(m(x)) for the holomorphic Moebius map underlying mu (mu(z) = m(conj z));
/// used when identities are rewritten in the variable w = conj(z).
template <class S>
RationalMap<S> compose_antiholomorphic_part(const RationalMap<S>& f, const MoebiusSymmetry<S>& mu) {
    if (!mu.antiholomorphic)
        throw Error("compose_antiholomorphic_part requires an antiholomorphic symmetry");
    return f.compose_moebius(mu.a, mu.b, mu.c, mu.d);
}

using RationalMapX = RationalMap<SurdScalar>;
using MoebiusX = MoebiusSymmetry<SurdScalar>;
using RationalMapD = RationalMap<Complex>;
using MoebiusD = MoebiusSymmetry<Complex>;

}  // namespace willsym
