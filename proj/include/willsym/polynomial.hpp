#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "willsym/scalars.hpp"

namespace willsym {

inline constexpr int kMaxPolyDegree = 8192;

/// Dense univariate polynomial over S, coefficients in ascending order.
/// The zero polynomial is the empty coefficient list.
template <class S>
class Polynomial {
public:
    using Traits = scalar_traits<S>;

    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(S v) { return Polynomial(std::vector<S>{std::move(v)}); }
    static Polynomial monomial(int degree, S v = Traits::one()) {
        std::vector<S> c(degree + 1, Traits::zero());
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }

    const std::vector<S>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Traits::zero();
        return c_[k];
    }
    S leading() const { return c_.empty() ? Traits::zero() : c_.back(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), Traits::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), Traits::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<S> c = a.c_;
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.degree() + b.degree() > kMaxPolyDegree)
            throw DegreeCapError("polynomial product exceeds degree cap");
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const S& s, const Polynomial& a) {
        std::vector<S> c = a.c_;
        for (auto& v : c) v = s * v;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> c(c_.size() - 1, Traits::zero());
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = S(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(c));
    }

    Polynomial conj_coeffs() const {
        std::vector<S> c = c_;
        for (auto& v : c) v = Traits::conj(v);
        return Polynomial(std::move(c));
    }

    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + Traits::to_complex(*it);
        return acc;
    }

    S eval_scalar(const S& z) const {
        S acc = Traits::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Largest coefficient magnitude, for floating-mode residual scales.
    double max_abs() const {
        double m = 0.0;
        for (const auto& v : c_) m = std::max(m, std::abs(Traits::to_complex(v)));
        return m;
    }

    /// Euclidean division, exact scalars only.
    static void divrem(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
        static_assert(Traits::exact, "polynomial division requires exact scalars");
        if (b.is_zero()) throw Error("polynomial division by zero");
        std::vector<S> rem = a.c_;
        std::vector<S> quot;
        const int db = b.degree();
        const S lead_inv = Traits::one() / b.leading();
        int dr = static_cast<int>(rem.size()) - 1;
        while (dr >= db) {
            while (dr >= 0 && Traits::is_zero(rem[dr])) --dr;
            if (dr < db) break;
            S f = rem[dr] * lead_inv;
            int shift = dr - db;
            if (static_cast<int>(quot.size()) < shift + 1) quot.resize(shift + 1, Traits::zero());
            quot[shift] = f;
            for (int i = 0; i <= db; ++i) rem[shift + i] = rem[shift + i] - f * b.c_[i];
            rem[dr] = Traits::zero();
            --dr;
        }
        q = Polynomial(std::move(quot));
        r = Polynomial(std::move(rem));
    }

    /// Monic gcd; degree 0 result is normalized to 1.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        static_assert(Traits::exact, "polynomial gcd requires exact scalars");
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        while (!b.is_zero()) {
            Polynomial q, r;
            divrem(a, b, q, r);
            a = std::move(b);
            b = r.monic();  // rescale each step to tame coefficient growth
        }
        return a.monic();
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        S inv = Traits::one() / leading();
        return inv * (*this);
    }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
        if (static_cast<int>(c_.size()) - 1 > kMaxPolyDegree)
            throw DegreeCapError("polynomial exceeds degree cap");
    }

    std::vector<S> c_;
};

}  // namespace willsym
