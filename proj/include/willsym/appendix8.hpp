#pragma once

#include <map>

#include "willsym/potentials.hpp"

namespace willsym {

/// Laurent polynomial in the loop parameter whose coefficients are exact
/// rational maps in one formal variable w (standing for conj z; z-dependent
/// maps enter pre-composed with mu so that everything is rational in w).
class LaurentRm {
public:
    LaurentRm() = default;
    static LaurentRm term(int k, RationalMapX f);
    static LaurentRm one();

    const std::map<int, RationalMapX>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    RationalMapX coeff(int k) const;

    friend LaurentRm operator+(const LaurentRm& a, const LaurentRm& b);
    friend LaurentRm operator-(const LaurentRm& a, const LaurentRm& b);
    friend LaurentRm operator-(const LaurentRm& a);
    friend LaurentRm operator*(const LaurentRm& a, const LaurentRm& b);
    friend bool operator==(const LaurentRm& a, const LaurentRm& b);

    int max_map_degree() const;

private:
    void prune();
    std::map<int, RationalMapX> terms_;
};

/// 8x8 matrix over LaurentRm; the appendix's upper/lower triangular objects
/// and their products.
class BiRationalLaurentMatrix {
public:
    BiRationalLaurentMatrix() = default;
    static BiRationalLaurentMatrix identity();

    LaurentRm& at(int i, int j) { return e_[i * 8 + j]; }
    const LaurentRm& at(int i, int j) const { return e_[i * 8 + j]; }

    BiRationalLaurentMatrix transpose() const;
    friend BiRationalLaurentMatrix operator*(const BiRationalLaurentMatrix& a,
                                             const BiRationalLaurentMatrix& b);
    friend bool operator==(const BiRationalLaurentMatrix& a, const BiRationalLaurentMatrix& b);

    bool is_identity() const;
    /// No entry carries a negative lambda power (the plus-loop condition).
    bool negative_power_free() const;
    int max_map_degree() const;

private:
    std::array<LaurentRm, 64> e_{};
};

/// The displayed unitriangular meromorphic frame image: row 2 carries
/// lambda^{-1} f_1..f_4 and lambda^{-2} g_3, column 7 the negated reversal.
BiRationalLaurentMatrix build_Fminus(const IsotropicQuadruple<SurdScalar>& q);

/// diag(1, lambda^{-2}, 1, 1, 1, 1, lambda^2, 1) and its inverse.
BiRationalLaurentMatrix build_chi8();
BiRationalLaurentMatrix build_chi8_inverse();

/// The conjugation J as inferred from the displayed lower-triangular image:
/// the permutation exchanging indices 4 and 5 (1-based).
BiRationalLaurentMatrix jcheck8();

/// Inverse of a unitriangular matrix via the nilpotent Neumann series.
BiRationalLaurentMatrix unitriangular_inverse(const BiRationalLaurentMatrix& m);

/// The appendix product P(conj C(lambda^{-1})^{-1}) P(M(lambda)^{-1})
/// P(mu^* C) with mu(z) = -1/conj z, computed symbolically and checked
/// entry-for-entry against its displayed closed form (MismatchError on any
/// deviation; this is a self-test of the display and of the implementation).
/// degree_cap bounds the rational-map degrees encountered.
BiRationalLaurentMatrix rp2_product_matrix(const IsotropicQuadruple<SurdScalar>& q,
                                           int degree_cap = 512);

/// Cross-validation of the two descent criteria: [product matrix free of
/// negative lambda powers] against [the four descent residuals vanish].
/// Returns true when they agree (in either direction); throws
/// InconsistentTheoremError if they ever differ and DegenerateG3Error for
/// the identically-zero quadruple (whose product keeps the bare
/// h0 = lambda^{-2} obstruction while the residuals vanish trivially).
bool verify_rp2_equivalence(const IsotropicQuadruple<SurdScalar>& q, int degree_cap = 512);

}  // namespace willsym
