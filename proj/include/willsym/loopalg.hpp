#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

#include "willsym/errors.hpp"

namespace willsym {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;

/// Indefinite diagonal form I_{p,q} = diag(-1 x p, +1 x q).
struct SignatureForm {
    int p = 0;
    int q = 0;

    int size() const { return p + q; }
    MatrixR matrix() const;
};

/// Square matrix with Laurent-polynomial entries in the loop parameter,
/// stored as coefficient matrices A_k for k in [k_min, k_max]:
/// A(lambda) = sum_k lambda^k A_k.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(int n, int k_min, int k_max);

    static LaurentMatrix identity(int n);
    static LaurentMatrix from_constant(const MatrixC& a);

    int size() const { return n_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }

    /// Coefficient of lambda^k (zero matrix outside the stored range).
    MatrixC coeff(int k) const;
    MatrixC& coeff_ref(int k);
    void set_coeff(int k, const MatrixC& a);

    MatrixC eval(std::complex<double> lambda) const;
    LaurentMatrix transpose() const;
    /// Reality involution on loops: conj(A_k) placed at -k.
    LaurentMatrix bar() const;
    /// Drop negligible leading/trailing coefficient matrices.
    LaurentMatrix trimmed(double tol = 0.0) const;

    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator*(std::complex<double> s, const LaurentMatrix& a);

    double max_coeff_norm() const;

private:
    int n_ = 0;
    int k_min_ = 0;
    int k_max_ = 0;
    std::vector<MatrixC> coeffs_;  // index k - k_min_
};

/// Outcome of a loop-group membership test; a residual per condition with
/// pass flags at the configured tolerance.
struct MembershipReport {
    double orthogonality_residual = 0.0;
    double reality_residual = 0.0;
    double twisting_residual = 0.0;
    bool orthogonality_pass = true;
    bool reality_pass = true;
    bool twisting_pass = true;
    double tol = 1e-10;

    bool passes() const { return orthogonality_pass && reality_pass && twisting_pass; }
};

/// A(lambda)^t I_{p,q} A(lambda) = I_{p,q} as a Laurent identity.
MembershipReport check_orthogonality(const LaurentMatrix& a, const SignatureForm& form,
                                     double tol = 1e-10);

/// A(lambda) real on the unit circle: conj(A_k) = A_{-k} for all k.
MembershipReport check_reality(const LaurentMatrix& a, double tol = 1e-10);

/// Order-2 twist for the block split (p, q): even-lambda coefficients are
/// block-diagonal, odd ones block-off-diagonal.
MembershipReport check_twisting(const LaurentMatrix& a, std::pair<int, int> block_split,
                                double tol = 1e-10);

/// exp(t A) for a constant square matrix; scaling-and-squaring Pade.
MatrixC lm_exp(const MatrixC& a, double t = 1.0);

/// Eigenvalues with multiplicity, sorted lexicographically by (re, im);
/// validates the solver residual per pair.
std::vector<std::complex<double>> eigen_data(const MatrixC& a, double residual_tol = 1e-10);

/// chi(lambda) = exp(c0 D(lambda)) W0(0)^{-1}.
MatrixC equivariant_monodromy(const LaurentMatrix& d, double c0, const MatrixC& w0_at_0,
                              std::complex<double> lambda);

/// `count` equispaced unit-circle samples; index 0 is exactly lambda = 1.
std::vector<std::complex<double>> unit_circle_samples(int count = 16);

/// Aggregated closure report for the equivariant/Moebius theorem: the
/// monodromy chi must be real, signature-orthogonal and twist-compatible at
/// the sampled lambda, with chi(1) equal to the reflection signature
/// diag(1,1,1,-1,-1,1,...,1), det = +1 and chi(1)_00 > 0 (identity-component
/// proxy).
struct MoebiusClosureReport {
    double orthogonality_residual = 0.0;
    double reality_residual = 0.0;
    double twisting_residual = 0.0;
    double generator_reality_residual = 0.0;
    double chi1_residual = 0.0;
    double det_residual = 0.0;
    bool time_orientation_ok = true;
    std::vector<std::complex<double>> chi1_eigenvalues;
    double tol = 1e-8;

    bool passes() const {
        return orthogonality_residual < tol && reality_residual < tol && twisting_residual < tol &&
               generator_reality_residual < tol && chi1_residual < tol && det_residual < tol &&
               time_orientation_ok;
    }
};

MoebiusClosureReport check_moebius_closure(const LaurentMatrix& d, double c0, const MatrixC& w0_at_0,
                                           const SignatureForm& form,
                                           const std::vector<std::complex<double>>& lambda_samples,
                                           double tol = 1e-8);

}  // namespace willsym
