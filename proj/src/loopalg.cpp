#include "willsym/loopalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace willsym {

MatrixR SignatureForm::matrix() const {
    MatrixR m = MatrixR::Identity(size(), size());
    for (int i = 0; i < p; ++i) m(i, i) = -1.0;
    return m;
}

LaurentMatrix::LaurentMatrix(int n, int k_min, int k_max) : n_(n), k_min_(k_min), k_max_(k_max) {
    if (k_max < k_min) throw SizeMismatchError("LaurentMatrix: empty degree range");
    coeffs_.assign(k_max - k_min + 1, MatrixC::Zero(n, n));
}

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix a(n, 0, 0);
    a.coeffs_[0] = MatrixC::Identity(n, n);
    return a;
}

LaurentMatrix LaurentMatrix::from_constant(const MatrixC& m) {
    if (m.rows() != m.cols()) throw SizeMismatchError("LaurentMatrix: matrix must be square");
    LaurentMatrix a(static_cast<int>(m.rows()), 0, 0);
    a.coeffs_[0] = m;
    return a;
}

MatrixC LaurentMatrix::coeff(int k) const {
    if (k < k_min_ || k > k_max_) return MatrixC::Zero(n_, n_);
    return coeffs_[k - k_min_];
}

MatrixC& LaurentMatrix::coeff_ref(int k) {
    if (k < k_min_ || k > k_max_) throw SizeMismatchError("LaurentMatrix: power out of range");
    return coeffs_[k - k_min_];
}

void LaurentMatrix::set_coeff(int k, const MatrixC& a) {
    if (a.rows() != n_ || a.cols() != n_) throw SizeMismatchError("LaurentMatrix: coefficient size");
    coeff_ref(k) = a;
}

MatrixC LaurentMatrix::eval(std::complex<double> lambda) const {
    if (lambda == std::complex<double>(0.0, 0.0) && k_min_ < 0)
        throw Error("LaurentMatrix: evaluation at lambda = 0");
    MatrixC acc = MatrixC::Zero(n_, n_);
    for (int k = k_min_; k <= k_max_; ++k) acc += std::pow(lambda, k) * coeffs_[k - k_min_];
    return acc;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix r(n_, k_min_, k_max_);
    for (int k = k_min_; k <= k_max_; ++k) r.coeffs_[k - k_min_] = coeffs_[k - k_min_].transpose();
    return r;
}

LaurentMatrix LaurentMatrix::bar() const {
    LaurentMatrix r(n_, -k_max_, -k_min_);
    for (int k = k_min_; k <= k_max_; ++k) r.coeff_ref(-k) = coeffs_[k - k_min_].conjugate();
    return r;
}

LaurentMatrix LaurentMatrix::trimmed(double tol) const {
    int lo = k_min_, hi = k_max_;
    while (lo < hi && coeff(lo).cwiseAbs().maxCoeff() <= tol) ++lo;
    while (hi > lo && coeff(hi).cwiseAbs().maxCoeff() <= tol) --hi;
    LaurentMatrix r(n_, lo, hi);
    for (int k = lo; k <= hi; ++k) r.coeff_ref(k) = coeff(k);
    return r;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) throw SizeMismatchError("LaurentMatrix: size mismatch in +");
    LaurentMatrix r(a.size(), std::min(a.k_min(), b.k_min()), std::max(a.k_max(), b.k_max()));
    for (int k = r.k_min(); k <= r.k_max(); ++k) r.coeff_ref(k) = a.coeff(k) + b.coeff(k);
    return r;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) throw SizeMismatchError("LaurentMatrix: size mismatch in -");
    LaurentMatrix r(a.size(), std::min(a.k_min(), b.k_min()), std::max(a.k_max(), b.k_max()));
    for (int k = r.k_min(); k <= r.k_max(); ++k) r.coeff_ref(k) = a.coeff(k) - b.coeff(k);
    return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.size() != b.size()) throw SizeMismatchError("LaurentMatrix: size mismatch in *");
    LaurentMatrix r(a.size(), a.k_min() + b.k_min(), a.k_max() + b.k_max());
    for (int i = a.k_min(); i <= a.k_max(); ++i)
        for (int j = b.k_min(); j <= b.k_max(); ++j) r.coeff_ref(i + j) += a.coeff(i) * b.coeff(j);
    return r;
}

LaurentMatrix operator*(std::complex<double> s, const LaurentMatrix& a) {
    LaurentMatrix r(a.size(), a.k_min(), a.k_max());
    for (int k = a.k_min(); k <= a.k_max(); ++k) r.coeff_ref(k) = s * a.coeff(k);
    return r;
}

double LaurentMatrix::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& c : coeffs_) {
        if (c.size() > 0) m = std::max(m, c.cwiseAbs().maxCoeff());
    }
    return m;
}

namespace {

double block_abs_max(const MatrixC& c, int row0, int col0, int rows, int cols) {
    if (rows == 0 || cols == 0) return 0.0;
    return c.block(row0, col0, rows, cols).cwiseAbs().maxCoeff();
}

}  // namespace

MembershipReport check_orthogonality(const LaurentMatrix& a, const SignatureForm& form, double tol) {
    if (a.size() != form.size())
        throw SizeMismatchError("check_orthogonality: form size does not match matrix");
    LaurentMatrix ipq = LaurentMatrix::from_constant(form.matrix().cast<std::complex<double>>());
    LaurentMatrix prod = a.transpose() * ipq * a - ipq;
    MembershipReport rep;
    rep.tol = tol;
    rep.orthogonality_residual = prod.max_coeff_norm();
    rep.orthogonality_pass = rep.orthogonality_residual < tol;
    return rep;
}

MembershipReport check_reality(const LaurentMatrix& a, double tol) {
    MembershipReport rep;
    rep.tol = tol;
    double m = 0.0;
    int lo = std::min(a.k_min(), -a.k_max());
    int hi = std::max(a.k_max(), -a.k_min());
    for (int k = lo; k <= hi; ++k)
        m = std::max(m, (a.coeff(k).conjugate() - a.coeff(-k)).cwiseAbs().maxCoeff());
    rep.reality_residual = m;
    rep.reality_pass = m < tol;
    return rep;
}

MembershipReport check_twisting(const LaurentMatrix& a, std::pair<int, int> block_split, double tol) {
    const int p = block_split.first, q = block_split.second;
    if (p + q != a.size()) throw SizeMismatchError("check_twisting: block split must sum to size");
    MembershipReport rep;
    rep.tol = tol;
    double m = 0.0;
    for (int k = a.k_min(); k <= a.k_max(); ++k) {
        const MatrixC c = a.coeff(k);
        const bool even = ((k % 2) + 2) % 2 == 0;
        double diag_norm = std::max(block_abs_max(c, 0, 0, p, p), block_abs_max(c, p, p, q, q));
        double off_norm = std::max(block_abs_max(c, 0, p, p, q), block_abs_max(c, p, 0, q, p));
        m = std::max(m, even ? off_norm : diag_norm);
    }
    rep.twisting_residual = m;
    rep.twisting_pass = m < tol;
    return rep;
}

MatrixC lm_exp(const MatrixC& a, double t) {
    if (a.rows() != a.cols()) throw SizeMismatchError("lm_exp: matrix must be square");
    if (!a.allFinite()) throw Error("lm_exp: non-finite entries");
    return (t * a).exp();
}

std::vector<std::complex<double>> eigen_data(const MatrixC& a, double residual_tol) {
    if (a.rows() != a.cols()) throw SizeMismatchError("eigen_data: matrix must be square");
    Eigen::ComplexEigenSolver<MatrixC> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw ConvergenceError("eigen_data: solver failed");
    const auto& vals = solver.eigenvalues();
    const auto& vecs = solver.eigenvectors();
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    for (int i = 0; i < vals.size(); ++i) {
        double res = (a * vecs.col(i) - vals(i) * vecs.col(i)).norm() / vecs.col(i).norm();
        if (res > residual_tol * scale)
            throw ConvergenceError("eigen_data: residual " + std::to_string(res) + " too large");
    }
    std::vector<std::complex<double>> out(vals.data(), vals.data() + vals.size());
    std::sort(out.begin(), out.end(), [](auto x, auto y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

MatrixC equivariant_monodromy(const LaurentMatrix& d, double c0, const MatrixC& w0_at_0,
                              std::complex<double> lambda) {
    if (w0_at_0.rows() != d.size() || w0_at_0.cols() != d.size())
        throw SizeMismatchError("equivariant_monodromy: W0 size mismatch");
    Eigen::FullPivLU<MatrixC> lu(w0_at_0);
    if (!lu.isInvertible()) throw SingularMatrixError("equivariant_monodromy: W0(0) is singular");
    return lm_exp(d.eval(lambda), c0) * lu.inverse();
}

std::vector<std::complex<double>> unit_circle_samples(int count) {
    std::vector<std::complex<double>> s;
    s.reserve(count);
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            s.emplace_back(1.0, 0.0);
        } else {
            double th = 2.0 * M_PI * k / count;
            s.emplace_back(std::cos(th), std::sin(th));
        }
    }
    return s;
}

MoebiusClosureReport check_moebius_closure(const LaurentMatrix& d, double c0, const MatrixC& w0_at_0,
                                           const SignatureForm& form,
                                           const std::vector<std::complex<double>>& lambda_samples,
                                           double tol) {
    const int n = d.size();
    if (form.size() != n) throw SizeMismatchError("check_moebius_closure: form size mismatch");
    MoebiusClosureReport rep;
    rep.tol = tol;

    // Generator precondition D_1 = conj(D_{-1}) (and reality of all pairs).
    rep.generator_reality_residual = check_reality(d).reality_residual;

    MatrixC ipq = form.matrix().cast<std::complex<double>>();
    MatrixC sigma = MatrixC::Identity(n, n);
    for (int i = 4; i < n; ++i) sigma(i, i) = -1.0;  // Ad involution for the (4, n-4) split

    for (std::complex<double> lambda : lambda_samples) {
        MatrixC chi = equivariant_monodromy(d, c0, w0_at_0, lambda);
        MatrixC chi_neg = equivariant_monodromy(d, c0, w0_at_0, -lambda);
        rep.reality_residual = std::max(rep.reality_residual, chi.imag().cwiseAbs().maxCoeff());
        rep.orthogonality_residual =
            std::max(rep.orthogonality_residual,
                     (chi.transpose() * ipq * chi - ipq).cwiseAbs().maxCoeff());
        rep.twisting_residual =
            std::max(rep.twisting_residual, (sigma * chi * sigma - chi_neg).cwiseAbs().maxCoeff());
        rep.det_residual = std::max(rep.det_residual, std::abs(chi.determinant() - 1.0));
    }

    // chi(1) must equal the reflection signature diag(1,1,1,-1,-1,1,...,1).
    MatrixC chi1 = equivariant_monodromy(d, c0, w0_at_0, {1.0, 0.0});
    MatrixC p_check = MatrixC::Identity(n, n);
    p_check(3, 3) = -1.0;
    p_check(4, 4) = -1.0;
    rep.chi1_residual = (chi1 - p_check).cwiseAbs().maxCoeff();
    rep.time_orientation_ok = chi1(0, 0).real() > 0.0;
    rep.chi1_eigenvalues = eigen_data(chi1);
    return rep;
}

}  // namespace willsym
