#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "willsym/loopalg.hpp"

namespace willsym {

/// Half-period of the isothermal coordinate change:
/// v0 = int_0^pi dw / sqrt(1 + 3 cos^2 w)  (the complete elliptic integral
/// K(sqrt(3)/2)).
double lawson_v0();

/// Invert v = int_0^{vhat} dw / sqrt(1 + 3 cos^2 w).  Global, monotone;
/// periodicity vhat(v + 2 v0) = vhat(v) + 2 pi and oddness are preserved by
/// range reduction.
double solve_vhat(double v);

/// Lawson's minimal Klein-bottle cover in S^3:
/// y(u, v) = (cos 2u cos vhat, sin 2u cos vhat, cos u sin vhat, sin u sin vhat).
Eigen::Vector4d lawson_immersion(double u, double v);

/// Closed-form derivative and frame fields of the immersion.
Eigen::Vector4d lawson_y_u(double u, double v);
Eigen::Vector4d lawson_y_v(double u, double v);
Eigen::Vector4d lawson_y_uu(double u, double v);
Eigen::Vector4d lawson_y_uv(double u, double v);
Eigen::Vector4d lawson_y_vv(double u, double v);
Eigen::Vector4d lawson_normal(double u, double v);

/// Frame scalars at z = u + iv: omega with e^omega = sqrt(1 + 3 cos^2 vhat),
/// s = 2(omega_zz - omega_z^2), k = -i e^{-omega}, k_zbar = i e^{-omega}
/// omega_zbar; Omega = -i is constant.
struct LawsonFrame {
    double vhat = 0.0;
    double omega = 0.0;
    std::complex<double> omega_z;
    std::complex<double> omega_zz;
    std::complex<double> s;
    std::complex<double> k;
    std::complex<double> k_zbar;
    std::complex<double> big_omega{0.0, -1.0};
    Eigen::Vector4d n;
};

LawsonFrame frame_quantities(std::complex<double> z);

/// The 5x5 holomorphic potential matrix L_lambda (Laurent degrees [-1, 1]).
LaurentMatrix build_L_lambda();

/// Monodromy of the Moebius-strip deck transformation mu(z) = conj(z) - pi:
/// chi(lambda) = exp(pi L(lambda)) (W0(0) = I), reported through
/// conjugation-invariant data since D_lambda is conjugate to L_lambda.
struct KleinMonodromyReport {
    MatrixC chi;
    std::vector<std::complex<double>> eigenvalues;
    double orthogonality_residual = 0.0;
    double reality_residual = 0.0;
    double det_residual = 0.0;
};

KleinMonodromyReport klein_monodromy(std::complex<double> lambda);

}  // namespace willsym
