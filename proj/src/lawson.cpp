#include "willsym/lawson.hpp"

#include <cmath>

namespace willsym {

namespace {

using Complex = std::complex<double>;

inline double sq(double x) { return x * x; }

double coordinate_integrand(double w) { return 1.0 / std::sqrt(1.0 + 3.0 * sq(std::cos(w))); }

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGl = 15;
const double kGlNodes[kGl] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
const double kGlWeights[kGl] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

// Composite 15-point GL with panels of width <= pi/8; the integrand is
// analytic and bounded in [1/2, 1], so this is converged to roundoff.
double coordinate_integral(double vhat) {
    const double sign = vhat < 0.0 ? -1.0 : 1.0;
    const double b = std::abs(vhat);
    const int panels = std::max(1, static_cast<int>(std::ceil(b / (M_PI / 8.0))));
    double acc = 0.0, comp = 0.0;  // Neumaier summation
    for (int p = 0; p < panels; ++p) {
        const double x0 = b * p / panels, x1 = b * (p + 1) / panels;
        const double mid = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0);
        for (int i = 0; i < kGl; ++i) {
            double term = half * kGlWeights[i] * coordinate_integrand(mid + half * kGlNodes[i]);
            double t = acc + term;
            comp += (std::abs(acc) >= std::abs(term)) ? (acc - t) + term : (term - t) + acc;
            acc = t;
        }
    }
    return sign * (acc + comp);
}

}  // namespace

double lawson_v0() {
    static const double v0 = coordinate_integral(M_PI);
    return v0;
}

double solve_vhat(double v) {
    const double v0 = lawson_v0();
    const double period = 2.0 * v0;
    const double k = std::floor(v / period);
    const double vr = v - k * period;  // in [0, 2 v0)

    // Newton on F(vhat) = vr with bisection safeguard; F' in [1/2, 1].
    double lo = 0.0, hi = 2.0 * M_PI;
    double vhat = std::min(2.0 * vr, hi);
    for (int it = 0; it < 80; ++it) {
        const double fv = coordinate_integral(vhat) - vr;
        if (std::abs(fv) < 1e-14) break;
        if (fv > 0.0)
            hi = vhat;
        else
            lo = vhat;
        double step = fv * std::sqrt(1.0 + 3.0 * sq(std::cos(vhat)));
        double next = vhat - step;
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        vhat = next;
    }
    return vhat + 2.0 * M_PI * k;
}

Eigen::Vector4d lawson_immersion(double u, double v) {
    const double vh = solve_vhat(v);
    return {std::cos(2.0 * u) * std::cos(vh), std::sin(2.0 * u) * std::cos(vh),
            std::cos(u) * std::sin(vh), std::sin(u) * std::sin(vh)};
}

Eigen::Vector4d lawson_y_u(double u, double v) {
    const double vh = solve_vhat(v);
    return {-2.0 * std::cos(vh) * std::sin(2.0 * u), 2.0 * std::cos(vh) * std::cos(2.0 * u),
            -std::sin(vh) * std::sin(u), std::sin(vh) * std::cos(u)};
}

Eigen::Vector4d lawson_y_v(double u, double v) {
    const double vh = solve_vhat(v);
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(vh)));
    return ew * Eigen::Vector4d{-std::sin(vh) * std::cos(2.0 * u),
                                -std::sin(vh) * std::sin(2.0 * u), std::cos(vh) * std::cos(u),
                                std::cos(vh) * std::sin(u)};
}

Eigen::Vector4d lawson_y_uu(double u, double v) {
    const double vh = solve_vhat(v);
    return -Eigen::Vector4d{4.0 * std::cos(vh) * std::cos(2.0 * u),
                            4.0 * std::cos(vh) * std::sin(2.0 * u), std::sin(vh) * std::cos(u),
                            std::sin(vh) * std::sin(u)};
}

Eigen::Vector4d lawson_y_uv(double u, double v) {
    const double vh = solve_vhat(v);
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(vh)));
    return ew * Eigen::Vector4d{2.0 * std::sin(vh) * std::sin(2.0 * u),
                                -2.0 * std::sin(vh) * std::cos(2.0 * u),
                                -std::cos(vh) * std::sin(u), std::cos(vh) * std::cos(u)};
}

Eigen::Vector4d lawson_y_vv(double u, double v) {
    const double vh = solve_vhat(v);
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(vh)));
    const double omega_v = -3.0 * std::cos(vh) * std::sin(vh) / ew;
    Eigen::Vector4d radial{std::cos(vh) * std::cos(2.0 * u), std::cos(vh) * std::sin(2.0 * u),
                           std::sin(vh) * std::cos(u), std::sin(vh) * std::sin(u)};
    return omega_v * lawson_y_v(u, v) - sq(ew) * radial;
}

Eigen::Vector4d lawson_normal(double u, double v) {
    const double vh = solve_vhat(v);
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(vh)));
    return (1.0 / ew) * Eigen::Vector4d{std::sin(vh) * std::sin(2.0 * u),
                                        -std::sin(vh) * std::cos(2.0 * u),
                                        -2.0 * std::cos(vh) * std::sin(u),
                                        2.0 * std::cos(vh) * std::cos(u)};
}

namespace {

// omega_z as a function of vhat alone: (3i/4) sin(2 vhat) e^{-omega(vhat)}.
Complex omega_z_of_vhat(double vh) {
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(vh)));
    return Complex(0.0, 0.75) * std::sin(2.0 * vh) / ew;
}

}  // namespace

LawsonFrame frame_quantities(Complex z) {
    LawsonFrame f;
    f.vhat = solve_vhat(z.imag());
    const double ew = std::sqrt(1.0 + 3.0 * sq(std::cos(f.vhat)));
    f.omega = std::log(ew);
    f.omega_z = omega_z_of_vhat(f.vhat);

    // omega_zz = -(i/2) d_v omega_z; differentiate in vhat (closed forms,
    // no solver noise) and chain through dvhat/dv = e^omega.
    const double h = 1e-4;
    Complex d_vhat = (-omega_z_of_vhat(f.vhat + 2.0 * h) + 8.0 * omega_z_of_vhat(f.vhat + h) -
                      8.0 * omega_z_of_vhat(f.vhat - h) + omega_z_of_vhat(f.vhat - 2.0 * h)) /
                     (12.0 * h);
    f.omega_zz = Complex(0.0, -0.5) * d_vhat * ew;

    f.s = 2.0 * (f.omega_zz - f.omega_z * f.omega_z);
    f.k = Complex(0.0, -1.0) / ew;
    f.k_zbar = Complex(0.0, 1.0) / ew * std::conj(f.omega_z);
    f.n = lawson_normal(z.real(), z.imag());
    return f;
}

LaurentMatrix build_L_lambda() {
    const double s2 = std::sqrt(2.0);
    LaurentMatrix l(5, -1, 1);

    MatrixC l0 = MatrixC::Zero(5, 5);
    l0(0, 2) = -s2 / 2.0;
    l0(1, 2) = 3.0 * s2 / 2.0;
    l0(2, 0) = -s2 / 2.0;
    l0(2, 1) = -3.0 * s2 / 2.0;
    l.set_coeff(0, l0);

    MatrixC lm1 = MatrixC::Zero(5, 5);
    lm1(2, 4) = Complex(0.0, 0.5);
    lm1(3, 4) = -0.5;
    lm1(4, 2) = Complex(0.0, -0.5);
    lm1(4, 3) = 0.5;
    l.set_coeff(-1, lm1);
    l.set_coeff(1, lm1.conjugate());  // D_1 = conj(D_{-1})
    return l;
}

KleinMonodromyReport klein_monodromy(Complex lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw DomainError("klein_monodromy: lambda must lie on the unit circle");
    KleinMonodromyReport rep;
    LaurentMatrix l = build_L_lambda();
    rep.chi = lm_exp(l.eval(lambda), M_PI);
    rep.eigenvalues = eigen_data(rep.chi);
    MatrixC i14 = SignatureForm{1, 4}.matrix().cast<Complex>();
    rep.orthogonality_residual = (rep.chi.transpose() * i14 * rep.chi - i14).cwiseAbs().maxCoeff();
    rep.reality_residual = rep.chi.imag().cwiseAbs().maxCoeff();
    rep.det_residual = std::abs(rep.chi.determinant() - 1.0);
    return rep;
}

}  // namespace willsym
