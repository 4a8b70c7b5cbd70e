#pragma once

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "willsym/errors.hpp"
#include "willsym/potentials.hpp"

namespace willsym {

using VectorR = Eigen::VectorXd;
using VectorC = Eigen::VectorXcd;

/// S^2 is covered by the z-chart and the w = 1/z chart; pointwise operators
/// differentiate within the chart they are given.
enum class Chart { direct, inverted };

/// A closed-form associated family Y(z, conj z, lambda) on the forward light
/// cone of R^{1, n+3}, projecting to y in S^{n+2}.
class SurfaceFamily {
public:
    virtual ~SurfaceFamily() = default;

    virtual std::string name() const = 0;
    /// Dimension of the target sphere S^{sphere_dim}; the lift has
    /// sphere_dim + 2 components.
    virtual int sphere_dim() const = 0;
    /// Whether the family is defined on the full S^2 chart pair (quadrature
    /// domain); Weierstrass and Lawson families are not.
    virtual bool compact_s2_domain() const { return true; }
    virtual VectorR lift(Complex z) const = 0;

    Complex lambda() const { return lambda_; }

protected:
    explicit SurfaceFamily(Complex lambda) : lambda_(lambda) {
        double m = std::abs(lambda_);
        if (m < 1e-14) throw DomainError("family: lambda must be a unit complex number");
        lambda_ /= m;
    }

    Complex lambda_;
};

/// veronese, rp2_m2, rp2_m3, twistor_example, round_sphere, enneper,
/// catenoid, lawson_klein.
std::unique_ptr<SurfaceFamily> make_family(const std::string& tag, Complex lambda = {1.0, 0.0});

/// y = (Y_1, ..., Y_{n+3}) / Y_0; unit norm for light-cone input.
VectorR project(const VectorR& y_lift);

/// Projected surface point in the given chart (direct: y(z); inverted:
/// y(1/w)).
VectorR chart_point(const SurfaceFamily& fam, Chart chart, Complex zeta);

/// |<Y, Y>_{1,n+3}| / |Y|^2 together with the forward condition Y_0 > 0.
double lightcone_residual(const SurfaceFamily& fam, Complex z);

struct FdOptions {
    double first_step = 1e-4;      // first derivatives of y
    double second_step = 1e-3;     // y_zzbar
    double curvature_step = 1e-2;  // outer stencil for K
};

/// Pointwise differential data of the projected immersion, all derivatives
/// by fourth-order central differences within the chart.
struct SurfacePointData {
    VectorR y;
    VectorC y_z, y_zbar;
    VectorR y_zzbar;
    double e2u = 0.0;                    // 2 <y_z, y_zbar>
    double conformality_residual = 0.0;  // |<y_z, y_z>| / e2u
    VectorR h_vec;                       // (2/e2u) y_zzbar + y
    double minimality_residual = 0.0;    // |h_vec|
    double gauss_curvature = 0.0;        // filled only when requested
};

SurfacePointData surface_point_data(const SurfaceFamily& fam, Chart chart, Complex zeta,
                                    const FdOptions& opts = {}, bool with_curvature = false);

enum class MetricConvention { lift, projected };

/// The paper's closed-form metric for rp2_m2 / rp2_m3 / twistor_example /
/// round_sphere; lift convention is the Lorentz product <Y_z, Y_zbar>,
/// projected is <y_z, y_zbar>.  Throws UnknownExampleError for families
/// without a documented closed form.
double metric_analytic(const SurfaceFamily& fam, Complex z,
                       MetricConvention convention = MetricConvention::projected);

/// Finite-difference <y_z, y_zbar> (or Lorentz <Y_z, Y_zbar>) in the chart.
double metric_fd(const SurfaceFamily& fam, Chart chart, Complex zeta,
                 MetricConvention convention = MetricConvention::projected,
                 double first_step = 1e-4);

/// Relative residual of mu^* Y = r^{-2k} Y for the family's documented scale
/// (veronese r^{-2}, rp2_m2 r^{-8}, rp2_m3 r^{-14}), computed as
/// |c(z)^{-1} Y(mu(z)) - Y(z)| / |Y(z)| with mu(z) = -1/conj(z).
double mu_invariance_residual(const SurfaceFamily& fam, Complex z);

/// The general-lambda Veronese form mu^* Y(lambda) = r^{-2} D_lambda^2
/// Y(lambda^{-1}).
double veronese_dlambda_residual(Complex z, Complex lambda);

/// Twistor-example reflection: y(conj z, lambda) = diag(1,1,-1,1,-1)
/// y(z, lambda^{-1}).
double twistor_reflection_residual(Complex z, Complex lambda);

/// |(2/e2u) y_zzbar + y| (vanishes for minimal immersions in the unit
/// sphere).
double minimality_residual(const SurfaceFamily& fam, Chart chart, Complex zeta,
                           const FdOptions& opts = {});

double conformality_residual(const SurfaceFamily& fam, Chart chart, Complex zeta,
                             const FdOptions& opts = {});

/// K = -(2/e2u) dz dzbar log(e2u), nested finite differences.
double gauss_curvature(const SurfaceFamily& fam, Chart chart, Complex zeta,
                       const FdOptions& opts = {});

/// Surface from Weierstrass data: x = Re(lambda * int(h_z(1-g^2),
/// -i h_z(1+g^2), 2 h_z g) dz), y = (1-|x|^2, 2x)/(1+|x|^2).  The image y is
/// the conformal sphere picture of the minimal surface x; minimality lives
/// in R^3 (x is harmonic), not in S^3.
class WeierstrassSurface : public SurfaceFamily {
public:
    using SurfaceFamily::SurfaceFamily;
    /// The underlying minimal immersion x into R^3.
    virtual Eigen::Vector3d minimal_immersion(Complex z) const = 0;
};

/// Antiderivatives must be Laurent polynomials; a simple pole contributes a
/// log term, which is accepted only with allow_log_branch (principal branch,
/// plane cut along the negative real axis).
std::unique_ptr<WeierstrassSurface> weierstrass_surface(const WeierstrassData<SurdScalar>& data,
                                                        Complex lambda = {1.0, 0.0},
                                                        bool allow_log_branch = false);

/// Finite-difference |x_zzbar| / max(1, |x_z|): the harmonic-coordinates
/// minimality residual of the R^3 immersion.
double weierstrass_harmonicity_residual(const WeierstrassSurface& fam, Complex z,
                                        const FdOptions& opts = {});

}  // namespace willsym
