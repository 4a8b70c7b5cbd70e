#include "willsym/surfaces.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "willsym/lawson.hpp"

namespace willsym {

namespace {

double sq(double x) { return x * x; }

class RoundSphere final : public SurfaceFamily {
public:
    explicit RoundSphere(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "round_sphere"; }
    int sphere_dim() const override { return 2; }
    VectorR lift(Complex z) const override {
        double r2 = std::norm(z);
        VectorR y(4);
        y << 1.0 + r2, 2.0 * z.real(), 2.0 * z.imag(), r2 - 1.0;
        return y;  // (1+r^2) * (1, y_unit)
    }
};

class VeroneseSphere final : public SurfaceFamily {
public:
    explicit VeroneseSphere(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "veronese"; }
    int sphere_dim() const override { return 4; }
    VectorR lift(Complex z) const override {
        const double r2 = std::norm(z);
        const double s3 = std::sqrt(3.0);
        const Complex a = z * z / lambda_;  // lambda^{-1} z^2
        VectorR y(6);
        y << (1.0 + r2) / s3,
            (2.0 * r2 - sq(1.0 - r2)) / (s3 * (1.0 + r2)),
            2.0 * z.real() * (1.0 - r2) / (1.0 + r2),
            2.0 * z.imag() * (1.0 - r2) / (1.0 + r2),
            2.0 * a.real() / (1.0 + r2),
            2.0 * a.imag() / (1.0 + r2);
        return 0.5 * y;
    }
};

class Rp2M2Family final : public SurfaceFamily {
public:
    explicit Rp2M2Family(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "rp2_m2"; }
    int sphere_dim() const override { return 4; }
    VectorR lift(Complex z) const override {
        const double r2 = std::norm(z);
        const double r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
        const double s15 = std::sqrt(15.0);
        const Complex a = z * z * z * z / lambda_;  // lambda^{-1} z^4
        VectorR y(6);
        y << (3.0 * r4 - 4.0 * r2 + 3.0) * sq(1.0 + r2),
            -(3.0 * r8 - 8.0 * r6 + 8.0 * r4 - 8.0 * r2 + 3.0),
            2.0 * s15 * z.real() * (1.0 - r2) * (1.0 + r4),
            2.0 * s15 * z.imag() * (1.0 - r2) * (1.0 + r4),
            2.0 * s15 * a.real(),
            -2.0 * s15 * a.imag();
        return y;
    }
};

class Rp2M3Family final : public SurfaceFamily {
public:
    explicit Rp2M3Family(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "rp2_m3"; }
    int sphere_dim() const override { return 4; }
    VectorR lift(Complex z) const override {
        const double r2 = std::norm(z);
        const double r12 = std::pow(r2, 6), r14 = std::pow(r2, 7);
        const double s35 = std::sqrt(35.0);
        const Complex a = std::pow(z, 6) / lambda_;  // lambda^{-1} z^6
        VectorR y(6);
        y << 5.0 + 7.0 * r2 + 7.0 * r12 + 5.0 * r14,
            -5.0 + 7.0 * r2 + 7.0 * r12 - 5.0 * r14,
            2.0 * s35 * z.real() * (1.0 - r12),
            2.0 * s35 * z.imag() * (1.0 - r12),
            2.0 * s35 * a.real() * (1.0 + r2),
            -2.0 * s35 * a.imag() * (1.0 + r2);
        return y;
    }
};

class TwistorFamily final : public SurfaceFamily {
public:
    explicit TwistorFamily(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "twistor_example"; }
    int sphere_dim() const override { return 4; }
    VectorR lift(Complex z) const override {
        const double r2 = std::norm(z);
        const double r4 = r2 * r2, r6 = r4 * r2;
        const Complex a = z * z / lambda_;  // lambda^{-1} z^2
        VectorR y(6);
        y << 4.0 * r2 + 4.0 / 9.0 * r6 + r4 + 1.0,
            4.0 * r2 - 4.0 / 9.0 * r6 + r4 - 1.0,
            4.0 * z.real() * (r4 / 3.0 - 1.0),
            4.0 * z.imag() * (r4 / 3.0 - 1.0),
            2.0 * a.real() * (4.0 * r2 / 3.0 + 1.0),
            -2.0 * a.imag() * (4.0 * r2 / 3.0 + 1.0);
        return y;
    }
};

// Laurent polynomial with complex coefficients plus an optional log term,
// the antiderivative shape the Weierstrass integrands produce.
struct LaurentIntegral {
    std::map<int, Complex> terms;
    Complex log_coeff{0.0, 0.0};

    Complex eval(Complex z) const {
        Complex acc{0.0, 0.0};
        for (const auto& [k, c] : terms) acc += c * std::pow(z, k);
        if (log_coeff != Complex(0.0, 0.0)) acc += log_coeff * std::log(z);
        return acc;
    }
    bool needs_origin_cut() const {
        if (log_coeff != Complex(0.0, 0.0)) return true;
        return !terms.empty() && terms.begin()->first < 0;
    }
};

// Antiderivative of a rational map whose denominator is a monomial z^k
// (Laurent polynomial).  The z^{-1} term becomes the log coefficient.
LaurentIntegral laurent_antiderivative(const RationalMapX& f) {
    const auto& den = f.den();
    const int k = den.degree();
    for (int i = 0; i < k; ++i) {
        if (!den.coeff(i).is_zero())
            throw NonrationalAntiderivativeError(
                "integrand denominator is not a monomial; no rational antiderivative");
    }
    // den is monic after reduction, so f = sum num_i z^{i-k}.
    LaurentIntegral out;
    for (int i = 0; i <= f.num().degree(); ++i) {
        const SurdScalar& c = f.num().coeff(i);
        if (c.is_zero()) continue;
        int power = i - k;
        if (power == -1) {
            out.log_coeff = c.to_complex();
        } else {
            out.terms[power + 1] = c.to_complex() / static_cast<double>(power + 1);
        }
    }
    return out;
}

class WeierstrassFamily final : public WeierstrassSurface {
public:
    WeierstrassFamily(const WeierstrassData<SurdScalar>& data, Complex lambda, bool allow_log_branch)
        : WeierstrassSurface(lambda) {
        RationalMapX hz = data.h.derivative();
        RationalMapX g2 = data.g * data.g;
        RationalMapX one = RationalMapX::constant(SurdScalar(1));
        RationalMapX i_rm = RationalMapX::constant(SurdScalar::i());
        components_[0] = laurent_antiderivative(hz * (one - g2));
        components_[1] = laurent_antiderivative(-(i_rm * (hz * (one + g2))));
        components_[2] = laurent_antiderivative(SurdScalar(2) * (hz * data.g));
        for (const auto& c : components_) {
            if (c.log_coeff != Complex(0.0, 0.0) && !allow_log_branch)
                throw NonrationalAntiderivativeError(
                    "residue obstruction: antiderivative needs a log branch");
            if (c.needs_origin_cut()) cut_ = true;
        }
    }

    std::string name() const override { return "weierstrass"; }
    int sphere_dim() const override { return 3; }
    bool compact_s2_domain() const override { return false; }

    Eigen::Vector3d minimal_immersion(Complex z) const override {
        if (cut_ && (z == Complex(0.0, 0.0) || (z.imag() == 0.0 && z.real() < 0.0)))
            throw DomainError("weierstrass surface: point on the branch cut");
        Eigen::Vector3d x;
        for (int j = 0; j < 3; ++j) x(j) = (lambda_ * components_[j].eval(z)).real();
        return x;
    }

    VectorR lift(Complex z) const override {
        Eigen::Vector3d x = minimal_immersion(z);
        const double n2 = x.squaredNorm();
        VectorR y(5);
        y << 1.0 + n2, 1.0 - n2, 2.0 * x(0), 2.0 * x(1), 2.0 * x(2);
        return y;  // (1+|x|^2) * (1, y_unit)
    }

private:
    std::array<LaurentIntegral, 3> components_;
    bool cut_ = false;
};

class LawsonKleinFamily final : public SurfaceFamily {
public:
    explicit LawsonKleinFamily(Complex lambda) : SurfaceFamily(lambda) {}
    std::string name() const override { return "lawson_klein"; }
    int sphere_dim() const override { return 3; }
    bool compact_s2_domain() const override { return false; }
    VectorR lift(Complex z) const override {
        Eigen::Vector4d y = lawson_immersion(z.real(), z.imag());
        VectorR out(5);
        out << 1.0, y(0), y(1), y(2), y(3);
        return out;
    }
};

// 4th-order central difference stencils.
template <class F>
auto fd1(const F& f, double h) -> decltype(f(0.0)) {
    return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

template <class F>
auto fd2(const F& f, double h) -> decltype(f(0.0)) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) /
           (12.0 * h * h);
}

Complex chart_to_z(Chart chart, Complex zeta) {
    if (chart == Chart::direct) return zeta;
    if (zeta == Complex(0.0, 0.0)) throw DomainError("inverted chart: zeta = 0 is the far pole");
    return 1.0 / zeta;
}

}  // namespace

std::unique_ptr<SurfaceFamily> make_family(const std::string& tag, Complex lambda) {
    if (tag == "round_sphere") return std::make_unique<RoundSphere>(lambda);
    if (tag == "veronese") return std::make_unique<VeroneseSphere>(lambda);
    if (tag == "rp2_m2") return std::make_unique<Rp2M2Family>(lambda);
    if (tag == "rp2_m3") return std::make_unique<Rp2M3Family>(lambda);
    if (tag == "twistor_example" || tag == "twistor") return std::make_unique<TwistorFamily>(lambda);
    if (tag == "enneper") return weierstrass_surface(enneper_data(1), lambda);
    if (tag == "catenoid") return weierstrass_surface(catenoid_data(), lambda, true);
    if (tag == "lawson_klein" || tag == "lawson")
        return std::make_unique<LawsonKleinFamily>(lambda);
    throw UnknownExampleError("unknown family: " + tag);
}

std::unique_ptr<WeierstrassSurface> weierstrass_surface(const WeierstrassData<SurdScalar>& data,
                                                        Complex lambda, bool allow_log_branch) {
    return std::make_unique<WeierstrassFamily>(data, lambda, allow_log_branch);
}

double weierstrass_harmonicity_residual(const WeierstrassSurface& fam, Complex z,
                                        const FdOptions& opts) {
    const double scale = std::max(1.0, std::abs(z));
    const double h1 = opts.first_step * scale;
    const double h2 = opts.second_step * scale;
    auto at = [&](Complex offset) { return fam.minimal_immersion(z + offset); };
    Eigen::Vector3d xx = fd1([&](double t) { return at({t, 0.0}); }, h1);
    Eigen::Vector3d xy = fd1([&](double t) { return at({0.0, t}); }, h1);
    double xz_norm = 0.5 * std::sqrt(xx.squaredNorm() + xy.squaredNorm());
    Eigen::Vector3d xxx = fd2([&](double t) { return at({t, 0.0}); }, h2);
    Eigen::Vector3d xyy = fd2([&](double t) { return at({0.0, t}); }, h2);
    return (0.25 * (xxx + xyy)).norm() / std::max(1.0, xz_norm);
}

VectorR project(const VectorR& y_lift) {
    if (std::abs(y_lift(0)) < 1e-300 * y_lift.cwiseAbs().maxCoeff())
        throw ZeroLeadError("project: leading light-cone component vanishes");
    return y_lift.tail(y_lift.size() - 1) / y_lift(0);
}

VectorR chart_point(const SurfaceFamily& fam, Chart chart, Complex zeta) {
    return project(fam.lift(chart_to_z(chart, zeta)));
}

double lightcone_residual(const SurfaceFamily& fam, Complex z) {
    VectorR y = fam.lift(z);
    if (!(y(0) > 0.0)) return 1.0;
    double q = -sq(y(0)) + y.tail(y.size() - 1).squaredNorm();
    return std::abs(q) / y.squaredNorm();
}

SurfacePointData surface_point_data(const SurfaceFamily& fam, Chart chart, Complex zeta,
                                    const FdOptions& opts, bool with_curvature) {
    const double scale = std::max(1.0, std::abs(zeta));
    const double h1 = opts.first_step * scale;
    const double h2 = opts.second_step * scale;

    auto at = [&](Complex offset) { return chart_point(fam, chart, zeta + offset); };

    SurfacePointData d;
    d.y = at({0.0, 0.0});
    VectorR yx = fd1([&](double t) { return at({t, 0.0}); }, h1);
    VectorR yy = fd1([&](double t) { return at({0.0, t}); }, h1);
    d.y_z = 0.5 * (yx.cast<Complex>() - Complex(0.0, 1.0) * yy.cast<Complex>());
    d.y_zbar = 0.5 * (yx.cast<Complex>() + Complex(0.0, 1.0) * yy.cast<Complex>());
    d.e2u = 0.5 * (yx.squaredNorm() + yy.squaredNorm());
    if (d.e2u < 1e-12) throw BranchPointError("conformal factor vanished at sample point");

    Complex yz_yz = 0.25 * Complex(yx.squaredNorm() - yy.squaredNorm(), -2.0 * yx.dot(yy));
    d.conformality_residual = std::abs(yz_yz) / (0.5 * d.e2u);

    VectorR yxx = fd2([&](double t) { return at({t, 0.0}); }, h2);
    VectorR yyy = fd2([&](double t) { return at({0.0, t}); }, h2);
    d.y_zzbar = 0.25 * (yxx + yyy);
    d.h_vec = (2.0 / d.e2u) * d.y_zzbar + d.y;
    d.minimality_residual = d.h_vec.norm();
    if (with_curvature) d.gauss_curvature = gauss_curvature(fam, chart, zeta, opts);
    return d;
}

double metric_analytic(const SurfaceFamily& fam, Complex z, MetricConvention convention) {
    const double r2 = std::norm(z);
    const std::string tag = fam.name();
    double lift_metric = 0.0, y0 = 0.0;
    if (tag == "round_sphere") {
        // Lift (1+r^2)(1, y): Lorentz <Y_z, Y_zbar> is the constant 2.
        return convention == MetricConvention::lift ? 2.0 : 2.0 / sq(1.0 + r2);
    } else if (tag == "rp2_m2") {
        const double r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
        lift_metric = 30.0 * (1.0 - 4.0 * r2 + 10.0 * r4 - 4.0 * r6 + r8) * sq(1.0 + r2);
        y0 = (3.0 * r4 - 4.0 * r2 + 3.0) * sq(1.0 + r2);
    } else if (tag == "rp2_m3") {
        const double r10 = std::pow(r2, 5), r12 = std::pow(r2, 6), r14 = std::pow(r2, 7),
                     r24 = std::pow(r2, 12);
        lift_metric = 70.0 * (1.0 + 36.0 * r10 + 70.0 * r12 + 36.0 * r14 + r24);
        y0 = 5.0 + 7.0 * r2 + 7.0 * r12 + 5.0 * r14;
    } else if (tag == "twistor_example") {
        const double r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
        lift_metric = 8.0 * (1.0 + r2 + 2.0 * r4 + 16.0 / 9.0 * r6 + r8 / 9.0);
        y0 = 4.0 * r2 + 4.0 / 9.0 * r6 + r4 + 1.0;
    } else {
        throw UnknownExampleError("no documented closed-form metric for family " + tag);
    }
    return convention == MetricConvention::lift ? lift_metric : lift_metric / sq(y0);
}

double metric_fd(const SurfaceFamily& fam, Chart chart, Complex zeta, MetricConvention convention,
                 double first_step) {
    const double h = first_step * std::max(1.0, std::abs(zeta));
    if (convention == MetricConvention::projected) {
        auto at = [&](Complex offset) { return chart_point(fam, chart, zeta + offset); };
        VectorR yx = fd1([&](double t) { return at({t, 0.0}); }, h);
        VectorR yy = fd1([&](double t) { return at({0.0, t}); }, h);
        return 0.25 * (yx.squaredNorm() + yy.squaredNorm());
    }
    auto at = [&](Complex offset) { return fam.lift(chart_to_z(chart, zeta + offset)); };
    VectorR yx = fd1([&](double t) { return at({t, 0.0}); }, h);
    VectorR yy = fd1([&](double t) { return at({0.0, t}); }, h);
    auto lorentz = [](const VectorR& a, const VectorR& b) {
        return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
    };
    // <Y_z, Y_zbar> = 1/4 (<Y_x, Y_x> + <Y_y, Y_y>) for the Lorentz pairing.
    return 0.25 * (lorentz(yx, yx) + lorentz(yy, yy));
}

double mu_invariance_residual(const SurfaceFamily& fam, Complex z) {
    const std::string tag = fam.name();
    int power;  // mu^* Y = r^{-power} Y
    if (tag == "veronese")
        power = 2;
    else if (tag == "rp2_m2")
        power = 8;
    else if (tag == "rp2_m3")
        power = 14;
    else
        throw UnknownExampleError("no documented mu-invariance scale for family " + tag);
    if (z == Complex(0.0, 0.0)) throw DomainError("mu_invariance_residual: z = 0");
    const Complex mu_z = -1.0 / std::conj(z);
    VectorR y = fam.lift(z);
    VectorR y_mu = fam.lift(mu_z);
    const double c = std::pow(std::abs(z), -power);
    return (y_mu / c - y).norm() / y.norm();
}

double veronese_dlambda_residual(Complex z, Complex lambda) {
    if (z == Complex(0.0, 0.0)) throw DomainError("veronese_dlambda_residual: z = 0");
    VeroneseSphere fam_l(lambda);
    VeroneseSphere fam_linv(1.0 / lambda);
    const Complex mu_z = -1.0 / std::conj(z);
    VectorR lhs = std::norm(z) * fam_l.lift(mu_z);

    const Complex c = 0.5 * (1.0 / lambda + lambda);
    const Complex s = 0.5 * (1.0 / lambda - lambda);
    Eigen::Matrix2cd d_tilde;
    d_tilde << c, Complex(0, 1) * s, -Complex(0, 1) * s, c;
    Eigen::Matrix2cd d2 = d_tilde * d_tilde;
    VectorC rhs = fam_linv.lift(z).cast<Complex>();
    rhs.tail(2) = d2 * rhs.tail(2);
    return (lhs.cast<Complex>() - rhs).norm() / rhs.norm();
}

double twistor_reflection_residual(Complex z, Complex lambda) {
    TwistorFamily fam_l(lambda);
    TwistorFamily fam_linv(1.0 / lambda);
    VectorR lhs = project(fam_l.lift(std::conj(z)));
    VectorR rhs = project(fam_linv.lift(z));
    VectorR signs(5);
    signs << 1.0, 1.0, -1.0, 1.0, -1.0;
    return (lhs - signs.cwiseProduct(rhs)).norm() / rhs.norm();
}

double minimality_residual(const SurfaceFamily& fam, Chart chart, Complex zeta,
                           const FdOptions& opts) {
    return surface_point_data(fam, chart, zeta, opts).minimality_residual;
}

double conformality_residual(const SurfaceFamily& fam, Chart chart, Complex zeta,
                             const FdOptions& opts) {
    return surface_point_data(fam, chart, zeta, opts).conformality_residual;
}

double gauss_curvature(const SurfaceFamily& fam, Chart chart, Complex zeta, const FdOptions& opts) {
    const double scale = std::max(1.0, std::abs(zeta));
    const double hk = opts.curvature_step * scale;
    auto log_e2u = [&](Complex offset) {
        double m = metric_fd(fam, chart, zeta + offset, MetricConvention::projected,
                             opts.first_step);
        if (m < 1e-12) throw BranchPointError("gauss_curvature: branch point in stencil");
        return std::log(2.0 * m);
    };
    double lxx = fd2([&](double t) { return log_e2u({t, 0.0}); }, hk);
    double lyy = fd2([&](double t) { return log_e2u({0.0, t}); }, hk);
    double e2u = 2.0 * metric_fd(fam, chart, zeta, MetricConvention::projected, opts.first_step);
    // K = -(2/e2u) d_z d_zbar log e2u, with d_z d_zbar = Laplacian / 4.
    return -(2.0 / e2u) * 0.25 * (lxx + lyy);
}

}  // namespace willsym
