#include "willsym/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace willsym {

namespace {

// 7-point Gauss-Legendre on [-1, 1].
constexpr int kGl = 7;
const double kGlNodes[kGl] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                              0.0,                 0.4058451513773972,  0.7415311855993945,
                              0.9491079123427585};
const double kGlWeights[kGl] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                                0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
                                0.1294849661688697};

struct NeumaierSum {
    double acc = 0.0;
    double comp = 0.0;
    void add(double term) {
        double t = acc + term;
        comp += (std::abs(acc) >= std::abs(term)) ? (acc - t) + term : (term - t) + acc;
        acc = t;
    }
    double value() const { return acc + comp; }
};

struct Cell {
    double r0, r1, t0, t1;
};

class PolarIntegrator {
public:
    PolarIntegrator(const ChartDensity& density, Chart chart, const QuadratureOptions& opts)
        : density_(density), chart_(chart), opts_(opts) {}

    double quad(const Cell& c) const {
        const double rm = 0.5 * (c.r0 + c.r1), rh = 0.5 * (c.r1 - c.r0);
        const double tm = 0.5 * (c.t0 + c.t1), th = 0.5 * (c.t1 - c.t0);
        double acc = 0.0;
        for (int i = 0; i < kGl; ++i) {
            const double rho = rm + rh * kGlNodes[i];
            double row = 0.0;
            for (int j = 0; j < kGl; ++j) {
                const double theta = tm + th * kGlNodes[j];
                row += kGlWeights[j] *
                       density_(chart_, Complex(rho * std::cos(theta), rho * std::sin(theta)));
            }
            acc += kGlWeights[i] * rho * row;
        }
        return acc * rh * th;
    }

    double run(double radius, double abs_tol, IntegralResult& out) {
        NeumaierSum sum;
        Cell root{0.0, radius, 0.0, 2.0 * M_PI};
        refine(root, quad(root), abs_tol, 0, sum, out);
        return sum.value();
    }

private:
    void refine(const Cell& c, double parent_q, double tol, int depth, NeumaierSum& sum,
                IntegralResult& out) const {
        const double rm = 0.5 * (c.r0 + c.r1), tm = 0.5 * (c.t0 + c.t1);
        const Cell kids[4] = {{c.r0, rm, c.t0, tm},
                              {rm, c.r1, c.t0, tm},
                              {c.r0, rm, tm, c.t1},
                              {rm, c.r1, tm, c.t1}};
        double q[4];
        double total = 0.0;
        for (int i = 0; i < 4; ++i) {
            q[i] = quad(kids[i]);
            total += q[i];
        }
        const double err = std::abs(total - parent_q);
        if (err <= tol || depth >= opts_.max_depth) {
            if (err > tol) out.converged = false;
            out.error_estimate += err;
            out.cells += 4;
            for (int i = 0; i < 4; ++i) sum.add(q[i]);
            return;
        }
        for (int i = 0; i < 4; ++i) refine(kids[i], q[i], 0.25 * tol, depth + 1, sum, out);
    }

    const ChartDensity& density_;
    Chart chart_;
    QuadratureOptions opts_;
};

double sample_radius(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return 0.98 * std::sqrt(u(rng));  // area-uniform on the chart disk
}

}  // namespace

IntegralResult integrate_chart(const ChartDensity& density, const QuadratureOptions& opts) {
    IntegralResult out;
    PolarIntegrator direct(density, Chart::direct, opts);
    PolarIntegrator inverted(density, Chart::inverted, opts);

    // Rough first pass fixes the absolute tolerance budget.
    Cell root_d{0.0, opts.seam_radius, 0.0, 2.0 * M_PI};
    Cell root_i{0.0, 1.0 / opts.seam_radius, 0.0, 2.0 * M_PI};
    const double estimate = std::abs(direct.quad(root_d)) + std::abs(inverted.quad(root_i));
    const double abs_tol = std::max(opts.rel_tol * std::max(estimate, 1e-12), opts.abs_floor);

    double value = direct.run(opts.seam_radius, 0.5 * abs_tol, out);
    value += inverted.run(1.0 / opts.seam_radius, 0.5 * abs_tol, out);
    out.value = value;
    return out;
}

namespace {

void require_s2_domain(const SurfaceFamily& fam, const char* what) {
    if (!fam.compact_s2_domain())
        throw DomainError(std::string(what) + ": family " + fam.name() +
                          " is not defined on the S^2 chart pair");
}

}  // namespace

IntegralResult area(const SurfaceFamily& fam, const QuadratureOptions& opts) {
    require_s2_domain(fam, "area");
    ChartDensity density = [&](Chart chart, Complex zeta) {
        return 2.0 * metric_fd(fam, chart, zeta, MetricConvention::projected, opts.fd.first_step);
    };
    return integrate_chart(density, opts);
}

IntegralResult willmore_energy(const SurfaceFamily& fam, const QuadratureOptions& opts) {
    require_s2_domain(fam, "willmore_energy");
    QuadratureOptions w_opts = opts;
    // The integrand carries curvature FD noise of order 1e-8 per unit area;
    // a minimal surface's energy density is exactly that noise, so cap the
    // target accordingly.
    w_opts.abs_floor = std::max(opts.abs_floor, 5e-7);
    ChartDensity density = [&](Chart chart, Complex zeta) {
        SurfacePointData d = surface_point_data(fam, chart, zeta, opts.fd);
        double k = gauss_curvature(fam, chart, zeta, opts.fd);
        return (d.h_vec.squaredNorm() + 1.0 - k) * d.e2u;
    };
    return integrate_chart(density, w_opts);
}

IntegralResult gauss_bonnet_total(const SurfaceFamily& fam, const QuadratureOptions& opts) {
    require_s2_domain(fam, "gauss_bonnet_total");
    ChartDensity density = [&](Chart chart, Complex zeta) {
        double e2u =
            2.0 * metric_fd(fam, chart, zeta, MetricConvention::projected, opts.fd.first_step);
        return gauss_curvature(fam, chart, zeta, opts.fd) * e2u;
    };
    return integrate_chart(density, opts);
}

QuadratureReport measure(const SurfaceFamily& fam, const QuadratureOptions& opts,
                         int residual_samples, std::uint64_t seed) {
    QuadratureReport rep;
    IntegralResult a = area(fam, opts);

    QuadratureOptions w_opts = opts;
    w_opts.rel_tol = std::max(opts.rel_tol, 1e-6);  // identity tolerance is 1e-2 relative
    IntegralResult w = willmore_energy(fam, w_opts);
    IntegralResult gb = gauss_bonnet_total(fam, opts);

    rep.area = a.value;
    rep.willmore_energy = w.value;
    rep.gauss_bonnet_total = gb.value;
    rep.cells_used = a.cells + w.cells + gb.cells;
    rep.converged = a.converged && w.converged && gb.converged;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int i = 0; i < residual_samples; ++i) {
        Chart chart = (i % 2 == 0) ? Chart::direct : Chart::inverted;
        double rho = sample_radius(rng);
        if (rho < 1e-3) rho = 1e-3;
        double th = angle(rng);
        Complex zeta(rho * std::cos(th), rho * std::sin(th));
        SurfacePointData d = surface_point_data(fam, chart, zeta, opts.fd);
        rep.max_minimality_residual = std::max(rep.max_minimality_residual, d.minimality_residual);
        rep.max_conformality_residual =
            std::max(rep.max_conformality_residual, d.conformality_residual);
    }
    return rep;
}

}  // namespace willsym
