#pragma once

#include <cstdint>
#include <functional>

#include "willsym/surfaces.hpp"

namespace willsym {

struct QuadratureOptions {
    double rel_tol = 1e-7;
    /// Absolute tolerance floor; near-zero integrands (the Willmore density
    /// of a round sphere is finite-difference noise) cannot meet a purely
    /// relative target.
    double abs_floor = 0.0;
    int max_depth = 14;
    /// Chart seam: the direct chart covers |z| <= seam_radius, the inverted
    /// chart |w| <= 1/seam_radius.  Moving the seam swaps the charts' roles
    /// on the overlap and must not change integrals.
    double seam_radius = 1.0;
    FdOptions fd;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long cells = 0;
    bool converged = true;
};

/// Per-chart density: the caller supplies the integrand already expressed in
/// the local coordinate of each chart (chain rule included), evaluated over
/// the two polar disks that tile S^2.
using ChartDensity = std::function<double(Chart, Complex)>;

/// Adaptive tensor Gauss-Legendre (7-point) with dyadic subdivision over
/// polar coordinates on both chart disks.
IntegralResult integrate_chart(const ChartDensity& density, const QuadratureOptions& opts = {});

/// int 2 <y_z, y_zbar> over both charts.
IntegralResult area(const SurfaceFamily& fam, const QuadratureOptions& opts = {});

/// int (|H|^2 + 1 - K) dA with H and K from chart-local finite differences.
IntegralResult willmore_energy(const SurfaceFamily& fam, const QuadratureOptions& opts = {});

/// int K dA (2 pi Euler characteristic = 4 pi for these S^2-chart families).
IntegralResult gauss_bonnet_total(const SurfaceFamily& fam, const QuadratureOptions& opts = {});

struct QuadratureReport {
    double area = 0.0;
    double willmore_energy = 0.0;
    double gauss_bonnet_total = 0.0;
    double max_minimality_residual = 0.0;
    double max_conformality_residual = 0.0;
    long cells_used = 0;
    bool converged = false;
};

/// Full measurement run: the three functionals plus maximal pointwise
/// residuals over deterministic sample points on both charts.
QuadratureReport measure(const SurfaceFamily& fam, const QuadratureOptions& opts = {},
                         int residual_samples = 200, std::uint64_t seed = 20260810u);

}  // namespace willsym
