#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "willsym/lawson.hpp"

using namespace willsym;

namespace {

std::mt19937_64 rng(90125);
std::uniform_real_distribution<double> coord(-6.0, 6.0);

// Finite-difference oracle for the closed-form derivative fields.
Eigen::Vector4d fd_dir(double u, double v, bool in_u, double h = 1e-5) {
    auto at = [&](double t) {
        return in_u ? lawson_immersion(u + t, v) : lawson_immersion(u, v + t);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("coordinate change solver") {
    CHECK(solve_vhat(0.0) == 0.0);
    CHECK(solve_vhat(lawson_v0()) == doctest::Approx(M_PI).epsilon(1e-12));
    // v0 equals the complete elliptic integral K(sqrt(3)/2)
    CHECK(lawson_v0() == doctest::Approx(2.15652).epsilon(1e-5));

    std::uniform_real_distribution<double> dv(-20.0, 20.0);
    for (int i = 0; i < 50; ++i) {
        double v = dv(rng);
        double vh = solve_vhat(v);
        // oddness and the quasi-period vhat(v + 2 v0) = vhat(v) + 2 pi
        CHECK(solve_vhat(-v) == doctest::Approx(-vh).epsilon(1e-12));
        CHECK(solve_vhat(v + 2.0 * lawson_v0()) == doctest::Approx(vh + 2.0 * M_PI).epsilon(1e-12));
        // dvhat/dv = e^omega: finite-difference check
        double h = 1e-5;
        double deriv = (solve_vhat(v + h) - solve_vhat(v - h)) / (2.0 * h);
        CHECK(deriv == doctest::Approx(std::sqrt(1.0 + 3.0 * std::pow(std::cos(vh), 2)))
                           .epsilon(1e-8));
    }
}

TEST_CASE("immersion values and symmetries") {
    CHECK((lawson_immersion(0, 0) - Eigen::Vector4d(1, 0, 0, 0)).norm() < 1e-15);

    for (int i = 0; i < 50; ++i) {
        double u = coord(rng), v = coord(rng);
        Eigen::Vector4d y = lawson_immersion(u, v);
        CHECK(std::abs(y.norm() - 1.0) < 1e-14);

        // mu-symmetry (u, v) -> (u + pi, -v)
        CHECK((lawson_immersion(u + M_PI, -v) - y).norm() < 1e-12);
        // double periodicity
        CHECK((lawson_immersion(u + 2.0 * M_PI, v) - y).norm() < 1e-12);
        CHECK((lawson_immersion(u, v + 2.0 * lawson_v0()) - y).norm() < 1e-12);

        // equivariance: rotation by (2t, t)
        double t = 1.234;
        Eigen::Matrix4d rot = Eigen::Matrix4d::Zero();
        rot(0, 0) = rot(1, 1) = std::cos(2 * t);
        rot(0, 1) = -std::sin(2 * t);
        rot(1, 0) = std::sin(2 * t);
        rot(2, 2) = rot(3, 3) = std::cos(t);
        rot(2, 3) = -std::sin(t);
        rot(3, 2) = std::sin(t);
        CHECK((lawson_immersion(u + t, v) - rot * y).norm() < 1e-12);
    }
}

TEST_CASE("derivative fields match finite differences") {
    for (int i = 0; i < 20; ++i) {
        double u = coord(rng), v = coord(rng);
        CHECK((lawson_y_u(u, v) - fd_dir(u, v, true)).norm() < 1e-9);
        CHECK((lawson_y_v(u, v) - fd_dir(u, v, false)).norm() < 1e-9);

        double h = 1e-4;
        Eigen::Vector4d yuu =
            (-lawson_y_u(u + 2 * h, v) + 8 * lawson_y_u(u + h, v) - 8 * lawson_y_u(u - h, v) +
             lawson_y_u(u - 2 * h, v)) /
            (12 * h);
        CHECK((lawson_y_uu(u, v) - yuu).norm() < 1e-9);
        Eigen::Vector4d yuv =
            (-lawson_y_u(u, v + 2 * h) + 8 * lawson_y_u(u, v + h) - 8 * lawson_y_u(u, v - h) +
             lawson_y_u(u, v - 2 * h)) /
            (12 * h);
        CHECK((lawson_y_uv(u, v) - yuv).norm() < 1e-9);
        Eigen::Vector4d yvv =
            (-lawson_y_v(u, v + 2 * h) + 8 * lawson_y_v(u, v + h) - 8 * lawson_y_v(u, v - h) +
             lawson_y_v(u, v - 2 * h)) /
            (12 * h);
        CHECK((lawson_y_vv(u, v) - yvv).norm() < 1e-9);
    }
}

TEST_CASE("frame fields") {
    for (int i = 0; i < 50; ++i) {
        double u = coord(rng), v = coord(rng);
        double vh = solve_vhat(v);
        double e2w = 1.0 + 3.0 * std::pow(std::cos(vh), 2);

        CHECK(std::abs(lawson_y_u(u, v).squaredNorm() - e2w) < 1e-10);
        CHECK(std::abs(lawson_y_v(u, v).squaredNorm() - e2w) < 1e-10);
        CHECK(std::abs(lawson_y_u(u, v).dot(lawson_y_v(u, v))) < 1e-10);

        Eigen::Vector4d n = lawson_normal(u, v);
        CHECK(std::abs(n.norm() - 1.0) < 1e-12);
        CHECK(std::abs(n.dot(lawson_immersion(u, v))) < 1e-12);
        CHECK(std::abs(n.dot(lawson_y_u(u, v))) < 1e-12);
        CHECK(std::abs(n.dot(lawson_y_v(u, v))) < 1e-12);

        CHECK(std::abs(lawson_y_uv(u, v).dot(n) - 2.0) < 1e-8);
        CHECK(std::abs(lawson_y_uu(u, v).dot(n)) < 1e-10);
        CHECK(std::abs(lawson_y_vv(u, v).dot(n)) < 1e-10);
    }
}

TEST_CASE("frame scalars at the origin") {
    auto fr = frame_quantities({0.0, 0.0});
    CHECK(fr.omega == std::log(2.0));
    CHECK(std::abs(fr.omega_z) < 1e-14);
    CHECK(std::abs(fr.s - Complex(1.5, 0.0)) < 1e-8);
    CHECK(std::abs(fr.k - Complex(0.0, -0.5)) < 1e-14);
    CHECK(std::abs(fr.k_zbar) < 1e-12);
    CHECK(fr.big_omega == Complex(0.0, -1.0));
}

TEST_CASE("omega_z closed form satisfies its defining identity") {
    // 2 e^{2w} omega_z = 3 i cos(vhat) sin(vhat) e^w
    for (int i = 0; i < 20; ++i) {
        double v = coord(rng);
        auto fr = frame_quantities({coord(rng), v});
        double ew = std::exp(fr.omega);
        Complex lhs = 2.0 * ew * ew * fr.omega_z;
        Complex rhs = Complex(0, 3) * std::cos(fr.vhat) * std::sin(fr.vhat) * ew;
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("minimality of the immersion") {
    for (int i = 0; i < 50; ++i) {
        double u = coord(rng), v = coord(rng);
        double vh = solve_vhat(v);
        double e2w = 1.0 + 3.0 * std::pow(std::cos(vh), 2);
        Eigen::Vector4d yzzb = 0.25 * (lawson_y_uu(u, v) + lawson_y_vv(u, v));
        Eigen::Vector4d res = yzzb + 0.5 * e2w * lawson_immersion(u, v);
        Eigen::Vector4d yu = lawson_y_u(u, v), yv = lawson_y_v(u, v);
        CHECK(std::abs(res.dot(yu)) / yu.norm() < 1e-8);
        CHECK(std::abs(res.dot(yv)) / yv.norm() < 1e-8);
        CHECK(res.norm() < 1e-8);  // y_zzbar = -(1/2) e^{2w} y holds exactly
    }
}

TEST_CASE("potential matrix L_lambda") {
    LaurentMatrix l = build_L_lambda();
    CHECK(l.size() == 5);
    CHECK(l.k_min() == -1);
    CHECK(l.k_max() == 1);

    // entry (3,5) at lambda = i is i(lambda^{-1} - lambda)/2 = 1
    MatrixC at_i = l.eval({0.0, 1.0});
    CHECK(std::abs(at_i(2, 4) - Complex(1.0, 0.0)) < 1e-15);

    // L_1 = conj(L_{-1}) and the block twist for the (4,1) split
    CHECK(check_reality(l).passes());
    CHECK(check_twisting(l, {4, 1}).passes());

    // Maurer-Cartan antisymmetry A^t I_{1,4} + I_{1,4} A = 0 on the circle
    MatrixC i14 = SignatureForm{1, 4}.matrix().cast<Complex>();
    for (auto lambda : unit_circle_samples(8)) {
        MatrixC a = l.eval(lambda);
        CHECK((a.transpose() * i14 + i14 * a).cwiseAbs().maxCoeff() < 1e-14);
    }

    auto eig = eigen_data(l.eval({1.0, 0.0}));
    std::vector<Complex> expected = {{0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}};
    for (size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(eig[i] - expected[i]) < 1e-10);
}

TEST_CASE("klein monodromy") {
    auto rep = klein_monodromy({1.0, 0.0});
    std::vector<Complex> expected = {{-1, 0}, {-1, 0}, {1, 0}, {1, 0}, {1, 0}};
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(rep.eigenvalues[i] - expected[i]) < 1e-10);
    // chi(1) is exactly diag(1,1,1,-1,-1)
    MatrixC p = MatrixC::Identity(5, 5);
    p(3, 3) = -1.0;
    p(4, 4) = -1.0;
    CHECK((rep.chi - p).cwiseAbs().maxCoeff() < 1e-13);

    for (auto lambda : unit_circle_samples(8)) {
        auto r = klein_monodromy(lambda);
        CHECK(r.orthogonality_residual < 1e-10);
        CHECK(r.reality_residual < 1e-12);
        CHECK(r.det_residual < 1e-10);
    }

    // the mu- and translation-monodromies commute (abelian image)
    LaurentMatrix l = build_L_lambda();
    for (auto lambda : unit_circle_samples(8)) {
        MatrixC a = lm_exp(l.eval(lambda), M_PI);
        MatrixC b = lm_exp(l.eval(lambda), 2.0 * M_PI);
        CHECK((a * b - b * a).cwiseAbs().maxCoeff() < 1e-10);
    }

    CHECK_THROWS_AS(klein_monodromy({2.0, 0.0}), DomainError);
}
