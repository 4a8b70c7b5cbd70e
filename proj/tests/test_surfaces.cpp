#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "willsym/surfaces.hpp"

using namespace willsym;

namespace {

std::mt19937_64 rng(31337);

Complex random_annulus(double rmin, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double r = std::sqrt(u(rng) * (rmax * rmax - rmin * rmin) + rmin * rmin);
    double th = 2.0 * M_PI * u(rng);
    return std::polar(r, th);
}

const char* kCompactTags[] = {"round_sphere", "veronese", "rp2_m2", "rp2_m3", "twistor_example"};

}  // namespace

TEST_CASE("eval_lift closed forms") {
    auto m2 = make_family("rp2_m2");
    VectorR y = m2->lift({0.0, 0.0});
    VectorR expect(6);
    expect << 3, -3, 0, 0, 0, 0;
    CHECK((y - expect).norm() < 1e-15);

    auto ver = make_family("veronese");
    VectorR yv = ver->lift({0.0, 0.0});
    VectorR ev(6);
    ev << 0.5 / std::sqrt(3.0), -0.5 / std::sqrt(3.0), 0, 0, 0, 0;
    CHECK((yv - ev).norm() < 1e-15);

    auto m3 = make_family("rp2_m3");
    VectorR y3 = m3->lift({1.0, 0.0});
    VectorR e3(6);
    e3 << 24, 4, 0, 0, 4.0 * std::sqrt(35.0), 0;
    CHECK((y3 - e3).norm() < 1e-12);
}

TEST_CASE("project") {
    VectorR a(6);
    a << 1, 1, 0, 0, 0, 0;
    CHECK((project(a) - (VectorR(5) << 1, 0, 0, 0, 0).finished()).norm() < 1e-15);

    VectorR b(6);
    b << 2, 0, 2, 0, 0, 0;
    CHECK((project(b) - (VectorR(5) << 0, 1, 0, 0, 0).finished()).norm() < 1e-15);

    auto m2 = make_family("rp2_m2");
    VectorR y = project(m2->lift({0.0, 0.0}));
    CHECK((y - (VectorR(5) << -1, 0, 0, 0, 0).finished()).norm() < 1e-15);
    CHECK(y.norm() == doctest::Approx(1.0).epsilon(1e-12));

    VectorR zero_lead(6);
    zero_lead << 0, 1, 0, 0, 0, 0;
    CHECK_THROWS_AS(project(zero_lead), ZeroLeadError);
}

TEST_CASE("light-cone invariant at random points") {
    for (const char* tag : kCompactTags) {
        auto fam = make_family(tag, std::polar(1.0, 0.37));
        for (int i = 0; i < 100; ++i) {
            Complex z = random_annulus(0.0, 3.0);
            CHECK(lightcone_residual(*fam, z) < 1e-10);
        }
    }
}

TEST_CASE("metric closed forms") {
    auto m2 = make_family("rp2_m2");
    CHECK(metric_analytic(*m2, {0, 0}, MetricConvention::lift) == doctest::Approx(30.0));
    auto m3 = make_family("rp2_m3");
    CHECK(metric_analytic(*m3, {0, 0}, MetricConvention::lift) == doctest::Approx(70.0));
    auto tw = make_family("twistor_example");
    CHECK(metric_analytic(*tw, {0, 0}, MetricConvention::projected) == doctest::Approx(8.0));

    CHECK_THROWS_AS(metric_analytic(*make_family("veronese"), {0, 0}), UnknownExampleError);
}

TEST_CASE("metric_analytic matches metric_fd") {
    for (const char* tag : {"rp2_m2", "rp2_m3", "twistor_example", "round_sphere"}) {
        auto fam = make_family(tag);
        for (int i = 0; i < 100; ++i) {
            Complex z = random_annulus(0.05, 2.5);
            for (auto conv : {MetricConvention::projected, MetricConvention::lift}) {
                double ma = metric_analytic(*fam, z, conv);
                double mf = metric_fd(*fam, Chart::direct, z, conv);
                CHECK(std::abs(ma - mf) <= 1e-6 * std::abs(ma));
            }
        }
    }
}

TEST_CASE("lift metric is lambda independent for the rp2 families") {
    for (const char* tag : {"rp2_m2", "rp2_m3"}) {
        Complex z = random_annulus(0.2, 1.5);
        double base = metric_fd(*make_family(tag), Chart::direct, z, MetricConvention::lift);
        for (int k = 0; k < 8; ++k) {
            auto fam = make_family(tag, std::polar(1.0, 2.0 * M_PI * k / 8.0));
            double m = metric_fd(*fam, Chart::direct, z, MetricConvention::lift);
            CHECK(std::abs(m - base) <= 1e-10 * std::abs(base));
        }
    }
}

TEST_CASE("rp2_m2 lift metric positivity") {
    auto m2 = make_family("rp2_m2");
    for (double r = 0.0; r <= 4.0; r += 0.05)
        CHECK(metric_analytic(*m2, {r, 0.0}, MetricConvention::lift) > 0.0);
}

TEST_CASE("mu invariance") {
    auto m2 = make_family("rp2_m2");
    CHECK(mu_invariance_residual(*m2, {0.7, 0.2}) < 1e-12);

    auto ver = make_family("veronese", std::polar(1.0, M_PI / 3.0));
    CHECK(mu_invariance_residual(*ver, {0.7, 0.2}) < 1e-12);
    CHECK(veronese_dlambda_residual({0.7, 0.2}, std::polar(1.0, M_PI / 3.0)) < 1e-12);

    auto m3 = make_family("rp2_m3");
    for (int i = 0; i < 100; ++i) {
        Complex z = random_annulus(0.1, 10.0);
        CHECK(mu_invariance_residual(*m2, z) < 1e-10);
        CHECK(mu_invariance_residual(*m3, z) < 1e-10);
        CHECK(mu_invariance_residual(*ver, z) < 1e-10);
    }

    // wrong scale r^{-2} for rp2_m2 misses by orders of magnitude
    Complex z{0.7, 0.2};
    VectorR y = m2->lift(z);
    VectorR y_mu = m2->lift(-1.0 / std::conj(z));
    double wrong = (y_mu * std::pow(std::abs(z), 2) - y).norm() / y.norm();
    CHECK(wrong > 0.1);
}

TEST_CASE("twistor reflection symmetry") {
    for (int i = 0; i < 50; ++i) {
        Complex z = random_annulus(0.05, 2.0);
        CHECK(twistor_reflection_residual(z, std::polar(1.0, 1.3)) < 1e-12);
        CHECK(twistor_reflection_residual(z, {1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("minimality residuals") {
    auto sphere = make_family("round_sphere");
    for (int i = 0; i < 20; ++i)
        CHECK(minimality_residual(*sphere, Chart::direct, random_annulus(0.0, 1.8)) < 1e-8);

    for (const char* tag : {"rp2_m2", "twistor_example", "veronese", "rp2_m3"}) {
        auto fam = make_family(tag, std::polar(1.0, 0.21));
        for (int i = 0; i < 20; ++i)
            CHECK(minimality_residual(*fam, Chart::direct, random_annulus(0.05, 1.6)) < 1e-6);
        // also across the far chart
        for (int i = 0; i < 10; ++i)
            CHECK(minimality_residual(*fam, Chart::inverted, random_annulus(0.1, 0.9)) < 1e-6);
    }
}

namespace {

// Deliberately non-conformal test map (x, 2y) pushed to the sphere chart.
class StretchedSphere final : public SurfaceFamily {
public:
    StretchedSphere() : SurfaceFamily({1.0, 0.0}) {}
    std::string name() const override { return "stretched_sphere"; }
    int sphere_dim() const override { return 2; }
    VectorR lift(Complex z) const override {
        Complex w(z.real(), 2.0 * z.imag());
        double r2 = std::norm(w);
        VectorR y(4);
        y << 1.0 + r2, 2.0 * w.real(), 2.0 * w.imag(), r2 - 1.0;
        return y;
    }
};

}  // namespace

TEST_CASE("conformality residuals") {
    for (const char* tag : kCompactTags) {
        auto fam = make_family(tag, std::polar(1.0, 0.5));
        for (int i = 0; i < 20; ++i)
            CHECK(conformality_residual(*fam, Chart::direct, random_annulus(0.05, 1.8)) < 1e-8);
    }
    StretchedSphere bad;
    CHECK(conformality_residual(bad, Chart::direct, {0.4, 0.3}) > 0.1);

    // Lawson chart is isothermal
    auto lawson = make_family("lawson_klein");
    for (int i = 0; i < 20; ++i) {
        Complex z = random_annulus(0.1, 2.0);
        CHECK(conformality_residual(*lawson, Chart::direct, z) < 1e-8);
    }
}

TEST_CASE("gauss curvature") {
    auto sphere = make_family("round_sphere");
    for (int i = 0; i < 10; ++i)
        CHECK(gauss_curvature(*sphere, Chart::direct, random_annulus(0.0, 1.5)) ==
              doctest::Approx(1.0).epsilon(1e-6));

    auto ver = make_family("veronese");
    CHECK(gauss_curvature(*ver, Chart::direct, {0.0, 0.0}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-5));
    // constant curvature 1/3 everywhere
    CHECK(gauss_curvature(*ver, Chart::direct, {0.8, -0.2}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-5));

    double k2 = gauss_curvature(*make_family("rp2_m2"), Chart::direct, {0.0, 0.0});
    CHECK(std::isfinite(k2));
    CHECK(std::abs(k2) < 10.0);
}

TEST_CASE("weierstrass surfaces") {
    auto enneper = weierstrass_surface(enneper_data(1));
    VectorR y0 = project(enneper->lift({0.0, 0.0}));
    CHECK((y0 - (VectorR(4) << 1, 0, 0, 0).finished()).norm() < 1e-15);

    // x is harmonic (minimal in R^3) and its sphere picture stays conformal
    for (int i = 0; i < 20; ++i) {
        Complex z = random_annulus(0.1, 1.5);
        CHECK(weierstrass_harmonicity_residual(*enneper, z) < 1e-6);
        CHECK(conformality_residual(*enneper, Chart::direct, z) < 1e-8);
    }

    // catenoid: 2 h_z g = 2/z has a residue at 0
    CHECK_THROWS_AS(weierstrass_surface(catenoid_data(), {1.0, 0.0}, false),
                    NonrationalAntiderivativeError);

    auto catenoid = weierstrass_surface(catenoid_data(), {1.0, 0.0}, true);
    CHECK_THROWS_AS(catenoid->lift({-0.5, 0.0}), DomainError);  // branch cut
    for (int i = 0; i < 20; ++i) {
        Complex z = random_annulus(0.3, 1.5);
        if (z.real() < 0.0 && std::abs(z.imag()) < 0.15) continue;
        CHECK(weierstrass_harmonicity_residual(*catenoid, z) < 1e-6);
        CHECK(conformality_residual(*catenoid, Chart::direct, z) < 1e-8);
    }
}

TEST_CASE("domain guards") {
    auto m2 = make_family("rp2_m2");
    CHECK_THROWS_AS(chart_point(*m2, Chart::inverted, {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(make_family("nonesuch"), UnknownExampleError);
    CHECK_THROWS_AS(make_family("veronese", {0.0, 0.0}), DomainError);
}
