#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "willsym/functionals.hpp"

using namespace willsym;

TEST_CASE("calibration: round sphere") {
    auto sphere = make_family("round_sphere");
    auto a = area(*sphere);
    CHECK(a.converged);
    CHECK(std::abs(a.value - 4.0 * M_PI) < 1e-6 * 4.0 * M_PI);

    auto w = willmore_energy(*sphere);
    CHECK(std::abs(w.value) < 1e-6);

    auto gb = gauss_bonnet_total(*sphere);
    CHECK(std::abs(gb.value - 4.0 * M_PI) < 1e-6 * 4.0 * M_PI);
}

TEST_CASE("indicator density integrates to pi") {
    ChartDensity f = [](Chart chart, Complex) { return chart == Chart::direct ? 1.0 : 0.0; };
    auto r = integrate_chart(f);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(M_PI).epsilon(1e-9));
}

TEST_CASE("areas reproduce the closed-form values") {
    struct Row {
        const char* tag;
        double multiple;
    } rows[] = {{"veronese", 12.0}, {"twistor_example", 12.0}, {"rp2_m2", 20.0}, {"rp2_m3", 28.0}};
    for (const auto& row : rows) {
        auto fam = make_family(row.tag);
        auto a = area(*fam);
        CHECK(a.converged);
        CHECK(std::abs(a.value - row.multiple * M_PI) < 2e-3 * row.multiple * M_PI);
    }
}

TEST_CASE("willmore energies") {
    QuadratureOptions opts;
    opts.rel_tol = 1e-6;
    auto m2 = make_family("rp2_m2");
    CHECK(willmore_energy(*m2, opts).value == doctest::Approx(16.0 * M_PI).epsilon(1e-4));
    auto ver = make_family("veronese");
    CHECK(willmore_energy(*ver, opts).value == doctest::Approx(8.0 * M_PI).epsilon(1e-4));
}

TEST_CASE("gauss-bonnet totals") {
    for (const char* tag : {"veronese", "rp2_m2"}) {
        auto fam = make_family(tag);
        CHECK(std::abs(gauss_bonnet_total(*fam).value - 4.0 * M_PI) < 1e-3);
    }
}

TEST_CASE("willmore identity for the minimal families") {
    for (const char* tag : {"veronese", "twistor_example", "rp2_m2", "rp2_m3"}) {
        auto fam = make_family(tag);
        auto a = area(*fam);
        QuadratureOptions opts;
        opts.rel_tol = 1e-6;
        auto w = willmore_energy(*fam, opts);
        CHECK(std::abs(w.value - (a.value - 4.0 * M_PI)) / a.value < 1e-2);
    }
}

TEST_CASE("chart-seam independence") {
    auto m2 = make_family("rp2_m2");
    QuadratureOptions base;
    QuadratureOptions moved;
    moved.seam_radius = 2.0;
    double a0 = area(*m2, base).value;
    double a1 = area(*m2, moved).value;
    CHECK(std::abs(a0 - a1) < 1e-8 * a0);
}

TEST_CASE("area is independent of the family parameter") {
    for (const char* tag : {"veronese", "rp2_m2"}) {
        double base = area(*make_family(tag)).value;
        for (int k = 0; k < 8; ++k) {
            auto fam = make_family(tag, std::polar(1.0, 2.0 * M_PI * k / 8.0));
            CHECK(std::abs(area(*fam).value - base) < 1e-6 * base);
        }
    }
}

TEST_CASE("measure report") {
    auto m2 = make_family("rp2_m2");
    auto rep = measure(*m2);
    CHECK(rep.converged);
    CHECK(rep.area == doctest::Approx(20.0 * M_PI).epsilon(2e-3));
    CHECK(rep.willmore_energy >= 0.0);
    CHECK(rep.max_minimality_residual < 1e-5);
    CHECK(rep.max_conformality_residual < 1e-8);

    QuadratureOptions shallow;
    shallow.max_depth = 1;
    shallow.rel_tol = 1e-12;
    auto bad = measure(*m2, shallow, 8);
    CHECK(!bad.converged);

    CHECK_THROWS_AS(measure(*make_family("lawson_klein")), DomainError);
}
