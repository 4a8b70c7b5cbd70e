#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "willsym/rational_map.hpp"

using namespace willsym;

namespace {

SurdScalar q(long num, long den = 1) { return SurdScalar(GaussRational(Rational(num, den))); }
SurdScalar qi(long re, long im) { return SurdScalar(GaussRational(Rational(re), Rational(im))); }

RationalMapX poly(std::initializer_list<SurdScalar> coeffs) {
    return RationalMapX(Polynomial<SurdScalar>(std::vector<SurdScalar>(coeffs)));
}

std::mt19937_64 rng(20260810);

RationalMapX random_map(int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto rand_poly = [&](bool nonzero) {
        std::vector<SurdScalar> c(deg(rng) + 1);
        for (auto& v : c) v = qi(coeff(rng), coeff(rng));
        if (nonzero) {
            bool all_zero = true;
            for (auto& v : c)
                if (!v.is_zero()) all_zero = false;
            if (all_zero) c.back() = q(1);
        }
        return Polynomial<SurdScalar>(c);
    };
    Polynomial<SurdScalar> num = rand_poly(false);
    Polynomial<SurdScalar> den = rand_poly(true);
    if (den.is_zero()) den = Polynomial<SurdScalar>::constant(q(1));
    return RationalMapX(num, den);
}

Complex random_point() {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("surd scalar field arithmetic") {
    SurdScalar a(GaussRational(Rational(1), Rational(2)), GaussRational(Rational(3), Rational(0)), 5);
    SurdScalar b(GaussRational(Rational(-2)), GaussRational(Rational(1, 2), Rational(1)), 5);
    SurdScalar prod = a * b;
    CHECK(std::abs(prod.to_complex() - a.to_complex() * b.to_complex()) < 1e-12);
    SurdScalar inv = a.inverse();
    CHECK((a * inv == SurdScalar(1)));
    CHECK(std::abs(inv.to_complex() - 1.0 / a.to_complex()) < 1e-12);

    SurdScalar conj = a.conjugate();
    CHECK(std::abs(conj.to_complex() - std::conj(a.to_complex())) < 1e-12);

    SurdScalar c = SurdScalar::sqrt_d(3);
    CHECK_THROWS_AS(a + c, FieldMixError);
    // d = 0 values promote freely
    CHECK((q(2) * c == SurdScalar(GaussRational(0), GaussRational(2), 3)));
}

TEST_CASE("square-free radicand enforced") {
    CHECK_THROWS(SurdScalar(GaussRational(0), GaussRational(1), 12));
    CHECK(is_square_free(35));
    CHECK(!is_square_free(8));
}

TEST_CASE("rf_eval examples") {
    // f = z^2 at 1+i -> 2i
    RationalMapX f = poly({q(0), q(0), q(1)});
    CHECK(std::abs(rf_eval(f, {1.0, 1.0}) - Complex(0.0, 2.0)) < 1e-14);

    // Veronese f1 (m = 1): -2z^3 at z = 1 -> -2
    RationalMapX f1 = RationalMapX::monomial(3, q(-2));
    CHECK(std::abs(rf_eval(f1, {1.0, 0.0}) - Complex(-2.0, 0.0)) < 1e-14);

    // 1/z at 0 -> pole
    RationalMapX inv_z(Polynomial<SurdScalar>::constant(q(1)), Polynomial<SurdScalar>::monomial(1));
    CHECK_THROWS_AS(rf_eval(inv_z, {0.0, 0.0}), PoleError);
}

TEST_CASE("rf_derivative examples") {
    RationalMapX z3 = RationalMapX::monomial(3, q(1));
    CHECK((rf_derivative(z3) == RationalMapX::monomial(2, q(3))));

    // -2m z^{2m+1} with m = 2 -> -20 z^4
    RationalMapX f = RationalMapX::monomial(5, q(-4));
    CHECK((rf_derivative(f) == RationalMapX::monomial(4, q(-20))));

    RationalMapX inv_z(Polynomial<SurdScalar>::constant(q(1)), Polynomial<SurdScalar>::monomial(1));
    RationalMapX expect(Polynomial<SurdScalar>::constant(q(-1)),
                        Polynomial<SurdScalar>::monomial(2));
    CHECK((rf_derivative(inv_z) == expect));
}

TEST_CASE("rf_derivative product rule on random pairs") {
    for (int trial = 0; trial < 20; ++trial) {
        RationalMapX f = random_map();
        RationalMapX g = random_map();
        RationalMapX lhs = rf_derivative(f * g);
        RationalMapX rhs = rf_derivative(f) * g + f * rf_derivative(g);
        CHECK(rf_is_zero(lhs - rhs));
    }
}

TEST_CASE("rf_is_zero") {
    // (z^2-1)/(z-1) - (z+1) == 0
    RationalMapX a(Polynomial<SurdScalar>({q(-1), q(0), q(1)}),
                   Polynomial<SurdScalar>({q(-1), q(1)}));
    RationalMapX b = poly({q(1), q(1)});
    CHECK(rf_is_zero(a - b));
    CHECK(!rf_is_zero(RationalMapX::variable()));
}

TEST_CASE("mu_pullback_conjugate examples") {
    MoebiusX antipodal = MoebiusX::antipodal();
    MoebiusX conj_mu = MoebiusX::conjugation();

    // f = z, mu = -1/conj(z) -> -1/z
    RationalMapX z = RationalMapX::variable();
    RationalMapX expect(Polynomial<SurdScalar>::constant(q(-1)),
                        Polynomial<SurdScalar>::monomial(1));
    CHECK((mu_pullback_conjugate(z, antipodal) == expect));

    // f = -2w (lemma f4, m = 1) -> conj(-2 * (-1/conj z)) = 2/z
    RationalMapX f4 = RationalMapX::monomial(1, q(-2), Var::w);
    RationalMapX expect2(Polynomial<SurdScalar>::constant(q(2)),
                         Polynomial<SurdScalar>::monomial(1), Var::w);
    CHECK((mu_pullback_conjugate(f4, antipodal) == expect2));

    // f = i w, mu(z) = conj z -> -i z
    RationalMapX iw = RationalMapX::monomial(1, SurdScalar::i());
    CHECK((mu_pullback_conjugate(iw, conj_mu) == RationalMapX::monomial(1, -SurdScalar::i())));
}

TEST_CASE("mu_pullback_conjugate is an involution for mu = -1/conj z") {
    MoebiusX mu = MoebiusX::antipodal();
    for (int trial = 0; trial < 15; ++trial) {
        RationalMapX f = random_map();
        RationalMapX ff = mu_pullback_conjugate(mu_pullback_conjugate(f, mu), mu);
        CHECK(rf_is_zero(ff - f));
    }
}

TEST_CASE("mu_pullback_conjugate is a ring homomorphism") {
    MoebiusX mu = MoebiusX::antipodal();
    for (int trial = 0; trial < 15; ++trial) {
        RationalMapX f = random_map();
        RationalMapX g = random_map();
        CHECK(rf_is_zero(mu_pullback_conjugate(f * g, mu) -
                         mu_pullback_conjugate(f, mu) * mu_pullback_conjugate(g, mu)));
        CHECK(rf_is_zero(mu_pullback_conjugate(f + g, mu) -
                         (mu_pullback_conjugate(f, mu) + mu_pullback_conjugate(g, mu))));
    }
}

TEST_CASE("pullback agrees with pointwise conj(f(mu(z)))") {
    MoebiusX mu = MoebiusX::antipodal();
    for (int trial = 0; trial < 5; ++trial) {
        RationalMapX f = random_map();
        RationalMapX g = mu_pullback_conjugate(f, mu);
        int hits = 0;
        while (hits < 50) {
            Complex z = random_point();
            if (std::abs(z) < 0.05) continue;
            Complex lhs, rhs;
            try {
                lhs = rf_eval(g, z);
                rhs = std::conj(rf_eval(f, mu.apply(z)));
            } catch (const PoleError&) {
                continue;
            }
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            ++hits;
        }
    }
}

TEST_CASE("floating mode zero test and eval") {
    using RM = RationalMapD;
    RM f(Polynomial<Complex>({{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}));  // z^2 - 1
    RM g(Polynomial<Complex>({{1.0, 0.0}, {1.0, 0.0}}));               // z + 1
    RM h(Polynomial<Complex>({{-1.0, 0.0}, {1.0, 0.0}}));              // z - 1
    CHECK(rf_is_zero_approx(f - g * h));
    CHECK(!rf_is_zero_approx(f - g));
    CHECK_THROWS_AS(rf_is_zero(f), ApproxModeError);

    MoebiusD mu = MoebiusD::antipodal();
    for (int trial = 0; trial < 3; ++trial) {
        RM fd(Polynomial<Complex>({{0.3, -1.2}, {2.0, 0.5}, {0.0, 1.0}}),
              Polynomial<Complex>({{1.0, 0.9}, {1.0, 0.0}}));
        RM gd = mu_pullback_conjugate(fd, mu);
        int hits = 0;
        while (hits < 50) {
            Complex z = random_point();
            if (std::abs(z) < 0.05) continue;
            Complex lhs, rhs;
            try {
                lhs = rf_eval(gd, z);
                rhs = std::conj(rf_eval(fd, mu.apply(z)));
            } catch (const PoleError&) {
                continue;
            }
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
            ++hits;
        }
    }
}

TEST_CASE("moebius order") {
    CHECK(MoebiusX::antipodal().order() == 2);
    CHECK(MoebiusX::conjugation().order() == 2);
    // z -> conj(z) + 1 is an infinite-order translation
    MoebiusX translation(SurdScalar(1), SurdScalar(1), SurdScalar(0), SurdScalar(1), true);
    CHECK(!translation.order().has_value());
    CHECK_THROWS(MoebiusX(SurdScalar(1), SurdScalar(0), SurdScalar(0), SurdScalar(0), false));
}
