#include "willsym/potentials.hpp"

namespace willsym {

IsotropicQuadruple<SurdScalar> lemma_family(int m) {
    if (m < 1) throw Error("lemma_family: m must be positive");
    const unsigned long d = static_cast<unsigned long>(4L * m * m - 1L);
    IsotropicQuadruple<SurdScalar> q;
    SurdScalar minus_2m(-2L * m);
    SurdScalar i_sqrt = SurdScalar::i() * SurdScalar::sqrt_d(d);
    q.f1 = RationalMapX::monomial(2 * m + 1, minus_2m);
    q.f2 = RationalMapX::monomial(2 * m, i_sqrt);
    q.f3 = q.f2;
    q.f4 = RationalMapX::monomial(2 * m - 1, minus_2m);
    return q;
}

IsotropicQuadruple<SurdScalar> twistor_quadruple() {
    IsotropicQuadruple<SurdScalar> q;
    q.f1 = RationalMapX::monomial(3, SurdScalar(GaussRational(Rational(4, 3))));
    q.f2 = RationalMapX::monomial(2, SurdScalar::i());
    q.f3 = q.f2;
    q.f4 = RationalMapX::variable();
    return q;
}

namespace {

MoebiusX conjugation_mu() { return MoebiusX::conjugation(); }

Eigen::Matrix4d p_hat1() {
    Eigen::Matrix4d s = Eigen::Matrix4d::Identity();
    s(3, 3) = -1.0;
    return s;
}

}  // namespace

SymmetrySpec<SurdScalar> reflection_spec_p(int n) {
    SymmetrySpec<SurdScalar> spec{conjugation_mu(), p_hat1(), MatrixR::Identity(n, n), 1};
    spec.validate();
    return spec;
}

SymmetrySpec<SurdScalar> reflection_spec_p_hat(int n) {
    if (n % 2 != 0) throw Error("reflection_spec_p_hat: n must be even");
    MatrixR s2 = MatrixR::Identity(n, n);
    for (int i = 1; i < n; i += 2) s2(i, i) = -1.0;
    // det(S2) alternates with n/2, so the flag depends on n: m = (det + 3)/2.
    int flag = (n / 2) % 2 == 1 ? 2 : 1;
    SymmetrySpec<SurdScalar> spec{conjugation_mu(), p_hat1(), s2, flag};
    spec.validate();
    return spec;
}

WeierstrassData<SurdScalar> enneper_data(int n) {
    if (n < 1) throw Error("enneper_data: n must be positive");
    WeierstrassData<SurdScalar> w;
    w.h = RationalMapX::variable();
    w.g = RationalMapX::monomial(n, SurdScalar(1));
    return w;
}

WeierstrassData<SurdScalar> catenoid_data() {
    WeierstrassData<SurdScalar> w;
    w.h = RationalMapX(Polynomial<SurdScalar>::constant(SurdScalar(-1)),
                       Polynomial<SurdScalar>::monomial(1));
    w.g = RationalMapX::variable();
    return w;
}

RationalMatrix<SurdScalar> weierstrass_b1_column(const WeierstrassData<SurdScalar>& w) {
    RationalMatrix<SurdScalar> b1(4, 1);
    const SurdScalar half(GaussRational(Rational(1, 2)));
    // 1/sqrt(2) = sqrt(2)/2
    const SurdScalar inv_sqrt2(GaussRational(0), GaussRational(Rational(1, 2)), 2);
    RationalMapX gz = w.g.derivative();
    RationalMapX top = -(half * (inv_sqrt2 * (w.h * gz)));
    b1.at(0, 0) = top;
    b1.at(1, 0) = top;
    b1.at(2, 0) = -(half * gz);
    b1.at(3, 0) = -(half * (SurdScalar::i() * gz));
    return b1;
}

RationalMatrix<SurdScalar> weierstrass_b1_padded(const WeierstrassData<SurdScalar>& w) {
    RationalMatrix<SurdScalar> col = weierstrass_b1_column(w);
    RationalMatrix<SurdScalar> b1(4, 2);
    for (int i = 0; i < 4; ++i) b1.at(i, 0) = col.at(i, 0);
    return b1;
}

}  // namespace willsym
