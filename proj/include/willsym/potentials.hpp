#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "willsym/loopalg.hpp"
#include "willsym/rational_map.hpp"

namespace willsym {

template <class S>
S unit_i();
template <>
inline SurdScalar unit_i<SurdScalar>() {
    return SurdScalar::i();
}
template <>
inline Complex unit_i<Complex>() {
    return Complex(0.0, 1.0);
}

/// Exact lift of a double (doubles are dyadic rationals).
template <class S>
S scalar_from_double(double v);
template <>
inline SurdScalar scalar_from_double<SurdScalar>(double v) {
    return SurdScalar(GaussRational(Rational(v)));
}
template <>
inline Complex scalar_from_double<Complex>(double v) {
    return Complex(v, 0.0);
}

/// Dense matrix of rational maps (symbolic analogue of a numeric block).
template <class S>
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(rows * cols, RationalMap<S>()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalMap<S>& at(int i, int j) { return data_[i * cols_ + j]; }
    const RationalMap<S>& at(int i, int j) const { return data_[i * cols_ + j]; }

    RationalMatrix transpose() const {
        RationalMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    RationalMatrix conj_coeffs() const {
        RationalMatrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).conj_coeffs();
        return r;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw SizeMismatchError("RationalMatrix: product size mismatch");
        RationalMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                RationalMap<S> acc;
                for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    bool all_zero(double tol = 1e-10) const {
        for (const auto& f : data_)
            if (!is_zero_map(f, tol)) return false;
        return true;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<RationalMap<S>> data_;
};

/// The data (f1, f2, f3, f4) of an isotropic potential; g3 is always derived
/// as -(f1 f4 + f2 f3), never stored.
template <class S>
struct IsotropicQuadruple {
    RationalMap<S> f1, f2, f3, f4;

    RationalMap<S> g3() const { return -(f1 * f4 + f2 * f3); }

    bool is_zero(double tol = 1e-10) const {
        return is_zero_map(f1, tol) && is_zero_map(f2, tol) && is_zero_map(f3, tol) &&
               is_zero_map(f4, tol);
    }
};

/// The B1 block of a normalized potential
/// eta = lambda^{-1} [[0, B1], [-B1^t I_{1,3}, 0]] dz for a surface in
/// S^{ambient_n + 2}.
template <class S>
struct NormalizedPotential {
    RationalMatrix<S> b1;  // 4 x ambient_n
    int ambient_n = 2;
};

/// Antiholomorphic symmetry datum (mu, S-hat) with S-hat = diag(S1, S2);
/// det_flag is m = (det(S-hat) + 3) / 2 in {1, 2}.
template <class S>
struct SymmetrySpec {
    MoebiusSymmetry<S> mu;
    Eigen::Matrix4d s_hat1;
    MatrixR s_hat2;
    int det_flag = 1;

    void validate(double tol = 1e-12) const {
        if (!mu.antiholomorphic) throw Error("SymmetrySpec: mu must be antiholomorphic");
        SignatureForm i13{1, 3};
        if ((s_hat1.transpose() * i13.matrix() * s_hat1 - i13.matrix()).cwiseAbs().maxCoeff() > tol)
            throw Error("SymmetrySpec: S1 is not I_{1,3}-orthogonal");
        MatrixR id = MatrixR::Identity(s_hat2.rows(), s_hat2.cols());
        if ((s_hat2.transpose() * s_hat2 - id).cwiseAbs().maxCoeff() > tol)
            throw Error("SymmetrySpec: S2 is not orthogonal");
        double det = s_hat1.determinant() * s_hat2.determinant();
        int m = static_cast<int>(std::lround((det + 3.0) / 2.0));
        if (m != det_flag) throw Error("SymmetrySpec: det flag inconsistent with blocks");
    }
};

/// Weierstrass data (h, g) normalized by h(0) = 1, g(0) = 0; the catenoid
/// case h = -1/z is admitted with the pole at 0 exempted from normalization.
template <class S>
struct WeierstrassData {
    RationalMap<S> h, g;
};

// --- canonical inputs --------------------------------------------------------

/// f1 = -2m z^{2m+1}, f2 = f3 = i sqrt(4m^2-1) z^{2m}, f4 = -2m z^{2m-1}.
IsotropicQuadruple<SurdScalar> lemma_family(int m);

/// f1 = 4z^3/3, f2 = f3 = i z^2, f4 = z (the twistor-deformed sphere data).
IsotropicQuadruple<SurdScalar> twistor_quadruple();

/// (mu(z) = conj z, S-hat = (diag(1,1,1,-1), I_n)): det = -1, m = 1.
SymmetrySpec<SurdScalar> reflection_spec_p(int n);

/// (mu(z) = conj z, S-hat = (diag(1,1,1,-1), diag(1,-1,...))): det = +1, m = 2.
SymmetrySpec<SurdScalar> reflection_spec_p_hat(int n);

/// Enneper h = z, g = z^n and catenoid h = -1/z, g = z.
WeierstrassData<SurdScalar> enneper_data(int n = 1);
WeierstrassData<SurdScalar> catenoid_data();

// --- operations ----------------------------------------------------------------

/// B1 from a quadruple per the displayed closed form (global 1/2 kept):
///   col1 = 1/2 ( i(f3'-f2'), i(f3'+f2'), f4'-f1', i(f4'+f1') )
///   col2 = 1/2 ( -(f3'-f2'), -(f3'+f2'), i(f4'-f1'), -(f4'+f1') ).
template <class S>
NormalizedPotential<S> build_isotropic_potential(const IsotropicQuadruple<S>& q) {
    const S half = S(1) / S(2);
    const S iu = unit_i<S>();
    RationalMap<S> diff32 = q.f3.derivative() - q.f2.derivative();
    RationalMap<S> sum32 = q.f3.derivative() + q.f2.derivative();
    RationalMap<S> diff41 = q.f4.derivative() - q.f1.derivative();
    RationalMap<S> sum41 = q.f4.derivative() + q.f1.derivative();
    NormalizedPotential<S> pot;
    pot.ambient_n = 2;
    pot.b1 = RationalMatrix<S>(4, 2);
    pot.b1.at(0, 0) = half * (iu * diff32);
    pot.b1.at(1, 0) = half * (iu * sum32);
    pot.b1.at(2, 0) = half * diff41;
    pot.b1.at(3, 0) = half * (iu * sum41);
    pot.b1.at(0, 1) = -(half * diff32);
    pot.b1.at(1, 1) = -(half * sum32);
    pot.b1.at(2, 1) = half * (iu * diff41);
    pot.b1.at(3, 1) = -(half * sum41);
    return pot;
}

/// f1' f4' + f2' f3' = 0 as an exact (or sampled) identity.
template <class S>
bool check_isotropy(const IsotropicQuadruple<S>& q, double tol = 1e-10) {
    return is_zero_map(
        q.f1.derivative() * q.f4.derivative() + q.f2.derivative() * q.f3.derivative(), tol);
}

/// Residuals of the four descent equations
///   r_j = f_j + (f1 f4 + f2 f3) * conj(f_{sigma(j)}(mu(z))),
/// with the displayed pairing sigma = (1<->4, 2<->2, 3<->3, 4<->1) and
/// mu(z) = -1/conj(z).
template <class S>
struct DescentReport {
    std::array<RationalMap<S>, 4> residuals;
    bool passes = false;
    bool degenerate_g3 = false;
};

template <class S>
DescentReport<S> check_rp2_descent(const IsotropicQuadruple<S>& q, double tol = 1e-10) {
    const MoebiusSymmetry<S> mu = MoebiusSymmetry<S>::antipodal();
    const RationalMap<S> g = q.f1 * q.f4 + q.f2 * q.f3;  // = -g3
    DescentReport<S> rep;
    rep.degenerate_g3 = is_zero_map(g, tol) && !q.is_zero(tol);
    const std::array<const RationalMap<S>*, 4> f = {&q.f1, &q.f2, &q.f3, &q.f4};
    const std::array<int, 4> sigma = {3, 1, 2, 0};  // pairing 1<->4, 2<->2, 3<->3, 4<->1
    rep.passes = true;
    for (int j = 0; j < 4; ++j) {
        rep.residuals[j] = *f[j] + g * mu_pullback_conjugate(*f[sigma[j]], mu);
        if (!is_zero_map(rep.residuals[j], tol)) rep.passes = false;
    }
    return rep;
}

/// B1(mu(z)) = S1 conj(B1(z)) S2^{-1} entrywise, as exact identities in the
/// variable w = conj(z): B1 composed with the holomorphic part of mu on the
/// left, coefficient conjugation on the right.
template <class S>
bool check_reflection_condition(const NormalizedPotential<S>& pot, const SymmetrySpec<S>& spec,
                                double tol = 1e-10) {
    spec.validate();
    const int n = pot.ambient_n;
    if (spec.s_hat2.rows() != n) throw SizeMismatchError("reflection check: S2 size mismatch");
    RationalMatrix<S> conj_b1 = pot.b1.conj_coeffs();
    MatrixR s2_inv = spec.s_hat2.transpose();  // orthogonal
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < n; ++j) {
            RationalMap<S> lhs = compose_antiholomorphic_part(pot.b1.at(i, j), spec.mu);
            RationalMap<S> rhs;
            for (int k = 0; k < 4; ++k) {
                if (spec.s_hat1(i, k) == 0.0) continue;
                for (int l = 0; l < n; ++l) {
                    if (s2_inv(l, j) == 0.0) continue;
                    rhs = rhs +
                          scalar_from_double<S>(spec.s_hat1(i, k) * s2_inv(l, j)) * conj_b1.at(k, l);
                }
            }
            if (!is_zero_map(lhs - rhs, tol)) return false;
        }
    }
    return true;
}

/// Per-entry parity table for the reflection theorem with S-hat = P-hat:
/// rows 1 and 4 obey h(conj z) = (-1)^{j+1} conj(h(z)), rows 2 and 3 obey
/// h(conj z) = (-1)^j conj(h(z)), j the 1-based column index.
struct ParityTable {
    std::vector<std::array<bool, 4>> entry_ok;  // [col][row]
    bool passes = true;
};

template <class S>
ParityTable check_reflection_parity(const RationalMatrix<S>& b1, double tol = 1e-10) {
    if (b1.rows() != 4) throw SizeMismatchError("parity check: B1 must have 4 rows");
    ParityTable table;
    table.entry_ok.resize(b1.cols());
    for (int j = 0; j < b1.cols(); ++j) {
        const int jj = j + 1;
        for (int i = 0; i < 4; ++i) {
            const bool outer_row = (i == 0 || i == 3);
            const int sign = outer_row ? ((jj % 2 == 1) ? 1 : -1) : ((jj % 2 == 0) ? 1 : -1);
            RationalMap<S> diff =
                b1.at(i, j) - scalar_from_double<S>(sign) * b1.at(i, j).conj_coeffs();
            const bool ok = is_zero_map(diff, tol);
            table.entry_ok[j][i] = ok;
            if (!ok) table.passes = false;
        }
    }
    return table;
}

enum class UnitonType { minimal, isotropic, neither };

inline std::string to_string(UnitonType t) {
    switch (t) {
        case UnitonType::minimal: return "minimal-type";
        case UnitonType::isotropic: return "isotropic-type";
        default: return "neither";
    }
}

struct UnitonClassification {
    std::vector<UnitonType> pairs;
    bool orthogonality_ok = true;  // v^t I_{1,3} v relations across all columns
};

/// Classify consecutive column pairs (v_j, v-hat_j): minimal-type when both
/// columns have the shape (a, a, b, ib); isotropic-type when v-hat_j = i v_j.
template <class S>
UnitonClassification classify_finite_uniton_columns(const RationalMatrix<S>& b1,
                                                    double tol = 1e-10) {
    if (b1.rows() != 4) throw SizeMismatchError("uniton classification: B1 must have 4 rows");
    if (b1.cols() % 2 != 0)
        throw SizeMismatchError("uniton classification: even number of columns required");
    const S iu = unit_i<S>();
    UnitonClassification out;

    auto minimal_shape = [&](int col) {
        return is_zero_map(b1.at(0, col) - b1.at(1, col), tol) &&
               is_zero_map(b1.at(3, col) - iu * b1.at(2, col), tol);
    };

    for (int j = 0; j + 1 < b1.cols(); j += 2) {
        bool minimal = minimal_shape(j) && minimal_shape(j + 1);
        bool isotropic = true;
        for (int i = 0; i < 4; ++i)
            if (!is_zero_map(b1.at(i, j + 1) - iu * b1.at(i, j), tol)) isotropic = false;
        if (minimal)
            out.pairs.push_back(UnitonType::minimal);
        else if (isotropic)
            out.pairs.push_back(UnitonType::isotropic);
        else
            out.pairs.push_back(UnitonType::neither);
    }

    for (int j = 0; j < b1.cols() && out.orthogonality_ok; ++j) {
        for (int l = j; l < b1.cols(); ++l) {
            RationalMap<S> acc = -(b1.at(0, j) * b1.at(0, l)) + b1.at(1, j) * b1.at(1, l) +
                                 b1.at(2, j) * b1.at(2, l) + b1.at(3, j) * b1.at(3, l);
            if (!is_zero_map(acc, tol)) {
                out.orthogonality_ok = false;
                break;
            }
        }
    }
    return out;
}

/// Reality of the Weierstrass data: g_z(conj z) = conj(g_z(z)) and
/// h(conj z) = conj(h(z)), i.e. real coefficients as rational maps.
template <class S>
bool check_weierstrass_reflection(const WeierstrassData<S>& w, double tol = 1e-10) {
    RationalMap<S> gz = w.g.derivative();
    return is_zero_map(gz - gz.conj_coeffs(), tol) && is_zero_map(w.h - w.h.conj_coeffs(), tol);
}

/// B1^t I_{1,3} B1 as a symbolic 2x2 block (identically zero iff isotropic).
template <class S>
RationalMatrix<S> b1_isotropy_product(const NormalizedPotential<S>& pot) {
    RationalMatrix<S> i13(4, 4);
    for (int i = 0; i < 4; ++i) i13.at(i, i) = RationalMap<S>::constant(i == 0 ? S(-1) : S(1));
    return pot.b1.transpose() * (i13 * pot.b1);
}

/// eta(z) = lambda^{-1} [[0, B1(z)], [-B1(z)^t I_{1,3}, 0]] as a numeric
/// Laurent matrix at the point z.
template <class S>
LaurentMatrix potential_matrix_at(const NormalizedPotential<S>& pot, Complex z) {
    const int n = pot.ambient_n;
    const int size = 4 + n;
    MatrixC b1(4, n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < n; ++j) b1(i, j) = pot.b1.at(i, j).eval(z);
    MatrixC full = MatrixC::Zero(size, size);
    full.topRightCorner(4, n) = b1;
    MatrixC i13 = SignatureForm{1, 3}.matrix().cast<Complex>();
    full.bottomLeftCorner(n, 4) = -(b1.transpose() * i13);
    LaurentMatrix eta(size, -1, -1);
    eta.set_coeff(-1, full);
    return eta;
}

/// The 4x1 column 1/2 (-h g_z/sqrt2, -h g_z/sqrt2, -g_z, -i g_z) of the
/// reflection example; minimal-type by construction.
RationalMatrix<SurdScalar> weierstrass_b1_column(const WeierstrassData<SurdScalar>& w);

/// Same column padded with a zero partner column, for pair classification.
RationalMatrix<SurdScalar> weierstrass_b1_padded(const WeierstrassData<SurdScalar>& w);

}  // namespace willsym
