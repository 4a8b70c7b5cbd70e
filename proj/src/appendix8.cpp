#include "willsym/appendix8.hpp"

namespace willsym {

namespace {

using Rm = RationalMapX;

Rm rm_one() { return Rm::constant(SurdScalar(1)); }

/// Composition with the holomorphic map w -> -1/w underlying mu.
Rm hat(const Rm& f) { return f.compose_moebius(SurdScalar(0), SurdScalar(-1), SurdScalar(1), SurdScalar(0)); }

/// Coefficient conjugation: conj(f(z)) read as a rational map in w = conj z.
Rm bar(const Rm& f) {
    Rm g = f.conj_coeffs();
    g.set_var(Var::w);
    return g;
}

struct MapSet {
    Rm f1, f2, f3, f4, g3;
};

BiRationalLaurentMatrix fminus_from_maps(const MapSet& m) {
    BiRationalLaurentMatrix r = BiRationalLaurentMatrix::identity();
    r.at(1, 2) = LaurentRm::term(-1, m.f1);
    r.at(1, 3) = LaurentRm::term(-1, m.f2);
    r.at(1, 4) = LaurentRm::term(-1, m.f3);
    r.at(1, 5) = LaurentRm::term(-1, m.f4);
    r.at(1, 6) = LaurentRm::term(-2, m.g3);
    r.at(2, 6) = LaurentRm::term(-1, -m.f4);
    r.at(3, 6) = LaurentRm::term(-1, -m.f3);
    r.at(4, 6) = LaurentRm::term(-1, -m.f2);
    r.at(5, 6) = LaurentRm::term(-1, -m.f1);
    return r;
}

MapSet maps_of(const IsotropicQuadruple<SurdScalar>& q) {
    return {q.f1, q.f2, q.f3, q.f4, q.g3()};
}

MapSet bar_maps(const MapSet& m) { return {bar(m.f1), bar(m.f2), bar(m.f3), bar(m.f4), bar(m.g3)}; }

MapSet hat_maps(const MapSet& m) { return {hat(m.f1), hat(m.f2), hat(m.f3), hat(m.f4), hat(m.g3)}; }

void enforce_degree_cap(const BiRationalLaurentMatrix& m, int degree_cap, const char* where) {
    if (m.max_map_degree() > degree_cap)
        throw DegreeCapError(std::string(where) + ": rational-map degree exceeds cap");
}

}  // namespace

LaurentRm LaurentRm::term(int k, Rm f) {
    LaurentRm r;
    if (!f.num().is_zero()) r.terms_[k] = std::move(f);
    return r;
}

LaurentRm LaurentRm::one() { return term(0, rm_one()); }

Rm LaurentRm::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rm() : it->second;
}

void LaurentRm::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.num().is_zero() ? terms_.erase(it) : std::next(it);
}

LaurentRm operator+(const LaurentRm& a, const LaurentRm& b) {
    LaurentRm r = a;
    for (const auto& [k, f] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
            r.terms_[k] = f;
        else
            it->second = it->second + f;
    }
    r.prune();
    return r;
}

LaurentRm operator-(const LaurentRm& a) {
    LaurentRm r = a;
    for (auto& [k, f] : r.terms_) f = -f;
    return r;
}

LaurentRm operator-(const LaurentRm& a, const LaurentRm& b) { return a + (-b); }

LaurentRm operator*(const LaurentRm& a, const LaurentRm& b) {
    LaurentRm r;
    for (const auto& [ka, fa] : a.terms_)
        for (const auto& [kb, fb] : b.terms_) {
            auto it = r.terms_.find(ka + kb);
            if (it == r.terms_.end())
                r.terms_[ka + kb] = fa * fb;
            else
                it->second = it->second + fa * fb;
        }
    r.prune();
    return r;
}

bool operator==(const LaurentRm& a, const LaurentRm& b) { return (a - b).is_zero(); }

int LaurentRm::max_map_degree() const {
    int d = 0;
    for (const auto& [k, f] : terms_)
        d = std::max({d, f.num().degree(), f.den().degree()});
    return d;
}

BiRationalLaurentMatrix BiRationalLaurentMatrix::identity() {
    BiRationalLaurentMatrix r;
    for (int i = 0; i < 8; ++i) r.at(i, i) = LaurentRm::one();
    return r;
}

BiRationalLaurentMatrix BiRationalLaurentMatrix::transpose() const {
    BiRationalLaurentMatrix r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.at(j, i) = at(i, j);
    return r;
}

BiRationalLaurentMatrix operator*(const BiRationalLaurentMatrix& a,
                                  const BiRationalLaurentMatrix& b) {
    BiRationalLaurentMatrix r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            LaurentRm acc;
            for (int k = 0; k < 8; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc = acc + a.at(i, k) * b.at(k, j);
            }
            r.at(i, j) = acc;
        }
    return r;
}

bool operator==(const BiRationalLaurentMatrix& a, const BiRationalLaurentMatrix& b) {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!(a.at(i, j) == b.at(i, j))) return false;
    return true;
}

bool BiRationalLaurentMatrix::is_identity() const { return *this == identity(); }

bool BiRationalLaurentMatrix::negative_power_free() const {
    for (const auto& entry : e_)
        if (!entry.is_zero() && entry.min_power() < 0) return false;
    return true;
}

int BiRationalLaurentMatrix::max_map_degree() const {
    int d = 0;
    for (const auto& entry : e_) d = std::max(d, entry.max_map_degree());
    return d;
}

BiRationalLaurentMatrix build_Fminus(const IsotropicQuadruple<SurdScalar>& q) {
    return fminus_from_maps(maps_of(q));
}

BiRationalLaurentMatrix build_chi8() {
    BiRationalLaurentMatrix r = BiRationalLaurentMatrix::identity();
    r.at(1, 1) = LaurentRm::term(-2, rm_one());
    r.at(6, 6) = LaurentRm::term(2, rm_one());
    return r;
}

BiRationalLaurentMatrix build_chi8_inverse() {
    BiRationalLaurentMatrix r = BiRationalLaurentMatrix::identity();
    r.at(1, 1) = LaurentRm::term(2, rm_one());
    r.at(6, 6) = LaurentRm::term(-2, rm_one());
    return r;
}

BiRationalLaurentMatrix jcheck8() {
    BiRationalLaurentMatrix r;
    for (int i = 0; i < 8; ++i) {
        int j = i;
        if (i == 3) j = 4;
        if (i == 4) j = 3;
        r.at(i, j) = LaurentRm::one();
    }
    return r;
}

BiRationalLaurentMatrix unitriangular_inverse(const BiRationalLaurentMatrix& m) {
    BiRationalLaurentMatrix n = m;
    for (int i = 0; i < 8; ++i) {
        if (!(n.at(i, i) == LaurentRm::one()))
            throw Error("unitriangular_inverse: unit diagonal required");
        n.at(i, i) = LaurentRm();
    }
    // (I + N)^{-1} = I - N + N^2 - ... terminates since N is nilpotent.
    BiRationalLaurentMatrix inv = BiRationalLaurentMatrix::identity();
    BiRationalLaurentMatrix power = n;
    int sign = -1;
    for (int step = 0; step < 8; ++step) {
        bool zero = true;
        for (int i = 0; i < 8 && zero; ++i)
            for (int j = 0; j < 8 && zero; ++j)
                if (!power.at(i, j).is_zero()) zero = false;
        if (zero) break;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                inv.at(i, j) = sign > 0 ? inv.at(i, j) + power.at(i, j)
                                        : inv.at(i, j) - power.at(i, j);
        power = power * n;
        sign = -sign;
    }
    return inv;
}

namespace {

/// The appendix's displayed closed form of the triple product.
BiRationalLaurentMatrix displayed_product(const MapSet& barred, const MapSet& hatted) {
    BiRationalLaurentMatrix r;
    r.at(0, 0) = LaurentRm::one();
    r.at(7, 7) = LaurentRm::one();

    // Row 2: (0, lambda^2, lambda f^, ..., g3^, 0).
    r.at(1, 1) = LaurentRm::term(2, rm_one());
    r.at(1, 2) = LaurentRm::term(1, hatted.f1);
    r.at(1, 3) = LaurentRm::term(1, hatted.f2);
    r.at(1, 4) = LaurentRm::term(1, hatted.f3);
    r.at(1, 5) = LaurentRm::term(1, hatted.f4);
    r.at(1, 6) = LaurentRm::term(0, hatted.g3);

    // Rows 3..6 carry bar(f_1), bar(f_3), bar(f_2), bar(f_4) in that order.
    const std::array<Rm, 4> row_bars = {barred.f1, barred.f3, barred.f2, barred.f4};
    const std::array<Rm, 4> col_hats = {hatted.f1, hatted.f2, hatted.f3, hatted.f4};
    // Column 7 pairs row i with hat(f_{tau(i)}), tau = (4, 3, 2, 1).
    const std::array<Rm, 4> col7_hats = {hatted.f4, hatted.f3, hatted.f2, hatted.f1};
    for (int i = 0; i < 4; ++i) {
        r.at(2 + i, 1) = LaurentRm::term(1, row_bars[i]);
        for (int j = 0; j < 4; ++j) {
            Rm entry = row_bars[i] * col_hats[j];
            if (i == 0 && j == 0) entry = entry + rm_one();
            if (i == 1 && j == 1) entry = entry + rm_one();
            if (i == 2 && j == 2) entry = entry + rm_one();
            if (i == 3 && j == 3) entry = entry + rm_one();
            r.at(2 + i, 2 + j) = LaurentRm::term(0, entry);
        }
        r.at(2 + i, 6) = LaurentRm::term(-1, row_bars[i] * hatted.g3 - col7_hats[i]);
    }

    // Row 7: (0, bar g3, lambda^{-1}(bar g3 f^_j - bar f_{tau'(j)}), ..., h0, 0).
    r.at(6, 1) = LaurentRm::term(0, barred.g3);
    const std::array<Rm, 4> row7_bars = {barred.f4, barred.f2, barred.f3, barred.f1};
    for (int j = 0; j < 4; ++j)
        r.at(6, 2 + j) = LaurentRm::term(-1, barred.g3 * col_hats[j] - row7_bars[j]);
    Rm h0_inner = rm_one() + barred.g3 * hatted.g3 + barred.f4 * hatted.f4 +
                  barred.f2 * hatted.f3 + barred.f3 * hatted.f2 + barred.f1 * hatted.f1;
    r.at(6, 6) = LaurentRm::term(-2, h0_inner);
    return r;
}

}  // namespace

BiRationalLaurentMatrix rp2_product_matrix(const IsotropicQuadruple<SurdScalar>& q,
                                           int degree_cap) {
    const MapSet base = maps_of(q);
    const MapSet barred = bar_maps(base);
    const MapSet hatted = hat_maps(base);

    // P(conj(C(lambda^{-1}))^{-1}) = J conj(F_-(lambda^{-1}))^t J, which is
    // the barred frame image transposed and conjugated by the inferred J.
    BiRationalLaurentMatrix a =
        jcheck8() * fminus_from_maps(barred).transpose() * jcheck8();
    BiRationalLaurentMatrix b = build_chi8_inverse();
    BiRationalLaurentMatrix c = fminus_from_maps(hatted);  // mu^* F_-
    enforce_degree_cap(a, degree_cap, "rp2_product_matrix");
    enforce_degree_cap(c, degree_cap, "rp2_product_matrix");

    BiRationalLaurentMatrix product = a * b * c;
    enforce_degree_cap(product, degree_cap, "rp2_product_matrix");

    if (!(product == displayed_product(barred, hatted)))
        throw MismatchError("rp2_product_matrix: computed product deviates from the closed form");
    return product;
}

bool verify_rp2_equivalence(const IsotropicQuadruple<SurdScalar>& q, int degree_cap) {
    if (q.is_zero())
        throw DegenerateG3Error(
            "verify_rp2_equivalence: identically-zero quadruple (descent residuals vanish "
            "trivially while the plus-loop h0 obstruction cannot)");
    const bool appendix_pass = rp2_product_matrix(q, degree_cap).negative_power_free();
    const bool descent_pass = check_rp2_descent(q).passes;
    if (appendix_pass != descent_pass)
        throw InconsistentTheoremError(
            "verify_rp2_equivalence: plus-loop condition and descent residuals disagree");
    return true;
}

}  // namespace willsym
