#ifndef KUMMER_DUALITY_HPP
#define KUMMER_DUALITY_HPP

// W_i : K -> K*, and kappa* = epsilon^(i) o kappa o W_i^{-1}.

#include "linecomplex.hpp"

namespace kummer {

template <FieldElement K>
Matrix<K> w_matrix(int i, const Genus2Curve<K>& C) {
    require_monic(C);
    const K t = C.theta(i);
    if (t.is_zero()) fail(Errc::ZeroRoot, "theta_" + std::to_string(i) + " = 0; translate the curve first");
    const auto& f = C.f();
    const K two = C.scalar(2), z = K{} * C.one();
    const K a12 = -f[1] - two * f[0] / t;
    const K a13 = t * (f[3] + two * f[4] * t + two * f[5] * t * t + two * t * t * t);
    const K a14 = t * t, a23 = t * t * (f[5] + two * t), a24 = -t, a34 = C.one();
    return Matrix<K>::from_rows({{z, a12, a13, a14}, {-a12, z, a23, a24}, {-a13, -a23, z, a34}, {-a14, -a24, -a34, z}});
}

template <FieldElement K>
Vec<K> apply_w(int i, const Vec<K>& xi, const Genus2Curve<K>& C) {
    return w_matrix(i, C) * xi;
}

/// kappa* through W_i. SingularTrope at the 16 singular points of K*.
template <FieldElement K>
ProjPoint<K> kappa_star(const ProjPoint<K>& eta, int i, const Genus2Curve<K>& C) {
    if (eta.size() != 4) fail(Errc::DimensionMismatch, "kappa* takes a plane of P^3");
    for (const auto& T : all_tropes(C))
        if (proj_eq(T, eta)) fail(Errc::SingularTrope, eta.to_string() + " is a trope");
    const ProjPoint<K> xi(w_matrix(i, C).inverse() * eta.coords());
    return ProjPoint<K>(epsilon(i, kappa_explicit(xi, C).coords(), C));
}

/// True when kappa* through W_i can be evaluated at eta: eta is not a trope and the explicit
/// forms do not all vanish at W_i^{-1}(eta).
template <FieldElement K>
bool kappa_star_defined(const ProjPoint<K>& eta, int i, const Genus2Curve<K>& C) {
    for (const auto& T : all_tropes(C))
        if (proj_eq(T, eta)) return false;
    const auto xi = w_matrix(i, C).inverse() * eta.coords();
    const auto v = kappa_forms<K>({xi[0], xi[1], xi[2], xi[3]}, C);
    return std::any_of(v.begin(), v.end(), [](const K& a) { return !a.is_zero(); });
}

template <FieldElement K>
struct PolarPlaneResult {
    bool through_xi;            // xi lies on the plane W_i(xi)
    std::vector<Vec<K>> points;  // second point of each line
    std::vector<Vec<K>> lines;   // two independent lines through xi inside W_i(xi)
    std::vector<K> zeta;        // zeta'_i of each line
    bool ok() const {
        if (!through_xi || lines.size() != 2) return false;
        for (const auto& z : zeta)
            if (!z.is_zero()) return false;
        return true;
    }
};

/// Lines through xi inside the plane W_i(xi), with their zeta'_j coordinate.
template <FieldElement K>
PolarPlaneResult<K> polar_plane_lines(const Vec<K>& xi, int i, int j, const Genus2Curve<K>& C) {
    PolarPlaneResult<K> r;
    const auto w = apply_w(i, xi, C);
    r.through_xi = dot(xi, w).is_zero();
    if (is_zero_vec(w)) fail(Errc::InternalInconsistency, "W_i(xi) vanished");
    const auto plane = Matrix<K>::from_rows({w}).kernel();
    const auto Z = zeta_matrix(C);
    for (const auto& b : plane) {
        if (r.lines.size() == 2) break;
        std::vector<Vec<K>> rows{xi, b};
        for (const auto& c : r.points) rows.push_back(c);
        if (Matrix<K>::from_rows(rows).rank() < rows.size()) continue;
        r.points.push_back(b);
        auto X = plucker(xi, b);
        r.zeta.push_back((Z * X)[C.idx(j)]);
        r.lines.push_back(std::move(X));
    }
    return r;
}

template <FieldElement K>
PolarPlaneResult<K> polar_plane_check_full(const Vec<K>& xi, int i, const Genus2Curve<K>& C) {
    return polar_plane_lines(xi, i, i, C);
}

template <FieldElement K>
bool polar_plane_check(const Vec<K>& xi, int i, const Genus2Curve<K>& C) {
    return polar_plane_check_full(xi, i, C).ok();
}

}  // namespace kummer

#endif
