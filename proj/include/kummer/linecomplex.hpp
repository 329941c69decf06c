#ifndef KUMMER_LINECOMPLEX_HPP
#define KUMMER_LINECOMPLEX_HPP

// Lines of P^3 in Grassmann coordinates X = (p43 : p24 : p41 : p21 : p31 : p32), the
// quadratic complex H of a monic curve, the singular-line map kappa_1 and the linear map
// Theta to S.

#include <array>

#include "surface.hpp"

namespace kummer {

template <FieldElement K>
Vec<K> plucker(const Vec<K>& u, const Vec<K>& v) {
    if (u.size() != 4 || v.size() != 4) fail(Errc::DimensionMismatch, "lines join points of P^3");
    auto p = [&](int i, int j) { return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]; };
    Vec<K> X{p(4, 3), p(2, 4), p(4, 1), p(2, 1), p(3, 1), p(3, 2)};
    if (is_zero_vec(X)) fail(Errc::CoincidentPoints, "the two points coincide");
    return X;
}

template <FieldElement K>
Vec<K> line_through(const ProjPoint<K>& u, const ProjPoint<K>& v) {
    return plucker(u.coords(), v.coords());
}

/// G(X, Y), the polar form of G(X) = 2X1X4 + 2X2X5 + 2X3X6 (so G(X, X) = G(X)).
template <FieldElement K>
K grassmann_form(const Vec<K>& X, const Vec<K>& Y) {
    return X[0] * Y[3] + X[3] * Y[0] + X[1] * Y[4] + X[4] * Y[1] + X[2] * Y[5] + X[5] * Y[2];
}
template <FieldElement K>
K grassmann(const Vec<K>& X) {
    return grassmann_form(X, X);
}

/// Lines through xi: three linear forms in X (rows).
template <FieldElement K>
Matrix<K> plane_through_point(const Vec<K>& xi) {
    const K z = K{} * xi[0] + K{} * xi[3];
    return Matrix<K>::from_rows({{z, z, z, xi[2], -xi[1], xi[0]},
                                 {z, xi[0], xi[1], -xi[3], z, z},
                                 {xi[0], z, -xi[2], z, xi[3], z}});
}

/// All four incidence relations; the three displayed above lose rank when xi_1 = 0.
template <FieldElement K>
Matrix<K> point_incidence_system(const Vec<K>& xi) {
    const K z = K{} * xi[0] + K{} * xi[3];
    auto M = plane_through_point(xi);
    return Matrix<K>::from_rows({M.row(0), M.row(1), M.row(2), {xi[1], xi[2], z, z, z, xi[3]}});
}

/// Lines inside the plane with dual coordinates a.
template <FieldElement K>
Matrix<K> lines_in_plane(const Vec<K>& a) {
    const K z = K{} * a[0] + K{} * a[3];
    return Matrix<K>::from_rows({{z, z, a[3], a[1], a[2], z},
                                 {z, a[3], z, a[0], z, -a[2]},
                                 {-a[3], z, z, z, a[0], a[1]}});
}

template <FieldElement K>
Matrix<K> plane_incidence_system(const Vec<K>& a) {
    const K z = K{} * a[0] + K{} * a[3];
    auto M = lines_in_plane(a);
    return Matrix<K>::from_rows({M.row(0), M.row(1), M.row(2), {a[2], -a[1], a[0], z, z, z}});
}

/// Symmetric matrix of the quadratic complex H, H(X) = X^T M X.
template <FieldElement K>
Matrix<K> h_gram(const Genus2Curve<K>& C) {
    require_monic(C);
    Matrix<K> M(6, 6);
    auto set = [&](int i, int j, const K& a) {
        M(i, j) = a;
        M(j, i) = a;
    };
    const auto& f = C.f();
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) M(i, j) = K{} * C.one();
    set(0, 4, C.scalar(-2));
    set(1, 5, C.scalar(-2));
    set(2, 2, C.scalar(-1));
    set(2, 5, f[5]);
    set(3, 3, C.scalar(4) * f[0]);
    set(3, 4, C.scalar(2) * f[1]);
    set(4, 4, C.scalar(4) * f[2]);
    set(4, 5, C.scalar(2) * f[3]);
    set(5, 5, C.scalar(4) * f[4] - f[5] * f[5]);
    return M;
}

template <FieldElement K>
K quad_form(const Matrix<K>& M, const Vec<K>& X) {
    return dot(X, M * X);
}

template <FieldElement K>
struct SingularLine {
    Vec<K> X;
    std::size_t rank;  // rank of the restricted 3x3 Gram matrix
};

/// Restricted Gram matrix of H on the plane of P^5 cut out by `system`, and the kernel basis.
template <FieldElement K>
std::pair<Matrix<K>, std::vector<Vec<K>>> restricted_gram(const Matrix<K>& system, const Genus2Curve<K>& C) {
    const auto basis = system.kernel();
    if (basis.size() != 3) fail(Errc::InternalInconsistency, "plane of lines is not a projective plane");
    const auto H = h_gram(C);
    Matrix<K> R(3, 3);
    for (std::size_t a = 0; a < 3; ++a) {
        const auto Hb = H * basis[a];
        for (std::size_t b = 0; b < 3; ++b) R(b, a) = dot(basis[b], Hb);
    }
    return {R, basis};
}

template <FieldElement K>
SingularLine<K> singular_line(const Matrix<K>& system, const Genus2Curve<K>& C, const std::string& what) {
    auto [R, basis] = restricted_gram(system, C);
    const std::size_t r = R.rank();
    if (r == 3) fail(Errc::NotOnKummer, what + ": conic is nondegenerate");
    if (r <= 1) fail(Errc::RankDeficient, what + ": conic has rank " + std::to_string(r) + " (a node)");
    const auto c = R.kernel();
    Vec<K> X(6, K{} * C.one());
    for (std::size_t k = 0; k < 3; ++k) X = X + c[0][k] * basis[k];
    return {X, r};
}

template <FieldElement K>
std::size_t kappa1_gram_rank(const Vec<K>& xi, const Genus2Curve<K>& C) {
    return restricted_gram(point_incidence_system(xi), C).first.rank();
}

/// kappa_1: vertex of the line pair cut by H on the plane of lines through xi.
template <FieldElement K>
Vec<K> kappa1(const Vec<K>& xi, const Genus2Curve<K>& C) {
    return singular_line(point_incidence_system(xi), C, "kappa1 at " + vec_to_string(xi)).X;
}

/// kappa_1^*: same construction on the plane of lines lying in the plane a.
template <FieldElement K>
Vec<K> kappa1_star(const Vec<K>& a, const Genus2Curve<K>& C) {
    return singular_line(plane_incidence_system(a), C, "kappa1* at " + vec_to_string(a)).X;
}

/// Theta: p = T X.
template <FieldElement K>
Matrix<K> theta_matrix(const Genus2Curve<K>& C) {
    require_monic(C);
    const auto& f = C.f();
    const K o = C.one(), z = K{} * o, two = C.scalar(2);
    return Matrix<K>::from_rows({{o, z, z, f[1], z, z},
                                 {z, o, z, two * f[2], f[3], z},
                                 {z, z, o, two * f[3], two * f[4], f[5]},
                                 {z, z, z, two * f[4], two * f[5], two},
                                 {z, z, z, two * f[5], two, z},
                                 {z, z, z, two, z, z}});
}

template <FieldElement K>
Vec<K> theta(const Vec<K>& X, const Genus2Curve<K>& C) {
    return theta_matrix(C) * X;
}

/// Rows: the functionals X -> zeta'_i = sum_j p_j(X) theta_i^j.
template <FieldElement K>
Matrix<K> zeta_matrix(const Genus2Curve<K>& C) {
    Matrix<K> V(6, 6);
    for (int i = 1; i <= 6; ++i) {
        K t = C.one();
        for (std::size_t j = 0; j < 6; ++j, t *= C.theta(i)) V(C.idx(i), j) = t;
    }
    return V * theta_matrix(C);
}

template <FieldElement K>
Vec<K> zeta_from_X(const Vec<K>& X, const Genus2Curve<K>& C) {
    return zeta_matrix(C) * X;
}

/// The vector v(t) with G(X, v(t)) = sum_j p_j(X) t^j for all X.
template <FieldElement K>
Vec<K> v_theta(const K& t, const Genus2Curve<K>& C) {
    const auto T = theta_matrix(C);
    Vec<K> c(6, K{} * C.one());  // c_m = coefficient of X_m
    K tp = C.one();
    for (std::size_t j = 0; j < 6; ++j, tp *= t)
        for (std::size_t m = 0; m < 6; ++m) c[m] += T(j, m) * tp;
    return {c[3], c[4], c[5], c[0], c[1], c[2]};
}

/// sum_j theta_j^i zeta'_j^2 / omega_j for i = 0, 1, 2.
template <FieldElement K>
std::array<K, 3> sigma_quadrics(const Vec<K>& zeta, const Genus2Curve<K>& C) {
    std::array<K, 3> s{};
    for (int j = 1; j <= 6; ++j) {
        const K t = C.theta(j), w = zeta[C.idx(j)] * zeta[C.idx(j)] / C.omega(j);
        s[0] += w;
        s[1] += t * w;
        s[2] += t * t * w;
    }
    return s;
}

template <FieldElement K>
Vec<K> polarity_Ik(int k, Vec<K> zeta) {
    if (zeta.size() != 6) fail(Errc::DimensionMismatch, "zeta coordinates have six entries");
    if (k < 1 || k > 6) fail(Errc::InvalidArgument, "polarity index must be in 1..6");
    zeta[static_cast<std::size_t>(k - 1)] = -zeta[static_cast<std::size_t>(k - 1)];
    return zeta;
}

/// I_k acting on Grassmann coordinates.
template <FieldElement K>
Matrix<K> polarity_matrix_X(int k, const Genus2Curve<K>& C) {
    const auto Z = zeta_matrix(C);
    Vec<K> d(6, C.one());
    d[C.idx(k)] = -C.one();
    return Z.inverse() * Matrix<K>::diagonal(d) * Z;
}

}  // namespace kummer

#endif
