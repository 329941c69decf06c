#ifndef KUMMER_SURFACE_HPP
#define KUMMER_SURFACE_HPP

// The desingularized Kummer S in P^5: points are P(X) = p_0 + ... + p_5 X^5 with P(X)^2
// congruent to a quadratic modulo F(X).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "curve.hpp"
#include "kappa_forms.hpp"
#include "series.hpp"

namespace kummer {

template <FieldElement K>
UniPoly<K> to_poly(const Vec<K>& p) {
    return UniPoly<K>(p);
}

/// Coefficient vector of length 6 of a residue of degree <= 5.
template <FieldElement K>
Vec<K> to_vec6(const UniPoly<K>& P) {
    if (P.degree() > 5) fail(Errc::DimensionMismatch, "residue of degree > 5");
    Vec<K> v(6);
    for (int i = 0; i < 6; ++i) v[static_cast<std::size_t>(i)] = P[i];
    return v;
}

/// Coefficients of X^3, X^4, X^5 in P^2 mod F.
template <FieldElement K>
std::array<K, 3> s_residue(const Vec<K>& p, const Genus2Curve<K>& C) {
    if (p.size() != 6) fail(Errc::DimensionMismatch, "points of S live in P^5");
    const auto P = to_poly(p);
    const auto R = (P * P) % C.F();
    return {R[3], R[4], R[5]};
}

template <FieldElement K>
bool s_membership(const Vec<K>& p, const Genus2Curve<K>& C) {
    for (const auto& c : s_residue(p, C))
        if (!c.is_zero()) return false;
    return true;
}
template <FieldElement K>
bool s_membership(const ProjPoint<K>& p, const Genus2Curve<K>& C) {
    return s_membership(p.coords(), C);
}

// ---------------------------------------------------------------------------
// pi coordinates

template <FieldElement K>
Vec<K> to_pi(const Vec<K>& p, const Genus2Curve<K>& C) {
    const auto P = to_poly(p);
    Vec<K> pi(6);
    for (int j = 1; j <= 6; ++j) pi[C.idx(j)] = P(C.theta(j)) / C.omega(j);
    return pi;
}

template <FieldElement K>
Vec<K> from_pi(const Vec<K>& pi, const Genus2Curve<K>& C) {
    if (pi.size() != 6) fail(Errc::DimensionMismatch, "pi coordinates have six entries");
    return C.roots().B * pi;
}

/// S_i = sum_j theta_j^i omega_j pi_j^2 for i = 0, 1, 2.
template <FieldElement K>
std::array<K, 3> s_quadrics_pi(const Vec<K>& pi, const Genus2Curve<K>& C) {
    std::array<K, 3> s{};
    for (int j = 1; j <= 6; ++j) {
        const K t = C.theta(j), w = C.omega(j) * pi[C.idx(j)] * pi[C.idx(j)];
        s[0] += w;
        s[1] += t * w;
        s[2] += t * t * w;
    }
    return s;
}

/// Gram matrices of S_0, S_1, S_2 in pi coordinates.
template <FieldElement K>
std::array<Matrix<K>, 3> s_quadric_grams_pi(const Genus2Curve<K>& C) {
    std::array<Matrix<K>, 3> g{Matrix<K>(6, 6), Matrix<K>(6, 6), Matrix<K>(6, 6)};
    for (int j = 1; j <= 6; ++j) {
        const auto a = C.idx(j);
        g[0](a, a) = C.omega(j);
        g[1](a, a) = C.theta(j) * C.omega(j);
        g[2](a, a) = C.theta(j) * C.theta(j) * C.omega(j);
    }
    return g;
}

// ---------------------------------------------------------------------------
// kappa

/// The six quartic forms at xi, in any ring R that accepts field scalars.
template <class R, FieldElement K>
std::array<R, 6> kappa_forms(const std::array<R, 4>& xi, const Genus2Curve<K>& C) {
    std::array<std::array<R, 5>, 4> xpow;
    for (int i = 0; i < 4; ++i) {
        xpow[i][0] = R(C.one());
        for (int e = 1; e <= 4; ++e) xpow[i][e] = xpow[i][e - 1] * xi[i];
    }
    std::array<std::array<K, 7>, 7> fpow;
    for (int i = 0; i < 7; ++i) {
        fpow[i][0] = C.one();
        for (int e = 1; e < 7; ++e) fpow[i][e] = fpow[i][e - 1] * C.f(i);
    }
    std::array<R, 6> out;
    for (std::size_t j = 0; j < 6; ++j) {
        R acc = R(K{} * C.one());
        for (const auto& t : kKappaForms[j]) {
            K c = C.scalar(t.num) / C.scalar(t.den);
            for (int i = 0; i < 7; ++i) c *= fpow[i][t.f[i]];
            if (c.is_zero()) continue;
            R m(c);
            for (int i = 0; i < 4; ++i) m = m * xpow[i][t.xi[i]];
            acc = acc + m;
        }
        out[j] = acc;
    }
    return out;
}

/// kappa on K by the explicit quartic forms. ZeroVector on the failure locus.
template <FieldElement K>
ProjPoint<K> kappa_explicit(const ProjPoint<K>& xi, const Genus2Curve<K>& C) {
    if (xi.size() != 4) fail(Errc::DimensionMismatch, "kappa takes a point of P^3");
    if (!C.quartic()(xi).is_zero()) fail(Errc::NotOnKummer, xi.to_string() + " is not on the Kummer surface");
    const auto v = kappa_forms<K>({xi[0], xi[1], xi[2], xi[3]}, C);
    Vec<K> p(v.begin(), v.end());
    if (is_zero_vec(p))
        fail(Errc::ZeroVector, "all six forms vanish at " + xi.to_string() + " (base locus of the explicit forms)");
    return ProjPoint<K>(std::move(p));
}

/// Result of the constructive route, with the polynomials needed to re-check it.
template <FieldElement K>
struct ConstructiveKappa {
    UniPoly<K> P;     // P^triangle (y -+ v), reduced mod F
    int branch;       // +1: multiplied by (y - v); -1: by (y + v) because y = v
    UniPoly<K> MY;    // M (y -+ v), with M the cubic of the construction
    UniPoly<K> H;     // (M^2 - F) / G^2
    bool congruence;  // G P == 2 (x-u)^3 yv M (y -+ v)  mod F
    bool square;      // P^2 == 4 (x-u)^6 (y -+ v)^2 y^2 v^2 H  mod F
};

template <FieldElement K>
ConstructiveKappa<K> kappa_constructive_full(const DivisorPair<K>& D, const Genus2Curve<K>& C) {
    if (D.x == D.u) fail(Errc::DegenerateDivisor, "x = u");
    if (D.w.is_zero()) fail(Errc::DegenerateDivisor, "yv = 0");
    const K one = C.one(), two = C.scalar(2), four = C.scalar(4);
    const auto& F = C.F();
    const auto dF = F.derivative();
    const K x = D.x, u = D.u, A = D.A, B = D.B, w = D.w, d = x - u;
    const auto Xx = UniPoly<K>::linear_root(one, x), Xu = UniPoly<K>::linear_root(one, u);
    const auto Fx = (F - UniPoly<K>::constant(A)).exact_div(Xx);  // F(x, X)
    const auto Fu = (F - UniPoly<K>::constant(B)).exact_div(Xu);

    const auto Q1 = (UniPoly<K>::constant(dF(x) * d - four * A) - Fx * (two * d)) * Xu;
    const auto Q2 = (UniPoly<K>::constant(dF(u) * (-d) - four * B) + Fu * (two * d)) * Xx;

    ConstructiveKappa<K> r;
    const K ymv2 = A + B - two * w;  // (y - v)^2
    r.branch = ymv2.is_zero() ? -1 : 1;
    const K s = r.branch > 0 ? -one : one;  // y + s v
    const K yv_sq = A + B + two * s * w;    // (y + s v)^2
    // P^triangle (y + s v), expressed through A, B, w only
    const auto P = Q1 * (s * B + w) - Q2 * (A + s * w) +
                   F * (two * C.f(6) * d * (r.branch > 0 ? A - B : A + B + two * w));
    r.P = P % F;

    // the cubic M = T1 y + T2 v
    const K mx = dF(x) / (two * A) - two / d;
    const K mu = dF(u) / (two * B) - two / (-d);
    const auto T1 = (UniPoly<K>::constant(one) + Xx * mx) * (Xu * Xu) * (one / (d * d));
    const auto T2 = (UniPoly<K>::constant(one) + Xu * mu) * (Xx * Xx) * (one / (d * d));
    r.MY = T1 * (A + s * w) + T2 * (w + s * B);
    const auto M2 = T1 * T1 * A + T2 * T2 * B + T1 * T2 * (two * w);
    const auto G = Xx * Xu;
    r.H = (M2 - F).exact_div(G * G);

    const K d3 = d * d * d;
    r.congruence = ((G * r.P) % F) == ((r.MY * (two * d3 * w)) % F);
    r.square = ((r.P * r.P) % F) == ((r.H * (four * d3 * d3 * yv_sq * A * B)) % F);
    return r;
}

template <FieldElement K>
ProjPoint<K> kappa_constructive(const DivisorPair<K>& D, const Genus2Curve<K>& C) {
    auto r = kappa_constructive_full(D, C);
    if (!r.congruence || !r.square) fail(Errc::InternalInconsistency, "constructive kappa failed its own certificate");
    return ProjPoint<K>(to_vec6(r.P));
}

// ---------------------------------------------------------------------------
// Involutions

template <FieldElement K>
Vec<K> epsilon(int i, const Vec<K>& p, const Genus2Curve<K>& C) {
    return to_vec6((C.g(i) * to_poly(p)) % C.F());
}

/// Product of epsilon^(i) over the bits of mask (bit i-1 <-> index i).
template <FieldElement K>
Vec<K> epsilon_mask(unsigned mask, Vec<K> p, const Genus2Curve<K>& C) {
    for (int i = 1; i <= 6; ++i)
        if (mask >> (i - 1) & 1u) p = epsilon(i, p, C);
    return p;
}

/// Matrix of P -> g P mod F on coefficient vectors.
template <FieldElement K>
Matrix<K> mulmod_matrix(const UniPoly<K>& g, const Genus2Curve<K>& C) {
    std::vector<Vec<K>> cols;
    for (int j = 0; j < 6; ++j) cols.push_back(to_vec6((g * UniPoly<K>::monomial(C.one(), j)) % C.F()));
    return Matrix<K>::from_columns(cols);
}

template <FieldElement K>
Matrix<K> epsilon_matrix(int i, const Genus2Curve<K>& C) {
    return mulmod_matrix(C.g(i), C);
}

/// Diagonal sign matrix of an element of Inv(S) in pi coordinates.
template <FieldElement K>
Matrix<K> epsilon_mask_pi(unsigned mask, const Genus2Curve<K>& C) {
    Vec<K> d(6, C.one());
    for (int i = 0; i < 6; ++i)
        if (mask >> i & 1u) d[static_cast<std::size_t>(i)] = -C.one();
    return Matrix<K>::diagonal(d);
}

/// Conversions of a linear map between coefficient and pi coordinates.
template <FieldElement K>
Matrix<K> pi_to_coeff(const Matrix<K>& Mpi, const Genus2Curve<K>& C) {
    return C.roots().B * Mpi * C.roots().Binv;
}
template <FieldElement K>
Matrix<K> coeff_to_pi(const Matrix<K>& M, const Genus2Curve<K>& C) {
    return C.roots().Binv * M * C.roots().B;
}

/// Projective identity of matrices: equal up to one nonzero scalar.
template <FieldElement K>
bool matrix_proj_eq(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::DimensionMismatch, "matrix shapes differ");
    Vec<K> va, vb;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) va.push_back(a(i, j)), vb.push_back(b(i, j));
    return proj_eq(va, vb);
}

template <FieldElement K>
std::string matrix_key(const Matrix<K>& a) {
    Vec<K> v;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
    return proj_key(v);
}

template <FieldElement K>
struct InvElement {
    unsigned mask;     // a representative subset; mask and its complement act identically
    Matrix<K> coeff;   // action on coefficient vectors
};

/// All products of the six generators, deduplicated as projective transformations.
/// The order is computed, not assumed.
template <FieldElement K>
std::vector<InvElement<K>> inv_group(const Genus2Curve<K>& C) {
    std::vector<InvElement<K>> out;
    std::map<std::string, bool> seen;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Matrix<K> M = Matrix<K>::identity(6, C.one());
        for (int i = 1; i <= 6; ++i)
            if (mask >> (i - 1) & 1u) M = epsilon_matrix(i, C) * M;
        if (seen.emplace(matrix_key(M), true).second) out.push_back({mask, M});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lines

/// Delta_T: the image of Delta_0 = span(1, X) under the product of epsilon^(i), i in T.
template <FieldElement K>
struct LineOnS {
    unsigned mask;
    Vec<K> a, b;

    std::string label() const {
        std::string s = "Delta_";
        if (!mask) return s + "0";
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1u) s += std::to_string(i + 1);
        return s;
    }
};

/// Canonical label set for a line: |T| <= 3, and for |T| = 3 the subset containing 1.
inline unsigned canonical_line_mask(unsigned mask) {
    mask &= 63u;
    const int n = __builtin_popcount(mask);
    if (n > 3 || (n == 3 && !(mask & 1u))) mask ^= 63u;
    return mask;
}

template <FieldElement K>
LineOnS<K> line_delta(unsigned mask, const Genus2Curve<K>& C) {
    mask = canonical_line_mask(mask);
    Vec<K> one(6), x(6);
    one[0] = C.one();
    x[1] = C.one();
    return {mask, epsilon_mask(mask, one, C), epsilon_mask(mask, x, C)};
}

template <FieldElement K>
LineOnS<K> line_delta(const std::vector<int>& T, const Genus2Curve<K>& C) {
    if (T.size() > 3) fail(Errc::InvalidArgument, "line labels have at most three indices");
    unsigned m = 0;
    for (int i : T) m |= 1u << C.idx(i);
    return line_delta(m, C);
}

template <FieldElement K>
std::vector<LineOnS<K>> all_lines(const Genus2Curve<K>& C) {
    std::vector<LineOnS<K>> out;
    for (unsigned m = 0; m < 64; ++m)
        if (canonical_line_mask(m) == m) out.push_back(line_delta(m, C));
    return out;
}

template <FieldElement K>
bool same_line(const LineOnS<K>& l, const LineOnS<K>& m) {
    return Matrix<K>::from_rows({l.a, l.b, m.a, m.b}).rank() == 2;
}

/// Intersection point of two distinct lines, if any.
template <FieldElement K>
std::optional<Vec<K>> line_intersection(const LineOnS<K>& l, const LineOnS<K>& m) {
    const auto ker = Matrix<K>::from_columns({l.a, l.b, -m.a, -m.b}).kernel();
    if (ker.empty()) return std::nullopt;
    if (ker.size() > 1) fail(Errc::InvalidArgument, "lines coincide");
    Vec<K> p(6);
    for (std::size_t i = 0; i < 6; ++i) p[i] = ker[0][0] * l.a[i] + ker[0][1] * l.b[i];
    return p;
}

template <FieldElement K>
struct LineMeeting {
    std::size_t first, second;  // indices into the line list
    Vec<K> point;
};

template <FieldElement K>
struct LineIncidence {
    std::vector<LineOnS<K>> lines;
    std::vector<LineMeeting<K>> meetings;
    std::vector<int> degree;  // number of other lines met, per line
};

template <FieldElement K>
LineIncidence<K> line_incidence(const Genus2Curve<K>& C) {
    LineIncidence<K> t;
    t.lines = all_lines(C);
    t.degree.assign(t.lines.size(), 0);
    for (std::size_t i = 0; i < t.lines.size(); ++i)
        for (std::size_t j = i + 1; j < t.lines.size(); ++j)
            if (auto p = line_intersection(t.lines[i], t.lines[j])) {
                t.meetings.push_back({i, j, *p});
                ++t.degree[i];
                ++t.degree[j];
            }
    return t;
}

template <FieldElement K>
bool on_line(const Vec<K>& p, const LineOnS<K>& l) {
    return Matrix<K>::from_rows({l.a, l.b, p}).rank() == 2;
}

/// The point of Delta_i with parameter x: 2(x - theta_i) P_i(X) + P_i(theta_i)(X - x).
template <FieldElement K>
Vec<K> delta_i_param(int i, const K& x, const Genus2Curve<K>& C) {
    const auto& Pi = C.P(i);
    Vec<K> p(6);
    const K two = C.scalar(2), t = C.theta(i);
    for (int j = 0; j < 6; ++j) p[static_cast<std::size_t>(j)] = two * Pi[j] * (x - t);
    p[0] -= C.omega(i) * x;
    p[1] += C.omega(i);
    return p;
}

/// p_i = (-theta_i : 1 : 0 : 0 : 0 : 0) = Delta_0 cap Delta_i.
template <FieldElement K>
Vec<K> point_p(int i, const Genus2Curve<K>& C) {
    Vec<K> p(6, K{} * C.one());
    p[0] = -C.theta(i);
    p[1] = C.one();
    return p;
}

// ---------------------------------------------------------------------------
// Polar duality between the diagonal quadrics

/// For a point on S_a (a = 0 or 2), the polar hyperplane with respect to S_1 is tangent to
/// S_{2-a}: its coefficient vector lies on the adjugate quadric.
template <FieldElement K>
bool polar_duality_check(const Vec<K>& p, const Genus2Curve<K>& C, int from = 0) {
    if (from != 0 && from != 2) fail(Errc::InvalidArgument, "polar check runs from S_0 or from S_2");
    const auto pi = to_pi(p, C);
    if (!s_quadrics_pi(pi, C)[static_cast<std::size_t>(from)].is_zero())
        fail(Errc::NotOnQuadric, "point is not on S_" + std::to_string(from));
    const int to = 2 - from;
    std::array<K, 6> diag;
    for (int j = 1; j <= 6; ++j) {
        K t = C.one();
        for (int e = 0; e < to; ++e) t *= C.theta(j);
        diag[C.idx(j)] = t * C.omega(j);
    }
    K q{};
    for (std::size_t j = 0; j < 6; ++j) {
        const K h = C.scalar(2) * C.theta(static_cast<int>(j) + 1) * C.omega(static_cast<int>(j) + 1) * pi[j];
        K adj = C.one();
        for (std::size_t k = 0; k < 6; ++k)
            if (k != j) adj *= diag[k];
        q += h * h * adj;
    }
    return q.is_zero();
}

// ---------------------------------------------------------------------------
// Blow-up of N_0

inline constexpr std::size_t kBlowupOrder = 12;

template <FieldElement K>
using BlowupSeries = Series<K, kBlowupOrder>;

/// The family of Kummer points for {(x, y), (x + h, v(h))} with v(h) -> -y, scaled by h^2.
/// Needs F(x) != 0.
template <FieldElement K>
std::array<BlowupSeries<K>, 4> node0_family(const K& x, const Genus2Curve<K>& C) {
    using S = BlowupSeries<K>;
    const K Fx = C.F()(x);
    if (Fx.is_zero()) fail(Errc::InvalidArgument, "the family needs F(x) != 0");
    const S h = S::variable(C.one());
    const S u = S(x) + h;
    S Fu = S(K{} * C.one());
    for (int i = 6; i >= 0; --i) Fu = Fu * u + S(C.f(i));
    const S yv = -(S(Fx) * Fu).sqrt(Fx);
    const S s = S(x) + u, p = S(x) * u;
    const K two = C.scalar(2);
    const S F0 = S(two * C.f(0)) + S(C.f(1)) * s + S(two * C.f(2)) * p + S(C.f(3)) * p * s +
                 S(two * C.f(4)) * p * p + S(C.f(5)) * p * p * s + S(two * C.f(6)) * p * p * p;
    const S h2 = h * h;
    return {h2, h2 * s, h2 * p, F0 - S(two) * yv};
}

/// Lowest-order nonvanishing coefficient vector of a vector of series.
template <FieldElement K>
Vec<K> leading_direction(const std::array<BlowupSeries<K>, 6>& v) {
    std::size_t n = kBlowupOrder;
    for (const auto& s : v) n = std::min(n, s.valuation());
    if (n == kBlowupOrder) fail(Errc::ZeroVector, "forms vanish to working precision");
    Vec<K> d(6);
    for (std::size_t i = 0; i < 6; ++i) d[i] = v[i][n];
    return d;
}

/// Direction in which kappa sends the family approaching N_0; expected (-x : 1 : 0 : 0 : 0 : 0).
template <FieldElement K>
Vec<K> blowup_direction_node0(const K& x, const Genus2Curve<K>& C) {
    return leading_direction<K>(kappa_forms<BlowupSeries<K>>(node0_family(x, C), C));
}

}  // namespace kummer

#endif
