#ifndef KUMMER_CURVE_HPP
#define KUMMER_CURVE_HPP

// Genus-2 curve Y^2 = F(X), divisor pairs, Kummer coordinates and the Kummer quartic.
// Root indices are 1-based throughout the public API.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "poly.hpp"
#include "projective.hpp"
#include "roots.hpp"

namespace kummer {

// ---------------------------------------------------------------------------
// Kummer quartic

template <FieldElement K>
struct KummerQuartic {
    using Form = MPoly<K, 4>;
    Form K2, K1, K0;  // forms in xi1, xi2, xi3 of degrees 2, 3, 4
    Form poly;        // K2 xi4^2 + K1 xi4 + K0

    K operator()(const Vec<K>& xi) const {
        if (xi.size() != 4) fail(Errc::DimensionMismatch, "Kummer points live in P^3");
        return poly.eval(std::array<K, 4>{xi[0], xi[1], xi[2], xi[3]});
    }
    K operator()(const ProjPoint<K>& xi) const { return (*this)(xi.coords()); }

    Vec<K> gradient(const Vec<K>& xi) const {
        const std::array<K, 4> a{xi[0], xi[1], xi[2], xi[3]};
        Vec<K> g(4);
        for (std::size_t i = 0; i < 4; ++i) g[i] = poly.partial(i).eval(a);
        return g;
    }
};

/// Eliminates yv between (2yv)^2 = 4F(x)F(u) and xi4 (x-u)^2 = F0(x,u) - 2yv, rewrites in
/// e1 = x+u, e2 = xu and homogenizes with xi1.
template <FieldElement K>
KummerQuartic<K> derive_kummer_quartic(const FieldOf<K>& k, const std::array<K, 7>& f) {
    using E = MPoly<K, 2>;  // polynomials in e1, e2
    const K one = k(1);
    const E e1 = E::var(0, one), e2 = E::var(1, one), c1 = E::constant(one);
    auto cst = [&](const K& a) { return E::constant(a); };
    auto pw = [&](const E& b, int n) {
        E r = c1;
        for (int i = 0; i < n; ++i) r = r * b;
        return r;
    };
    const K two = k(2);
    const E F0 = cst(two * f[0]) + cst(f[1]) * e1 + cst(two * f[2]) * e2 + cst(f[3]) * e1 * e2 +
                 cst(two * f[4]) * pw(e2, 2) + cst(f[5]) * e1 * pw(e2, 2) + cst(two * f[6]) * pw(e2, 3);

    // power sums x^k + u^k
    std::array<E, 7> ps;
    ps[0] = cst(two);
    ps[1] = e1;
    for (int k = 2; k <= 6; ++k) ps[k] = e1 * ps[k - 1] - e2 * ps[k - 2];
    E FF;  // F(x)F(u)
    for (int i = 0; i <= 6; ++i) {
        FF = FF + cst(f[i] * f[i]) * pw(e2, i);
        for (int j = i + 1; j <= 6; ++j) FF = FF + cst(f[i] * f[j]) * pw(e2, i) * ps[j - i];
    }
    E N = F0 * F0 - cst(k(4)) * FF;

    // exact division by e1^2 - 4 e2
    E Q;
    for (;;) {
        const std::array<int, 2>* top = nullptr;
        for (const auto& [e, c] : N.terms())
            if (e[0] >= 2 && (!top || e[0] > (*top)[0])) top = &e;
        if (!top) break;
        const auto e = *top;
        const K c = N.coeff(e);
        E m;
        m.add_term({e[0] - 2, e[1]}, c);
        Q = Q + m;
        N = N - m * (e1 * e1 - cst(k(4)) * e2);
    }
    if (!N.is_zero()) fail(Errc::InternalInconsistency, "F0^2 - 4F(x)F(u) is not divisible by (x-u)^2");

    auto homogenize = [&](const E& p, int deg) {
        typename KummerQuartic<K>::Form r;
        for (const auto& [e, c] : p.terms()) {
            const int d1 = deg - e[0] - e[1];
            if (d1 < 0) fail(Errc::InternalInconsistency, "elimination produced a term of too high degree");
            r.add_term({d1, e[0], e[1], 0}, c);
        }
        return r;
    };
    KummerQuartic<K> q;
    q.K2 = homogenize(e1 * e1 - cst(k(4)) * e2, 2);
    q.K1 = homogenize(cst(-two) * F0, 3);
    q.K0 = homogenize(Q, 4);
    const auto x4 = KummerQuartic<K>::Form::var(3, one);
    q.poly = q.K2 * x4 * x4 + q.K1 * x4 + q.K0;
    return q;
}

/// Everything that depends on a chosen root ordering.
template <FieldElement K>
struct RootData {
    std::array<K, 6> theta;
    std::array<UniPoly<K>, 6> P;      // P_j = prod_{i != j} (X - theta_i), monic
    std::array<K, 6> omega;           // P_j(theta_j)
    std::array<UniPoly<K>, 6> g;      // 1 - 2 P_j / P_j(theta_j)
    Matrix<K> B;                      // columns: coefficients of P_j, so p = B pi
    Matrix<K> Binv;
};

template <FieldElement K>
class Genus2Curve {
   public:
    using Field = FieldOf<K>;

    static Genus2Curve from_coeffs(const Field& k, const std::array<K, 7>& f, std::string label = {}) {
        Genus2Curve c;
        c.k_ = k;
        c.f_ = f;
        c.label_ = std::move(label);
        c.F_ = UniPoly<K>(std::vector<K>(f.begin(), f.end()));
        if (f[6].is_zero()) fail(Errc::InvalidCurve, "f6 must be nonzero");
        detail::check_sextic_squarefree(c.F_);
        c.q_ = std::make_shared<const KummerQuartic<K>>(derive_kummer_quartic<K>(k, f));
        return c;
    }

    static Genus2Curve from_roots(const Field& k, const std::array<K, 6>& roots, const K& lead, std::string label = {}) {
        if (lead.is_zero()) fail(Errc::InvalidCurve, "leading coefficient must be nonzero");
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (roots[i] == roots[j]) fail(Errc::RepeatedRoot, "root " + roots[i].to_string() + " is listed twice");
        const auto F = poly_from_roots(lead, std::vector<K>(roots.begin(), roots.end()));
        std::array<K, 7> f;
        for (int i = 0; i <= 6; ++i) f[i] = F[i];
        auto c = from_coeffs(k, f, std::move(label));
        c.set_roots(roots);
        return c;
    }
    static Genus2Curve from_roots(const Field& k, const std::array<K, 6>& roots, std::string label = {}) {
        return from_roots(k, roots, k(1), std::move(label));
    }

    /// Same curve with the given root ordering attached; the roots must reproduce F.
    Genus2Curve with_roots(const std::array<K, 6>& roots) const {
        Genus2Curve c = *this;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (roots[i] == roots[j]) fail(Errc::RepeatedRoot, "root " + roots[i].to_string() + " is listed twice");
        if (!(poly_from_roots(f_[6], std::vector<K>(roots.begin(), roots.end())) == F_))
            fail(Errc::InvalidCurve, "roots do not reproduce the coefficients");
        c.set_roots(roots);
        return c;
    }

    /// Attach the roots found by exhaustive search (GF(p)) or the rational root theorem (QQ).
    Genus2Curve with_found_roots() const {
        auto r = find_roots_split(F_);
        std::array<K, 6> a;
        std::copy(r.begin(), r.end(), a.begin());
        return with_roots(a);
    }

    const Field& field() const { return k_; }
    K one() const { return k_(1); }
    K scalar(long n) const { return k_(n); }
    const std::string& label() const { return label_; }
    const std::array<K, 7>& f() const { return f_; }
    const K& f(int i) const { return f_[static_cast<std::size_t>(i)]; }
    const UniPoly<K>& F() const { return F_; }
    const KummerQuartic<K>& quartic() const { return *q_; }

    bool has_roots() const { return static_cast<bool>(rd_); }
    const RootData<K>& roots() const {
        if (!rd_) fail(Errc::RootsUnavailable, "this operation needs the six roots of F");
        return *rd_;
    }
    const K& theta(int i) const { return roots().theta[idx(i)]; }
    const K& omega(int i) const { return roots().omega[idx(i)]; }
    const UniPoly<K>& P(int i) const { return roots().P[idx(i)]; }
    const UniPoly<K>& g(int i) const { return roots().g[idx(i)]; }

    static std::size_t idx(int i) {
        if (i < 1 || i > 6) fail(Errc::InvalidArgument, "root index must be in 1..6, got " + std::to_string(i));
        return static_cast<std::size_t>(i - 1);
    }

    friend bool operator==(const Genus2Curve& a, const Genus2Curve& b) { return a.k_ == b.k_ && a.f_ == b.f_; }

   private:
    void set_roots(const std::array<K, 6>& roots) {
        auto rd = std::make_shared<RootData<K>>();
        rd->theta = roots;
        const K one = k_(1);
        std::vector<Vec<K>> cols;
        for (int j = 0; j < 6; ++j) {
            std::vector<K> others;
            for (int i = 0; i < 6; ++i)
                if (i != j) others.push_back(roots[i]);
            rd->P[j] = poly_from_roots(one, others);
            rd->omega[j] = rd->P[j](roots[j]);
            rd->g[j] = UniPoly<K>::constant(one) - rd->P[j] * (k_(2) / rd->omega[j]);
            Vec<K> c(6);
            for (int m = 0; m < 6; ++m) c[m] = rd->P[j][m];
            cols.push_back(std::move(c));
        }
        rd->B = Matrix<K>::from_columns(cols);
        rd->Binv = rd->B.inverse();
        rd_ = std::move(rd);
    }

    Field k_{};
    std::array<K, 7> f_{};
    UniPoly<K> F_;
    std::string label_;
    std::shared_ptr<const RootData<K>> rd_;
    std::shared_ptr<const KummerQuartic<K>> q_;
};

template <FieldElement K>
KummerQuartic<K> derive_kummer_quartic(const Genus2Curve<K>& C) {
    return derive_kummer_quartic<K>(C.field(), C.f());
}

// ---------------------------------------------------------------------------
// Divisors

/// A pair of affine points {(x,y),(u,v)} kept in even form: x, u, A = y^2, B = v^2, w = yv.
/// Everything on the Kummer side only needs this data, so over QQ a divisor can be used even
/// when y and v themselves are irrational. Explicit y, v are kept when known.
template <FieldElement K>
struct DivisorPair {
    K x, u, A, B, w;
    std::optional<K> y, v;

    static DivisorPair from_points(const Genus2Curve<K>& C, const K& x, const K& y, const K& u, const K& v) {
        if (!(y * y == C.F()(x))) fail(Errc::InvalidArgument, "(x, y) is not on the curve");
        if (!(v * v == C.F()(u))) fail(Errc::InvalidArgument, "(u, v) is not on the curve");
        return {x, u, y * y, v * v, y * v, y, v};
    }
    /// From abscissae and the product w = yv, which must satisfy w^2 = F(x)F(u).
    static DivisorPair from_even(const Genus2Curve<K>& C, const K& x, const K& u, const K& w) {
        DivisorPair d{x, u, C.F()(x), C.F()(u), w, std::nullopt, std::nullopt};
        if (!(w * w == d.A * d.B)) fail(Errc::InvalidArgument, "yv squared differs from F(x)F(u)");
        return d;
    }

    /// {(x,-y),(u,-v)}: same even data.
    DivisorPair conjugate() const {
        DivisorPair d = *this;
        if (y) d.y = -*y;
        if (v) d.v = -*v;
        return d;
    }
    /// {(u,v),(x,y)}.
    DivisorPair swapped() const { return {u, x, B, A, w, v, y}; }
};

// ---------------------------------------------------------------------------
// Kummer coordinates

template <FieldElement K>
K f0_sym(const K& x, const K& u, const Genus2Curve<K>& C) {
    const auto& f = C.f();
    const K s = x + u, p = x * u, two = C.scalar(2);
    return two * f[0] + f[1] * s + two * f[2] * p + f[3] * p * s + two * f[4] * p * p + f[5] * p * p * s +
           two * f[6] * p * p * p;
}

template <FieldElement K>
ProjPoint<K> kummer_coords(const DivisorPair<K>& D, const Genus2Curve<K>& C) {
    if (D.x == D.u) fail(Errc::EqualAbscissae, "x = u: use the node or limit path");
    const K d = D.x - D.u;
    const K xi4 = (f0_sym(D.x, D.u, C) - C.scalar(2) * D.w) / (d * d);
    return ProjPoint<K>({C.one(), D.x + D.u, D.x * D.u, xi4});
}

template <FieldElement K>
ProjPoint<K> node_0(const Genus2Curve<K>& C) {
    return ProjPoint<K>({K{} * C.one(), K{} * C.one(), K{} * C.one(), C.one()});
}

/// beta_0(i, j) by the closed formula in the roots (scaled by f6 for a non-monic F).
template <FieldElement K>
K beta0(int i, int j, const Genus2Curve<K>& C) {
    if (i == j) fail(Errc::InvalidArgument, "node indices must differ");
    const K ti = C.theta(i), tj = C.theta(j);
    std::vector<K> rest;
    for (int m = 1; m <= 6; ++m)
        if (m != i && m != j) rest.push_back(C.theta(m));
    K prod = C.one(), e2{};
    for (std::size_t s = 0; s < rest.size(); ++s) {
        prod *= rest[s];
        for (std::size_t t = s + 1; t < rest.size(); ++t) e2 += rest[s] * rest[t];
    }
    return C.f(6) * (-prod - ti * tj * (ti * tj + e2));
}

template <FieldElement K>
ProjPoint<K> node_ij(int i, int j, const Genus2Curve<K>& C) {
    const K ti = C.theta(i), tj = C.theta(j);
    return ProjPoint<K>({C.one(), ti + tj, ti * tj, beta0(i, j, C)});
}

/// The 16 nodes: N_0 first, then N_ij for i < j in lexicographic order.
template <FieldElement K>
std::vector<ProjPoint<K>> all_nodes(const Genus2Curve<K>& C) {
    std::vector<ProjPoint<K>> n{node_0(C)};
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) n.push_back(node_ij(i, j, C));
    return n;
}

template <FieldElement K>
ProjPoint<K> trope_i(int i, const Genus2Curve<K>& C) {
    const K t = C.theta(i);
    return ProjPoint<K>({t * t, -t, C.one(), K{} * C.one()});
}

/// T_ijk; the complementary triple gives the same plane.
template <FieldElement K>
ProjPoint<K> trope_ijk(int i, int j, int k, const Genus2Curve<K>& C) {
    if (i == j || j == k || i == k) fail(Errc::InvalidArgument, "trope indices must be distinct");
    const K a = C.theta(i), b = C.theta(j), c = C.theta(k);
    std::vector<K> r;
    for (int m = 1; m <= 6; ++m)
        if (m != i && m != j && m != k) r.push_back(C.theta(m));
    const K s1 = a + b + c, p1 = a * b * c, q1 = a * b + a * c + b * c;
    const K s2 = r[0] + r[1] + r[2], p2 = r[0] * r[1] * r[2], q2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
    const K f6 = C.f(6);
    return ProjPoint<K>({f6 * (s1 * p2 + p1 * s2), f6 * (-p1 - p2), f6 * (q1 + q2), C.one()});
}

/// The 16 tropes: T_1..T_6, then T_ijk for the ten triples containing index 1.
template <FieldElement K>
std::vector<ProjPoint<K>> all_tropes(const Genus2Curve<K>& C) {
    std::vector<ProjPoint<K>> t;
    for (int i = 1; i <= 6; ++i) t.push_back(trope_i(i, C));
    for (int j = 2; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) t.push_back(trope_ijk(1, j, k, C));
    return t;
}

/// Gradient of K at a smooth point, as dual coordinates.
template <FieldElement K>
ProjPoint<K> tangent_plane(const ProjPoint<K>& xi, const KummerQuartic<K>& q) {
    auto g = q.gradient(xi.coords());
    if (is_zero_vec(g)) fail(Errc::SingularPoint, "gradient vanishes: " + xi.to_string() + " is a node");
    return ProjPoint<K>(std::move(g));
}

// ---------------------------------------------------------------------------
// Changes of model

/// X -> X - t: roots move by +t.
template <FieldElement K>
Genus2Curve<K> translate_curve(const Genus2Curve<K>& C, const K& t) {
    const auto G = C.F().shifted(-t);
    std::array<K, 7> f;
    for (int i = 0; i <= 6; ++i) f[i] = G[i];
    auto D = Genus2Curve<K>::from_coeffs(C.field(), f, C.label());
    if (C.has_roots()) {
        std::array<K, 6> r = C.roots().theta;
        for (auto& a : r) a += t;
        D = D.with_roots(r);
    }
    return D;
}

enum class RootNormalization { SumsEqual, Translated };

template <FieldElement K>
struct NormalizedRoots {
    Genus2Curve<K> curve;
    K t;
    RootNormalization kind;
};

/// Makes theta3 theta4 = theta5 theta6 by a translation, unless theta3+theta4 = theta5+theta6
/// already (then no translation can and need be made).
template <FieldElement K>
NormalizedRoots<K> normalize_roots(const Genus2Curve<K>& C) {
    const K s34 = C.theta(3) + C.theta(4), s56 = C.theta(5) + C.theta(6);
    const K p34 = C.theta(3) * C.theta(4), p56 = C.theta(5) * C.theta(6);
    if (s34 == s56) {
        if (p34 == p56) fail(Errc::DegenerateConfiguration, "theta3,theta4 and theta5,theta6 have equal sums and products");
        return {C, K{} * C.one(), RootNormalization::SumsEqual};
    }
    const K t = (p56 - p34) / (s34 - s56);
    return {translate_curve(C, t), t, RootNormalization::Translated};
}

/// Divides F by c^2 when f6 = c^2 (the substitution Y -> cY); NotMonic otherwise.
template <FieldElement K>
Genus2Curve<K> make_monic(const Genus2Curve<K>& C) {
    if (C.f(6) == C.one()) return C;
    auto c = C.f(6).sqrt();
    if (!c) fail(Errc::NotMonic, "f6 = " + C.f(6).to_string() + " is not a square in the base field");
    std::array<K, 7> f = C.f();
    const K inv = C.f(6).inverse();
    for (auto& a : f) a *= inv;
    auto D = Genus2Curve<K>::from_coeffs(C.field(), f, C.label());
    if (C.has_roots()) D = D.with_roots(C.roots().theta);
    return D;
}

template <FieldElement K>
void require_monic(const Genus2Curve<K>& C) {
    if (!(C.f(6) == C.one()))
        fail(Errc::NotMonic, C.f(6).sqrt() ? "f6 != 1; rescale with make_monic (f6 is a square)"
                                           : "f6 != 1 and f6 is not a square in the base field");
}

}  // namespace kummer

#endif
