#ifndef KUMMER_TWISTS_HPP
#define KUMMER_TWISTS_HPP

// Twists S^xi : the coefficients of X^5, X^4, X^3 of xi(X) P(X)^2 mod F(X) vanish.

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "surface.hpp"

namespace kummer {

template <FieldElement K>
struct TwistSurface {
    UniPoly<K> xi;
    std::array<Matrix<K>, 3> gram;  // C_5, C_4, C_3: form(p) = p^T G p

    std::array<K, 3> forms(const Vec<K>& p) const {
        return {quad(gram[0], p), quad(gram[1], p), quad(gram[2], p)};
    }
    bool contains(const Vec<K>& p) const {
        for (const auto& v : forms(p))
            if (!v.is_zero()) return false;
        return true;
    }

   private:
    static K quad(const Matrix<K>& G, const Vec<K>& p) { return dot(p, G * p); }
};

template <FieldElement K>
TwistSurface<K> twist_surface(const UniPoly<K>& xi, const Genus2Curve<K>& C) {
    TwistSurface<K> t;
    t.xi = xi % C.F();
    std::array<UniPoly<K>, 11> r;  // xi X^m mod F
    for (int m = 0; m <= 10; ++m) r[m] = (t.xi * UniPoly<K>::monomial(C.one(), m)) % C.F();
    for (int c = 0; c < 3; ++c) {
        Matrix<K> G(6, 6);
        for (int k = 0; k < 6; ++k)
            for (int l = 0; l < 6; ++l) G(k, l) = r[k + l][5 - c];
        t.gram[c] = G;
    }
    return t;
}

/// Membership straight from the definition, without Gram matrices.
template <FieldElement K>
bool twist_member_direct(const UniPoly<K>& xi, const Vec<K>& p, const Genus2Curve<K>& C) {
    const auto P = to_poly(p);
    return ((xi * P * P) % C.F()).degree() <= 2;
}

template <FieldElement K>
struct TwistDiagonal {
    std::array<Matrix<K>, 3> combos;   // S_0, S_1, S_2 combinations, Gram in p coordinates
    std::array<Matrix<K>, 3> in_pi;    // the same in pi coordinates
    std::array<Vec<K>, 3> expected;    // xi_j w_j, f6 theta_j xi_j w_j, f6^2 theta_j^2 xi_j w_j
    bool matches() const {
        for (int c = 0; c < 3; ++c)
            if (!(in_pi[c] == Matrix<K>::diagonal(expected[c]))) return false;
        return true;
    }
};

template <FieldElement K>
TwistDiagonal<K> twist_diagonal(const UniPoly<K>& xi, const Genus2Curve<K>& C) {
    for (int j = 1; j <= 6; ++j)
        if (xi(C.theta(j)).is_zero())
            fail(Errc::VanishingAtRoot, "xi vanishes at theta_" + std::to_string(j));
    const auto T = twist_surface(xi, C);
    const K f4 = C.f(4), f5 = C.f(5), f6 = C.f(6);
    TwistDiagonal<K> d;
    d.combos[0] = T.gram[0];
    d.combos[1] = f6 * T.gram[1] - f5 * T.gram[0];
    d.combos[2] = (f6 * f6) * T.gram[2] - (f5 * f6) * T.gram[1] + (f5 * f5 - f4 * f6) * T.gram[0];
    const auto& B = C.roots().B;
    for (int c = 0; c < 3; ++c) {
        d.in_pi[c] = B.transpose() * d.combos[c] * B;
        d.expected[c] = Vec<K>(6);
    }
    for (int j = 1; j <= 6; ++j) {
        const auto a = C.idx(j);
        const K base = xi(C.theta(j)) * C.omega(j);
        d.expected[0][a] = base;
        d.expected[1][a] = f6 * C.theta(j) * base;
        d.expected[2][a] = f6 * f6 * C.theta(j) * C.theta(j) * base;
    }
    return d;
}

/// alpha(P) = beta P mod F, from S^xi to S when beta^2 = xi mod F.
template <FieldElement K>
Vec<K> twist_iso(const UniPoly<K>& beta, const UniPoly<K>& xi, const Vec<K>& p, const Genus2Curve<K>& C) {
    if (!((beta * beta - xi) % C.F()).is_zero()) fail(Errc::WitnessMismatch, "beta^2 is not congruent to xi mod F");
    return to_vec6((beta * to_poly(p)) % C.F());
}

// ---------------------------------------------------------------------------
// Point search

inline constexpr std::uint64_t kMaxPrimeForSearch = 50;
inline constexpr std::uint64_t kMaxRationalSearch = 30000000;

/// All points of the twist over GF(p), p <= 50, by full enumeration of P^5.
inline std::vector<Vec<Fp>> search_points(const TwistSurface<Fp>& S, const Genus2Curve<Fp>& C) {
    const std::uint64_t p = C.field().p;
    if (p > kMaxPrimeForSearch)
        fail(Errc::SearchSpaceTooLarge, "full enumeration of P^5 is limited to p <= " + std::to_string(kMaxPrimeForSearch));
    // q[c][k][l] for k <= l, off-diagonal entries doubled
    std::uint64_t q[3][6][6] = {};
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 6; ++k)
            for (int l = k; l < 6; ++l) q[c][k][l] = (S.gram[c](k, l).value() * (k == l ? 1 : 2)) % p;
    auto form = [&](int c, const std::uint64_t* v) {
        std::uint64_t s = 0;
        for (int k = 0; k < 6; ++k) {
            if (!v[k]) continue;
            std::uint64_t row = 0;
            for (int l = k; l < 6; ++l) row += q[c][k][l] * v[l];
            s += (row % p) * v[k];
        }
        return s % p;
    };
    std::vector<Vec<Fp>> out;
    std::uint64_t v[6];
    for (int lead = 5; lead >= 0; --lead) {
        // coordinates before lead are 0, v[lead] = 1, the rest run over GF(p)
        const int free = 5 - lead;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= p;
        for (std::uint64_t n = 0; n < total; ++n) {
            std::uint64_t m = n;
            for (int i = 0; i < 6; ++i) v[i] = 0;
            v[lead] = 1;
            for (int i = 5; i > lead; --i) v[i] = m % p, m /= p;
            if (form(0, v) || form(1, v) || form(2, v)) continue;
            Vec<Fp> pt(6);
            for (int i = 0; i < 6; ++i) pt[i] = Fp(v[i], p);
            out.push_back(std::move(pt));
        }
    }
    return out;
}

/// Primitive integer points with |p_i| <= bound (first nonzero coordinate positive).
inline std::vector<Vec<Rational>> search_points(const TwistSurface<Rational>& S, const Genus2Curve<Rational>&, long bound) {
    if (bound < 1) fail(Errc::InvalidArgument, "search bound must be positive");
    double space = 1;
    for (int i = 0; i < 6; ++i) space *= static_cast<double>(2 * bound + 1);
    if (space > static_cast<double>(kMaxRationalSearch))
        fail(Errc::SearchSpaceTooLarge, "(2*bound+1)^6 exceeds " + std::to_string(kMaxRationalSearch));
    std::vector<Vec<Rational>> out;
    std::array<long, 6> v{};
    std::array<long, 6> lo{};
    lo.fill(-bound);
    v = lo;
    for (;;) {
        int first = 0;
        while (first < 6 && v[first] == 0) ++first;
        long g = 0;
        for (long a : v) g = std::gcd(g, std::labs(a));
        if (first < 6 && v[first] > 0 && g == 1) {
            Vec<Rational> p(6);
            for (int i = 0; i < 6; ++i) p[i] = Rational(v[i]);
            if (S.contains(p)) out.push_back(std::move(p));
        }
        int i = 5;
        while (i >= 0 && v[i] == bound) v[i] = -bound, --i;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

/// Images of the S^xi points under beta, compared with the points of S.
struct TwistBijection {
    std::size_t twist_points = 0, surface_points = 0, distinct_images = 0;
    bool images_on_s = true;
    bool bijective() const { return images_on_s && twist_points == surface_points && distinct_images == twist_points; }
};

inline TwistBijection twist_bijection_check(const UniPoly<Fp>& beta, const Genus2Curve<Fp>& C) {
    const auto xi = (beta * beta) % C.F();
    const auto Sxi = search_points(twist_surface(xi, C), C);
    const auto S = search_points(twist_surface(UniPoly<Fp>::constant(C.one()), C), C);
    std::unordered_set<std::string> on_s, images;
    for (const auto& p : S) on_s.insert(proj_key(p));
    TwistBijection r;
    r.twist_points = Sxi.size();
    r.surface_points = S.size();
    for (const auto& p : Sxi) {
        const auto k = proj_key(twist_iso(beta, xi, p, C));
        if (!on_s.count(k)) r.images_on_s = false;
        images.insert(k);
    }
    r.distinct_images = images.size();
    return r;
}

}  // namespace kummer

#endif
