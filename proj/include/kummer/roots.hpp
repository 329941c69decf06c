#ifndef KUMMER_ROOTS_HPP
#define KUMMER_ROOTS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace kummer {

namespace detail {

inline void check_sextic_squarefree(const auto& F) {
    if (F.degree() != 6) fail(Errc::InvalidCurve, "expected a sextic, got degree " + std::to_string(F.degree()));
    if (gcd(F, F.derivative()).degree() > 0) fail(Errc::RepeatedRoot, "F has a repeated root (discriminant is zero)");
}

/// Positive divisors of n by trial division, up to a fixed work bound. Empty optional-like
/// result (false) when n has a large composite cofactor we refuse to factor.
inline bool small_divisors(mpz_class n, std::vector<mpz_class>& out) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (unsigned long d = 2; d < 1000000 && mpz_class(d) * d <= n; ++d) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) n /= d, ++e;
        if (e) fac.emplace_back(mpz_class(d), e);
    }
    if (n > 1) {
        if (mpz_class(1000000) * 1000000 > n || mpz_probab_prime_p(n.get_mpz_t(), 30))
            fac.emplace_back(n, 1);
        else
            return false;
    }
    out = {mpz_class(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t m = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
        }
    }
    return true;
}

}  // namespace detail

/// The six roots of a split squarefree sextic over GF(p), p <= 10^4, in increasing residue order.
inline std::vector<Fp> find_roots_split(const UniPoly<Fp>& F) {
    detail::check_sextic_squarefree(F);
    const std::uint64_t p = F.leading().modulus();
    if (p > 10000) fail(Errc::RootsUnavailable, "root scan is limited to p <= 10^4; give the roots in the curve file");
    std::vector<Fp> roots;
    for (std::uint64_t a = 0; a < p && roots.size() < 6; ++a) {
        Fp x(a, p);
        if (F(x).is_zero()) roots.push_back(x);
    }
    if (roots.size() < 6) fail(Errc::NotSplit, "F has only " + std::to_string(roots.size()) + " roots in GF(" + std::to_string(p) + ")");
    return roots;
}

/// Rational roots via the rational root theorem, sorted increasingly. Needs the constant and
/// leading coefficients (after clearing denominators) to be factorable by trial division.
inline std::vector<Rational> find_roots_split(const UniPoly<Rational>& F) {
    detail::check_sextic_squarefree(F);
    mpz_class l = 1;
    for (const auto& c : F.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den().get_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : F.coeffs()) a.push_back(mpz_class(c.value() * l));

    std::vector<Rational> roots;
    std::size_t lo = 0;
    while (a[lo] == 0) {  // X divides F at most once, F being squarefree
        roots.emplace_back(0L);
        ++lo;
    }
    std::vector<mpz_class> dn, dd;
    if (!detail::small_divisors(a[lo], dn) || !detail::small_divisors(a.back(), dd))
        fail(Errc::RootsUnavailable, "coefficients too hard to factor; give the roots in the curve file");
    for (const auto& n : dn)
        for (const auto& d : dd)
            for (int s : {1, -1}) {
                if (mpz_class g = gcd(n, d); g != 1) continue;
                Rational r(mpq_class(s * n, d));
                if (F(r).is_zero()) roots.push_back(r);
            }
    if (roots.size() < 6) fail(Errc::NotSplit, "F has only " + std::to_string(roots.size()) + " rational roots");
    std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) { return x.value() < y.value(); });
    return roots;
}

}  // namespace kummer

#endif
