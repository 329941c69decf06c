#ifndef KUMMER_TESTS_COMMON_HPP
#define KUMMER_TESTS_COMMON_HPP

// Fixtures and small random generators shared by the unit tests.

#include <gtest/gtest.h>

#include "kummer.hpp"
#include "kummer/modf.hpp"

namespace kt {

using namespace kummer;

inline Genus2Curve<Rational> qq(std::initializer_list<Rational> roots, std::string label = {}) {
    std::array<Rational, 6> r;
    std::copy(roots.begin(), roots.end(), r.begin());
    return Genus2Curve<Rational>::from_roots(RationalField{}, r, std::move(label));
}

inline Genus2Curve<Fp> gf(std::uint64_t p, std::initializer_list<long> roots) {
    PrimeField k(p);
    std::array<Fp, 6> r;
    std::size_t i = 0;
    for (long a : roots) r[i++] = k(a);
    return Genus2Curve<Fp>::from_roots(k, r);
}

inline const Genus2Curve<Rational>& fixture_qq() {
    static const auto C = qq({1, 2, 3, 4, 5, 6});
    return C;
}
inline const Genus2Curve<Fp>& fixture_gf101() {
    static const auto C = gf(101, {1, 2, 3, 4, 5, 6});
    return C;
}
inline const Genus2Curve<Rational>& fixture_pm() {
    static const auto C = qq({1, -1, 2, -2, 3, -3});
    return C;
}

template <FieldElement K>
K rnd(const Genus2Curve<K>& C, Rng& rng) {
    return random_scalar(C, rng);
}

inline Fp rnd(const PrimeField& k, Rng& rng) { return k.random(rng); }
inline Rational rnd(const RationalField& k, Rng& rng) { return k.random(rng, 9); }

template <class Field>
auto rnd_poly(const Field& k, Rng& rng, int degree) {
    using K = decltype(k(1));
    std::vector<K> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rnd(k, rng));
    if (c.back().is_zero()) c.back() = k(1);
    return UniPoly<K>(c);
}

template <class Field>
auto rnd_vec(const Field& k, Rng& rng, std::size_t n) {
    using K = decltype(k(1));
    Vec<K> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rnd(k, rng));
    return v;
}

template <class Field>
auto rnd_matrix(const Field& k, Rng& rng, std::size_t n) {
    using K = decltype(k(1));
    Matrix<K> M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = rnd(k, rng);
    return M;
}

template <FieldElement K>
Vec<K> zeros(const Genus2Curve<K>& C, std::size_t n) {
    return Vec<K>(n, K{} * C.one());
}

template <class Fn>
Errc code_of(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::InternalInconsistency;
}

}  // namespace kt

#endif
