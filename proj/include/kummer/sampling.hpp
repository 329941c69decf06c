#ifndef KUMMER_SAMPLING_HPP
#define KUMMER_SAMPLING_HPP

// Random divisors {(x,y),(u,v)} for property checks.
//
// Over GF(p) this is direct: pick x != u with F(x), F(u) nonzero squares. Over QQ random
// abscissae almost never give rational points, but the Kummer side only needs w = yv with
// w^2 = F(x)F(u). So we scan small-height pairs for which F(x)F(u) is a rational square,
// shuffle that pool with the seed and hand pairs out in order.

#include <algorithm>
#include <random>

#include "curve.hpp"
#include "surface.hpp"

namespace kummer {

using Rng = std::mt19937_64;

template <FieldElement K>
class DivisorSampler;

template <>
class DivisorSampler<Fp> {
   public:
    DivisorSampler(const Genus2Curve<Fp>& C, std::uint64_t seed) : C_(C), rng_(seed) {}

    DivisorPair<Fp> next() {
        const auto& k = C_.field();
        for (;;) {
            const Fp x = k.random(rng_), u = k.random(rng_);
            if (x == u) continue;
            const auto y = C_.F()(x).sqrt(), v = C_.F()(u).sqrt();
            if (!y || !v || y->is_zero() || v->is_zero()) continue;
            const Fp vs = (rng_() & 1u) ? -*v : *v;
            return DivisorPair<Fp>::from_points(C_, x, *y, u, vs);
        }
    }
    std::size_t distinct_available() const { return static_cast<std::size_t>(-1); }

   private:
    Genus2Curve<Fp> C_;
    Rng rng_;
};

template <>
class DivisorSampler<Rational> {
   public:
    // numerators up to num_bound in absolute value, denominators up to den_bound
    DivisorSampler(const Genus2Curve<Rational>& C, std::uint64_t seed, long num_bound = 80, long den_bound = 6)
        : C_(C), rng_(seed) {
        std::vector<Rational> xs;
        for (long d = 1; d <= den_bound; ++d)
            for (long n = -num_bound; n <= num_bound; ++n)
                if (std::gcd(std::labs(n), d) == 1) xs.push_back(Rational(n) / Rational(d));
        std::vector<Rational> vals;
        for (const auto& x : xs) vals.push_back(C_.F()(x));
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (vals[i].is_zero()) continue;
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                if (vals[j].is_zero()) continue;
                if (auto w = (vals[i] * vals[j]).sqrt()) {
                    pool_.push_back(DivisorPair<Rational>::from_even(C_, xs[i], xs[j], *w));
                    pool_.push_back(DivisorPair<Rational>::from_even(C_, xs[i], xs[j], -*w));
                }
            }
        }
        std::shuffle(pool_.begin(), pool_.end(), rng_);
    }

    DivisorPair<Rational> next() {
        if (pool_.empty()) fail(Errc::InvalidArgument, "no small-height divisors with F(x)F(u) a square on this curve");
        const auto& d = pool_[pos_ % pool_.size()];
        ++pos_;
        return d;
    }
    std::size_t distinct_available() const { return pool_.size(); }

   private:
    Genus2Curve<Rational> C_;
    Rng rng_;
    std::vector<DivisorPair<Rational>> pool_;
    std::size_t pos_ = 0;
};

/// Why a sample was set aside.
enum class SkipReason { Degenerate, OnTrope, FormsVanish };

template <FieldElement K>
struct GenericSample {
    DivisorPair<K> D;
    ProjPoint<K> xi;
};

/// A point of K away from the tropes (so kappa* through W_i is defined) and outside the
/// common zero locus of the explicit forms.
template <FieldElement K>
std::optional<SkipReason> classify(const DivisorPair<K>& D, const Genus2Curve<K>& C) {
    if (D.x == D.u || D.w.is_zero()) return SkipReason::Degenerate;
    const auto xi = kummer_coords(D, C);
    if (C.has_roots())  // without the roots there are no tropes to avoid
        for (const auto& T : all_tropes(C))
            if (dot(T.coords(), xi.coords()).is_zero()) return SkipReason::OnTrope;
    const auto forms = kappa_forms<K>({xi[0], xi[1], xi[2], xi[3]}, C);
    if (std::all_of(forms.begin(), forms.end(), [](const K& a) { return a.is_zero(); })) return SkipReason::FormsVanish;
    return std::nullopt;
}

template <FieldElement K>
struct SampleBatch {
    std::vector<GenericSample<K>> samples;
    std::size_t skipped_degenerate = 0, skipped_on_trope = 0, skipped_forms_vanish = 0;
    std::size_t skipped() const { return skipped_degenerate + skipped_on_trope + skipped_forms_vanish; }
};

/// n generic samples; gives up after 50 n draws.
template <FieldElement K>
SampleBatch<K> generic_samples(const Genus2Curve<K>& C, std::uint64_t seed, std::size_t n) {
    DivisorSampler<K> s(C, seed);
    SampleBatch<K> b;
    const std::size_t limit = std::min<std::size_t>(50 * n + 50, s.distinct_available());
    for (std::size_t draws = 0; b.samples.size() < n && draws < limit; ++draws) {
        auto D = s.next();
        if (auto why = classify(D, C)) {
            if (*why == SkipReason::Degenerate) ++b.skipped_degenerate;
            if (*why == SkipReason::OnTrope) ++b.skipped_on_trope;
            if (*why == SkipReason::FormsVanish) ++b.skipped_forms_vanish;
            continue;
        }
        auto xi = kummer_coords(D, C);
        b.samples.push_back({std::move(D), std::move(xi)});
    }
    return b;
}

}  // namespace kummer

#endif
