#ifndef KUMMER_SERIES_HPP
#define KUMMER_SERIES_HPP

#include <array>
#include <cstddef>

#include "error.hpp"
#include "field.hpp"

namespace kummer {

/// Power series in h truncated after h^(N-1). A plain scalar converts to a constant series,
/// which lets the same templated evaluators run on scalars and on series.
template <FieldElement K, std::size_t N>
class Series {
   public:
    Series() = default;
    Series(const K& c) { a_[0] = c; }

    static Series variable(const K& one) {
        Series s;
        s.a_[1] = one;
        return s;
    }

    const K& operator[](std::size_t i) const { return a_[i]; }
    K& operator[](std::size_t i) { return a_[i]; }

    /// Index of the first nonzero coefficient, N if the series vanishes to working precision.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < N; ++i)
            if (!a_[i].is_zero()) return i;
        return N;
    }

    Series operator-() const {
        Series r;
        for (std::size_t i = 0; i < N; ++i) r.a_[i] = -a_[i];
        return r;
    }
    friend Series operator+(Series a, const Series& b) {
        for (std::size_t i = 0; i < N; ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Series operator-(Series a, const Series& b) {
        for (std::size_t i = 0; i < N; ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r;
        for (std::size_t i = 0; i < N; ++i) {
            if (a.a_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < N; ++j) r.a_[i + j] += a.a_[i] * b.a_[j];
        }
        return r;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Square root with prescribed constant term root0 (root0^2 must equal the constant term).
    Series sqrt(const K& root0) const {
        if (!(root0 * root0 == a_[0]) || root0.is_zero())
            fail(Errc::InvalidArgument, "series square root needs a nonzero square root of the constant term");
        Series b;
        b.a_[0] = root0;
        const K inv2b0 = (root0 + root0).inverse();
        for (std::size_t n = 1; n < N; ++n) {
            K s = a_[n];
            for (std::size_t k = 1; k < n; ++k) s -= b.a_[k] * b.a_[n - k];
            b.a_[n] = s * inv2b0;
        }
        return b;
    }

   private:
    std::array<K, N> a_{};
};

}  // namespace kummer

#endif
