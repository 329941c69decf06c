#ifndef KUMMER_PROJECTIVE_HPP
#define KUMMER_PROJECTIVE_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace kummer {

/// Equality up to a nonzero scalar. Same as asking all 2x2 minors of [a; b] to vanish,
/// but only 2n products are needed once a pivot is fixed.
template <FieldElement K>
bool proj_eq(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "projective points of different dimension");
    std::size_t piv = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv == a.size() || is_zero_vec(b)) fail(Errc::ZeroVector, "zero vector is not a projective point");
    if (b[piv].is_zero()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (!(a[piv] * b[j] == a[j] * b[piv])) return false;
    return true;
}

/// Scale so the first nonzero coordinate is 1. Used for hashing and printing only.
template <FieldElement K>
Vec<K> canonical(Vec<K> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const K inv = v[i].inverse();
        for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
        return v;
    }
    fail(Errc::ZeroVector, "zero vector is not a projective point");
}

template <FieldElement K>
std::string vec_to_string(const Vec<K>& v, const char* sep = " : ") {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].to_string();
    return s + ")";
}

/// Key for hash-based dedup of projective points.
template <FieldElement K>
std::string proj_key(const Vec<K>& v) {
    return vec_to_string(canonical(v), ",");
}

template <FieldElement K>
class ProjPoint {
   public:
    explicit ProjPoint(Vec<K> coords) : c_(std::move(coords)) {
        if (c_.empty() || is_zero_vec(c_)) fail(Errc::ZeroVector, "zero vector is not a projective point");
    }

    std::size_t size() const { return c_.size(); }
    const K& operator[](std::size_t i) const { return c_[i]; }
    const Vec<K>& coords() const { return c_; }
    Vec<K> canonical() const { return kummer::canonical(c_); }
    std::string key() const { return proj_key(c_); }
    std::string to_string() const { return vec_to_string(kummer::canonical(c_)); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return proj_eq(a.c_, b.c_); }

   private:
    Vec<K> c_;
};

template <FieldElement K>
bool proj_eq(const ProjPoint<K>& a, const ProjPoint<K>& b) {
    return proj_eq(a.coords(), b.coords());
}

}  // namespace kummer

#endif
