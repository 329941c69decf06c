#ifndef KUMMER_MODF_HPP
#define KUMMER_MODF_HPP

#include <memory>

#include "error.hpp"
#include "poly.hpp"

namespace kummer {

/// Residue class modulo the sextic F, always kept as the unique representative of
/// degree <= 5.
template <FieldElement K>
class ModFElement {
   public:
    ModFElement(UniPoly<K> a, std::shared_ptr<const UniPoly<K>> modulus) : m_(std::move(modulus)) {
        if (!m_ || m_->degree() != 6) fail(Errc::InvalidCurve, "modulus must be a sextic");
        r_ = a % *m_;
    }

    const UniPoly<K>& residue() const { return r_; }
    const UniPoly<K>& modulus() const { return *m_; }

    friend ModFElement operator*(const ModFElement& a, const ModFElement& b) {
        a.check(b);
        return ModFElement(a.r_ * b.r_, a.m_, 0);
    }
    friend ModFElement operator+(const ModFElement& a, const ModFElement& b) {
        a.check(b);
        return ModFElement(a.r_ + b.r_, a.m_, 0);
    }
    friend ModFElement operator-(const ModFElement& a, const ModFElement& b) {
        a.check(b);
        return ModFElement(a.r_ - b.r_, a.m_, 0);
    }
    friend bool operator==(const ModFElement& a, const ModFElement& b) {
        a.check(b);
        return a.r_ == b.r_;
    }

   private:
    ModFElement(UniPoly<K> a, std::shared_ptr<const UniPoly<K>> modulus, int) : m_(std::move(modulus)) {
        r_ = a % *m_;
    }
    void check(const ModFElement& o) const {
        if (m_ != o.m_ && !(*m_ == *o.m_)) fail(Errc::ModulusMismatch, "residues modulo different sextics");
    }

    UniPoly<K> r_;
    std::shared_ptr<const UniPoly<K>> m_;
};

template <FieldElement K>
ModFElement<K> poly_mul_mod(const ModFElement<K>& a, const ModFElement<K>& b) {
    return a * b;
}

/// a*b mod F on plain polynomials, for internal use.
template <FieldElement K>
UniPoly<K> mulmod(const UniPoly<K>& a, const UniPoly<K>& b, const UniPoly<K>& F) {
    return (a * b) % F;
}

}  // namespace kummer

#endif
