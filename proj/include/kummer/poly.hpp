#ifndef KUMMER_POLY_HPP
#define KUMMER_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace kummer {

/// Dense univariate polynomial, coefficients lowest degree first. The zero polynomial has
/// no coefficients and degree -1.
template <FieldElement K>
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const K& a) { return UniPoly(std::vector<K>{a}); }
    static UniPoly monomial(const K& a, int degree) {
        std::vector<K> c(static_cast<std::size_t>(degree) + 1);
        c.back() = a;
        return UniPoly(std::move(c));
    }
    /// X - a, given the field's one.
    static UniPoly linear_root(const K& one, const K& a) { return UniPoly({-a, one}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    /// Coefficient of X^i, zero past the degree.
    K operator[](int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : K{}; }
    K leading() const { return c_.empty() ? K{} : c_.back(); }

    template <class R>
    R eval(const R& x) const {
        R acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + R(*it);
        return acc;
    }
    K operator()(const K& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> d(c_.size() - 1);
        const K one = c_.back() / c_.back();
        K k = one;
        for (std::size_t i = 1; i < c_.size(); ++i, k += one) d[i - 1] = c_[i] * k;
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const K& s) {
        for (auto& a : c_) a *= s;
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const K& s) { return a *= s; }
    friend UniPoly operator*(const K& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Euclidean division; the divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
        std::vector<K> rem = c_;
        if (degree() < d.degree()) return {UniPoly{}, *this};
        std::vector<K> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        const K inv_lead = d.leading().inverse();
        for (int i = degree(); i >= d.degree(); --i) {
            K f = rem[static_cast<std::size_t>(i)] * inv_lead;
            q[static_cast<std::size_t>(i - d.degree())] = f;
            if (f.is_zero()) continue;
            for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(i - d.degree() + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return a.divmod(b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return a.divmod(b).second; }

    /// Quotient when the division is exact; InternalInconsistency otherwise.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) fail(Errc::InternalInconsistency, "polynomial division is not exact");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    /// p(X + t).
    UniPoly shifted(const K& t) const {
        UniPoly r;
        if (is_zero()) return r;
        const K one = leading() / leading();
        UniPoly lin({t, one});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const K& a = c_[static_cast<std::size_t>(i)];
            if (a.is_zero()) continue;
            std::string t = a.to_string();
            if (!s.empty()) s += (t[0] == '-') ? " - " : " + ";
            else if (t[0] == '-') s += "-";
            if (t[0] == '-') t = t.substr(1);
            if (i == 0) s += t;
            else {
                if (t != "1") s += t + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <FieldElement K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Inverse of a modulo m; DivisionByZero when gcd(a, m) != 1.
template <FieldElement K>
UniPoly<K> inverse_mod(const UniPoly<K>& a, const UniPoly<K>& m) {
    UniPoly<K> r0 = m, r1 = a % m;
    UniPoly<K> s0, s1;
    if (r1.is_zero()) fail(Errc::DivisionByZero, "polynomial is not invertible modulo the sextic");
    s1 = UniPoly<K>::constant(r1.leading() / r1.leading());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        auto s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) fail(Errc::DivisionByZero, "polynomial is not invertible modulo the sextic");
    return (s0 * r0.leading().inverse()) % m;
}

template <FieldElement K>
UniPoly<K> poly_from_roots(const K& lead, const std::vector<K>& roots) {
    const K one = lead / lead;
    UniPoly<K> f = UniPoly<K>::constant(lead);
    for (const auto& r : roots) f *= UniPoly<K>::linear_root(one, r);
    return f;
}

}  // namespace kummer

#endif
