#ifndef KUMMER_MPOLY_HPP
#define KUMMER_MPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "error.hpp"
#include "field.hpp"

namespace kummer {

/// Sparse polynomial in V variables. Exponent vectors are ordered lexicographically, which
/// gives a deterministic coefficient table.
template <FieldElement K, std::size_t V>
class MPoly {
   public:
    using Exp = std::array<int, V>;

    MPoly() = default;
    static MPoly constant(const K& c) {
        MPoly p;
        p.add_term(Exp{}, c);
        return p;
    }
    static MPoly var(std::size_t i, const K& one) {
        MPoly p;
        Exp e{};
        e[i] = 1;
        p.add_term(e, one);
        return p;
    }

    void add_term(const Exp& e, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    const std::map<Exp, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    K coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? K{} : it->second;
    }

    /// Total degree if homogeneous, -1 for zero, InternalInconsistency otherwise.
    int homogeneous_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int k : e) s += k;
            if (d >= 0 && s != d) fail(Errc::InternalInconsistency, "form is not homogeneous");
            d = s;
        }
        return d;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) {
        for (const auto& [e, c] : b.t_) a.add_term(e, c);
        return a;
    }
    friend MPoly operator-(MPoly a, const MPoly& b) {
        for (const auto& [e, c] : b.t_) a.add_term(e, -c);
        return a;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exp e;
                for (std::size_t i = 0; i < V; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const K& s, const MPoly& a) {
        MPoly r;
        for (const auto& [e, c] : a.t_) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    MPoly partial(std::size_t i) const {
        MPoly r;
        for (const auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            Exp d = e;
            --d[i];
            K k = c;
            for (int m = 1; m < e[i]; ++m) k += c;
            r.add_term(d, k);
        }
        return r;
    }

    /// Evaluation in any commutative ring R receiving the coefficients by conversion.
    template <class R>
    R eval(const std::array<R, V>& x) const {
        R acc{};
        for (const auto& [e, c] : t_) {
            R m(c);
            for (std::size_t i = 0; i < V; ++i)
                for (int k = 0; k < e[i]; ++k) m = m * x[i];
            acc = acc + m;
        }
        return acc;
    }

    std::string to_string(const std::array<const char*, V>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            std::string c = it->second.to_string();
            const bool neg = c[0] == '-';
            if (neg) c = c.substr(1);
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (std::size_t i = 0; i < V; ++i) {
                if (!it->first[i]) continue;
                mono += (mono.empty() ? "" : "*") + std::string(names[i]);
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            if (mono.empty()) s += c;
            else s += (c == "1" ? "" : c + "*") + mono;
        }
        return s;
    }

   private:
    std::map<Exp, K> t_;
};

}  // namespace kummer

#endif
