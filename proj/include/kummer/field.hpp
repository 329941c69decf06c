#ifndef KUMMER_FIELD_HPP
#define KUMMER_FIELD_HPP

// Exact scalars: rationals (GMP) and prime fields GF(p) with p an odd prime > 5.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "error.hpp"

namespace kummer {

class Rational;
class Fp;

struct RationalField {
    using element_type = Rational;

    Rational operator()(long n) const;
    Rational parse(std::string_view s) const;
    Rational random(std::mt19937_64& rng, long bound) const;
    std::string name() const { return "QQ"; }
    std::uint64_t characteristic() const { return 0; }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
    using element_type = Fp;

    std::uint64_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t modulus);

    Fp operator()(long n) const;
    Fp parse(std::string_view s) const;
    Fp reduce(const mpq_class& q) const;
    Fp random(std::mt19937_64& rng) const;
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
    std::uint64_t characteristic() const { return p; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        for (b %= m; e; e >>= 1, b = mulmod(b, b, m))
            if (e & 1) r = mulmod(r, b, m);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

class Rational {
   public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    Rational(long num, long den) {
        if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    RationalField field() const { return {}; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in QQ");
        return Rational(mpq_class(1) / v_);
    }

    /// Exact square root when the value is a rational square.
    std::optional<Rational> sqrt() const {
        if (sgn(v_) < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(mpq_class(rn, rd));
    }
    bool is_square() const { return sqrt().has_value(); }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(Errc::DivisionByZero, "division by 0 in QQ");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

   private:
    mpq_class v_{0};
};

inline Rational RationalField::operator()(long n) const { return Rational(n); }

inline Rational RationalField::parse(std::string_view s) const {
    std::string t(s);
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    if (b == std::string::npos) fail(Errc::ParseError, "empty number");
    t = t.substr(b, e - b + 1);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    mpq_class q;
    if (t.empty() || t.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(t, 10) != 0)
        fail(Errc::ParseError, "not a rational number: '" + t + "'");
    if (q.get_den() == 0) fail(Errc::DivisionByZero, "zero denominator in '" + t + "'");
    q.canonicalize();
    return Rational(q);
}

inline Rational RationalField::random(std::mt19937_64& rng, long bound) const {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(num(rng), den(rng));
}

// ---------------------------------------------------------------------------

/// Element of GF(p). A default-constructed element is the zero of an unspecified prime
/// field and adopts the modulus of whatever it is combined with.
class Fp {
   public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t p) : v_(p ? value % p : value), p_(p) {}

    PrimeField field() const {
        if (p_ == 0) fail(Errc::FieldMismatch, "element has no field attached");
        return PrimeField(p_);
    }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return p_ != 0 && v_ == 1; }

    Fp pow(std::uint64_t e) const {
        Fp r(1, p_), b = *this;
        for (; e; e >>= 1, b *= b)
            if (e & 1) r *= b;
        return r;
    }
    Fp inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
        return pow(p_ - 2);
    }
    bool is_square() const { return is_zero() || pow((p_ - 1) / 2).is_one(); }

    /// Tonelli-Shanks.
    std::optional<Fp> sqrt() const {
        if (is_zero()) return *this;
        if (!is_square()) return std::nullopt;
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) q >>= 1, ++s;
        Fp z(2, p_);
        while (z.is_square()) z = Fp(z.v_ + 1, p_);
        Fp c = z.pow(q), t = pow(q), r = pow((q + 1) / 2);
        int m = s;
        while (!t.is_one()) {
            int i = 0;
            Fp tt = t;
            while (!tt.is_one()) tt *= tt, ++i;
            Fp b = c;
            for (int j = 0; j < m - i - 1; ++j) b *= b;
            r *= b;
            c = b * b;
            t *= c;
            m = i;
        }
        return r;
    }

    std::string to_string() const { return std::to_string(v_); }

    Fp operator-() const { return Fp(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(const Fp& o) {
        adopt(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        adopt(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        adopt(o);
        if (p_ != 0) v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        adopt(o);
        return *this *= o.inverse();
    }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) return false;
        return a.v_ == b.v_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

   private:
    void adopt(const Fp& o) {
        if (p_ == 0) {
            p_ = o.p_;
        } else if (o.p_ != 0 && o.p_ != p_) {
            fail(Errc::FieldMismatch, "GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
        }
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline PrimeField::PrimeField(std::uint64_t modulus) : p(modulus) {
    if (modulus <= 5 || !is_prime_u64(modulus) || modulus >= (1ull << 62))
        fail(Errc::InvalidField, "GF(p) requires a prime 5 < p < 2^62, got " + std::to_string(modulus));
}

inline Fp PrimeField::operator()(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
}

inline Fp PrimeField::reduce(const mpq_class& q) const {
    mpz_class m(std::to_string(p));
    mpz_class num = q.get_num() % m, den = q.get_den() % m;
    if (num < 0) num += m;
    if (den == 0) fail(Errc::DivisionByZero, "denominator divisible by " + std::to_string(p));
    Fp a(num.get_ui(), p), b(den.get_ui(), p);
    return a / b;
}

inline Fp PrimeField::parse(std::string_view s) const { return reduce(RationalField{}.parse(s).value()); }

inline Fp PrimeField::random(std::mt19937_64& rng) const {
    return Fp(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng), p);
}

// ---------------------------------------------------------------------------

/// An exact field element type usable throughout the library.
template <class K>
concept FieldElement = requires(K a, const K& b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a == b } -> std::convertible_to<bool>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.inverse() } -> std::same_as<K>;
    { b.to_string() } -> std::convertible_to<std::string>;
    { b.field() };
};

template <FieldElement K>
using FieldOf = decltype(std::declval<K>().field());

static_assert(FieldElement<Rational>);
static_assert(FieldElement<Fp>);

}  // namespace kummer

#endif
