#ifndef KUMMER_CURVE_IO_HPP
#define KUMMER_CURVE_IO_HPP

// Curve files.
//
//   # anything after '#' is ignored
//   label:  fixture
//   field:  QQ            (or GF(101))
//   roots:  1, 2, 3, 4, 5, 6
//   lead:   1             (optional, with roots)
//   coeffs: f0 f1 f2 f3 f4 f5 f6
//
// Values are integers or num/den, separated by commas or blanks. Either roots or coeffs is
// required; with both, the roots must reproduce the coefficients. Without roots the library
// tries to find them and otherwise keeps the curve without a root ordering.

#include <fstream>
#include <sstream>
#include <variant>

#include "curve.hpp"

namespace kummer {

struct Token {
    std::string text;
    int line = 0, col = 0;
};

struct CurveSpec {
    std::string source = "<input>";
    std::string label;
    std::optional<Token> field;
    std::vector<Token> roots, coeffs;
    std::optional<Token> lead;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& source, int line, int col, const std::string& msg) {
    fail(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

inline std::vector<Token> split_values(const std::string& s, int line, int col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        out.push_back({s.substr(i, j - i), line, col0 + static_cast<int>(i)});
        i = j;
    }
    return out;
}

}  // namespace detail

inline CurveSpec parse_curve_spec(std::istream& in, const std::string& source = "<input>") {
    CurveSpec spec;
    spec.source = source;
    std::string raw;
    int line = 0;
    std::vector<std::string> seen;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        const auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto colon = raw.find(':', b);
        if (colon == std::string::npos) detail::parse_fail(source, line, static_cast<int>(b) + 1, "expected 'key: value'");
        std::string key = raw.substr(b, colon - b);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            detail::parse_fail(source, line, static_cast<int>(b) + 1, "duplicate key '" + key + "'");
        seen.push_back(key);
        const std::string value = raw.substr(colon + 1);
        const int vcol = static_cast<int>(colon) + 2;
        auto vals = detail::split_values(value, line, vcol);
        auto single = [&]() -> Token {
            if (vals.size() != 1) detail::parse_fail(source, line, vcol, "'" + key + "' takes exactly one value");
            return vals[0];
        };
        if (key == "label") {
            auto s = value;
            const auto vb = s.find_first_not_of(" \t");
            const auto ve = s.find_last_not_of(" \t\r");
            spec.label = vb == std::string::npos ? "" : s.substr(vb, ve - vb + 1);
        } else if (key == "field") {
            spec.field = single();
        } else if (key == "roots") {
            if (vals.size() != 6) detail::parse_fail(source, line, vcol, "expected 6 roots, found " + std::to_string(vals.size()));
            spec.roots = vals;
        } else if (key == "coeffs") {
            if (vals.size() != 7) detail::parse_fail(source, line, vcol, "expected 7 coefficients f0..f6, found " + std::to_string(vals.size()));
            spec.coeffs = vals;
        } else if (key == "lead") {
            spec.lead = single();
        } else {
            detail::parse_fail(source, line, static_cast<int>(b) + 1, "unknown key '" + key + "'");
        }
    }
    if (spec.roots.empty() && spec.coeffs.empty()) detail::parse_fail(source, line + 1, 1, "need 'roots:' or 'coeffs:'");
    if (spec.lead && spec.roots.empty()) detail::parse_fail(source, spec.lead->line, spec.lead->col, "'lead' only goes with 'roots'");
    return spec;
}

inline CurveSpec parse_curve_spec(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse_curve_spec(in, source);
}

inline CurveSpec read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, path + ": cannot open file");
    return parse_curve_spec(in, path);
}

/// "QQ" or "GF(p)".
using AnyField = std::variant<RationalField, PrimeField>;

inline AnyField parse_field(const std::string& s) {
    if (s == "QQ" || s == "Q") return RationalField{};
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
        const auto digits = s.substr(3, s.size() - 4);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 20)
            return PrimeField(std::stoull(digits));
    }
    fail(Errc::ParseError, "unknown field '" + s + "' (use QQ or GF(p))");
}

using AnyCurve = std::variant<Genus2Curve<Rational>, Genus2Curve<Fp>>;

template <FieldElement K>
Genus2Curve<K> build_curve(const CurveSpec& spec, const FieldOf<K>& k) {
    auto value = [&](const Token& t) {
        try {
            return k.parse(t.text);
        } catch (const Error& e) {
            detail::parse_fail(spec.source, t.line, t.col, e.message());
        }
    };
    try {
        if (!spec.roots.empty()) {
            std::array<K, 6> r;
            for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = value(spec.roots[static_cast<std::size_t>(i)]);
            const K lead = spec.lead ? value(*spec.lead) : k(1);
            auto C = Genus2Curve<K>::from_roots(k, r, lead, spec.label);
            if (!spec.coeffs.empty()) {
                std::array<K, 7> f;
                for (int i = 0; i < 7; ++i) f[static_cast<std::size_t>(i)] = value(spec.coeffs[static_cast<std::size_t>(i)]);
                if (f != C.f())
                    detail::parse_fail(spec.source, spec.coeffs[0].line, spec.coeffs[0].col, "coefficients disagree with the roots");
            }
            return C;
        }
        std::array<K, 7> f;
        for (int i = 0; i < 7; ++i) f[static_cast<std::size_t>(i)] = value(spec.coeffs[static_cast<std::size_t>(i)]);
        auto C = Genus2Curve<K>::from_coeffs(k, f, spec.label);
        try {
            return C.with_found_roots();
        } catch (const Error& e) {
            if (e.code() != Errc::NotSplit && e.code() != Errc::RootsUnavailable) throw;
            return C;
        }
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        const auto& at = spec.roots.empty() ? spec.coeffs[0] : spec.roots[0];
        detail::parse_fail(spec.source, at.line, at.col, std::string(errc_name(e.code())) + ": " + e.message());
    }
}

/// The field comes from the file unless an override is given.
inline AnyCurve load_curve(const CurveSpec& spec, const std::optional<std::string>& field_override = std::nullopt) {
    std::string fs;
    if (field_override) {
        fs = *field_override;
    } else if (spec.field) {
        fs = spec.field->text;
    } else {
        fs = "QQ";
    }
    AnyField k;
    try {
        k = parse_field(fs);
    } catch (const Error& e) {
        if (!field_override && spec.field) detail::parse_fail(spec.source, spec.field->line, spec.field->col, e.message());
        throw;
    }
    if (auto* q = std::get_if<RationalField>(&k)) return build_curve<Rational>(spec, *q);
    return build_curve<Fp>(spec, std::get<PrimeField>(k));
}

}  // namespace kummer

#endif
