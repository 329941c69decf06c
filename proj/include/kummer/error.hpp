#ifndef KUMMER_ERROR_HPP
#define KUMMER_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class Errc {
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    ModulusMismatch,
    DimensionMismatch,
    ZeroVector,
    NotSplit,
    RepeatedRoot,
    RootsUnavailable,
    InvalidCurve,
    EqualAbscissae,
    InternalInconsistency,
    SingularPoint,
    DegenerateConfiguration,
    NotOnKummer,
    NotOnQuadric,
    DegenerateDivisor,
    NotMonic,
    ZeroRoot,
    SingularTrope,
    CoincidentPoints,
    RankDeficient,
    VanishingAtRoot,
    WitnessMismatch,
    SearchSpaceTooLarge,
    InvalidCandidate,
    InvalidArgument,
    ParseError,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::InvalidField: return "InvalidField";
        case Errc::ModulusMismatch: return "ModulusMismatch";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::NotSplit: return "NotSplit";
        case Errc::RepeatedRoot: return "RepeatedRoot";
        case Errc::RootsUnavailable: return "RootsUnavailable";
        case Errc::InvalidCurve: return "InvalidCurve";
        case Errc::EqualAbscissae: return "EqualAbscissae";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::SingularPoint: return "SingularPoint";
        case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
        case Errc::NotOnKummer: return "NotOnKummer";
        case Errc::NotOnQuadric: return "NotOnQuadric";
        case Errc::DegenerateDivisor: return "DegenerateDivisor";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroRoot: return "ZeroRoot";
        case Errc::SingularTrope: return "SingularTrope";
        case Errc::CoincidentPoints: return "CoincidentPoints";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::VanishingAtRoot: return "VanishingAtRoot";
        case Errc::WitnessMismatch: return "WitnessMismatch";
        case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case Errc::InvalidCandidate: return "InvalidCandidate";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

    Errc code() const noexcept { return code_; }
    // what() without the code prefix
    const std::string& message() const noexcept { return message_; }

   private:
    Errc code_;
    std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kummer

#endif
