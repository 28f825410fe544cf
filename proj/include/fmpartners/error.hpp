#pragma once

#include <stdexcept>
#include <string>

namespace fmp {

// Every library failure carries a stable machine-readable code; the CLI
// reports it verbatim in its {"error": code, "detail": ...} object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FMP_DEFINE_ERROR(Name, code_string)                                   \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& detail) : Error(code_string, detail) {} \
    }

FMP_DEFINE_ERROR(MultiplicityError, "multiplicity_error");
FMP_DEFINE_ERROR(InvalidFiberError, "invalid_fiber");
FMP_DEFINE_ERROR(InvalidConfigError, "invalid_config");
FMP_DEFINE_ERROR(NotEllipticError, "not_elliptic");
FMP_DEFINE_ERROR(DegenerateSurfaceError, "degenerate_surface");
FMP_DEFINE_ERROR(UnknownLambdaError, "unknown_lambda");
FMP_DEFINE_ERROR(ShapeError, "shape_error");
FMP_DEFINE_ERROR(AdditiveFiberError, "additive_fiber");
FMP_DEFINE_ERROR(DuplicatePointError, "duplicate_point");
FMP_DEFINE_ERROR(BaseMismatchError, "base_mismatch");
FMP_DEFINE_ERROR(NotRationalBaseError, "not_rational_base");
FMP_DEFINE_ERROR(UnsupportedTwistError, "unsupported_twist");
FMP_DEFINE_ERROR(NotCoprimeError, "not_coprime");
FMP_DEFINE_ERROR(KodairaZeroError, "kodaira_zero");
FMP_DEFINE_ERROR(NotRigidError, "not_rigid");
FMP_DEFINE_ERROR(NotPrimeError, "not_prime");
FMP_DEFINE_ERROR(InvalidArgumentError, "invalid_argument");
FMP_DEFINE_ERROR(UnknownEntryError, "unknown_entry");
FMP_DEFINE_ERROR(ParseError, "parse_error");
FMP_DEFINE_ERROR(IoError, "io_error");

#undef FMP_DEFINE_ERROR

}  // namespace fmp
