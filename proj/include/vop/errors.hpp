#ifndef VOP_ERRORS_HPP
#define VOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vop {

/// Failure category, used by the CLI to pick an exit code.
enum class ErrorKind {
  Spec,          // bad user input: malformed spec, unknown preset, bad params
  Verification,  // a checked identity failed to hold
  Internal,      // arithmetic or consistency failure inside the engine
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& msg)
      : std::runtime_error(msg), kind_(kind), code_(std::move(code)) {}
  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

#define VOP_DEFINE_ERROR(Name, Kind)                          \
  class Name final : public Error {                           \
  public:                                                     \
    explicit Name(const std::string& msg)                     \
        : Error(ErrorKind::Kind, #Name, msg) {}               \
  }

VOP_DEFINE_ERROR(DivisionByZero, Internal);
VOP_DEFINE_ERROR(InexactDivision, Internal);
VOP_DEFINE_ERROR(TableTooSmall, Internal);
VOP_DEFINE_ERROR(RealizationMismatch, Internal);
VOP_DEFINE_ERROR(NilpotencyCapExceeded, Spec);
VOP_DEFINE_ERROR(NotDegreeLowering, Internal);
VOP_DEFINE_ERROR(InvalidSpec, Spec);
VOP_DEFINE_ERROR(FitMismatch, Internal);
VOP_DEFINE_ERROR(BandwidthExceeded, Verification);
VOP_DEFINE_ERROR(RodriguesMismatch, Verification);
VOP_DEFINE_ERROR(CorrespondenceMismatch, Verification);
VOP_DEFINE_ERROR(SpecNotQEqualsG, Spec);
VOP_DEFINE_ERROR(UnknownPreset, Spec);
VOP_DEFINE_ERROR(MissingParam, Spec);
VOP_DEFINE_ERROR(InvalidParam, Spec);
VOP_DEFINE_ERROR(UsageError, Spec);

#undef VOP_DEFINE_ERROR

}  // namespace vop

#endif
