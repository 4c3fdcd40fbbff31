#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qclearn {

// Base class for all library errors. `name()` is the stable identifier the
// CLI prints on the diagnostic stream; `what()` adds context.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define QCLEARN_DEFINE_ERROR(E)                                    \
  class E : public Error {                                        \
  public:                                                          \
    explicit E(const std::string& msg) : Error(#E, msg) {}         \
  }

QCLEARN_DEFINE_ERROR(NotHermitian);
QCLEARN_DEFINE_ERROR(NotSquare);
QCLEARN_DEFINE_ERROR(NotPowerOfTwo);
QCLEARN_DEFINE_ERROR(DimensionCap);
QCLEARN_DEFINE_ERROR(NegativeEigenvalue);
QCLEARN_DEFINE_ERROR(BadParams);
QCLEARN_DEFINE_ERROR(IndexOutOfRange);
QCLEARN_DEFINE_ERROR(WrongFamily);
QCLEARN_DEFINE_ERROR(SingularQueryMatrix);
QCLEARN_DEFINE_ERROR(NonConstantDiagonal);
QCLEARN_DEFINE_ERROR(ZeroAmplitude);
QCLEARN_DEFINE_ERROR(EmptyMarkedSet);
QCLEARN_DEFINE_ERROR(OddN);
QCLEARN_DEFINE_ERROR(IoError);
QCLEARN_DEFINE_ERROR(BadFlags);

#undef QCLEARN_DEFINE_ERROR

// Non-fatal conditions attached to results instead of thrown.
enum class Warning {
  ZeroBand,              // sign() saw eigenvalues inside the zero band
  NonConstantDiagonal,   // sqrt-Gram diagonal is not constant
  AsymmetricQueryMatrix, // group-symmetric family with a non-symmetric A
};

inline const char* warning_name(Warning w) {
  switch (w) {
    case Warning::ZeroBand: return "ZeroBand";
    case Warning::NonConstantDiagonal: return "NonConstantDiagonal";
    case Warning::AsymmetricQueryMatrix: return "AsymmetricQueryMatrix";
  }
  return "?";
}

using Warnings = std::vector<Warning>;

}  // namespace qclearn
