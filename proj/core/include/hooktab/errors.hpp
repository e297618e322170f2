#pragma once

// Domain error taxonomy. Every throwing precondition in the library uses one
// of these names; the CLI maps them onto exit code 1 and prints the name, so
// the names are part of the public contract.

#include <stdexcept>
#include <string>

namespace hooktab {

struct Error : std::runtime_error {
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define HOOKTAB_DEFINE_ERROR(NAME)                                     \
  struct NAME : Error {                                                \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}     \
  }

HOOKTAB_DEFINE_ERROR(CovarianceViolation);
HOOKTAB_DEFINE_ERROR(LengthMismatch);
HOOKTAB_DEFINE_ERROR(SignatureMismatch);
HOOKTAB_DEFINE_ERROR(NotComparable);
HOOKTAB_DEFINE_ERROR(ShapeMismatch);
HOOKTAB_DEFINE_ERROR(NotQuasistandard);
HOOKTAB_DEFINE_ERROR(NotOuterCorner);
HOOKTAB_DEFINE_ERROR(BudgetExceeded);
HOOKTAB_DEFINE_ERROR(InconsistentSystem);
HOOKTAB_DEFINE_ERROR(IndexOutOfRange);
HOOKTAB_DEFINE_ERROR(PreconditionViolation);

#undef HOOKTAB_DEFINE_ERROR

}  // namespace hooktab
