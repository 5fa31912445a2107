#pragma once

#include <stdexcept>
#include <string>

namespace einstab {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define EINSTAB_ERROR(Name)                                           \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

EINSTAB_ERROR(UnsupportedType)
EINSTAB_ERROR(UnknownLabel)
EINSTAB_ERROR(MissingKernel)
EINSTAB_ERROR(OutOfRange)
EINSTAB_ERROR(OutOfBracket)
EINSTAB_ERROR(NonComposable)
EINSTAB_ERROR(InvalidParameters)
EINSTAB_ERROR(EinsteinViolation)
EINSTAB_ERROR(NotEinstein)
EINSTAB_ERROR(IncompatibleFactors)
EINSTAB_ERROR(ParametricConstants)
EINSTAB_ERROR(InvalidCase)
EINSTAB_ERROR(UnsupportedFactor)
EINSTAB_ERROR(ParseError)
EINSTAB_ERROR(RegistryError)

#undef EINSTAB_ERROR

}  // namespace einstab
