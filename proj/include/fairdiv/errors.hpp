#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FAIRDIV_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

// core-model
FAIRDIV_DEFINE_ERROR(InvalidArgument);
FAIRDIV_DEFINE_ERROR(OverlapError);
FAIRDIV_DEFINE_ERROR(CoverageError);

// valuations
FAIRDIV_DEFINE_ERROR(InvalidValuation);
FAIRDIV_DEFINE_ERROR(GoodAlreadyPresent);
FAIRDIV_DEFINE_ERROR(UniverseTooLarge);
FAIRDIV_DEFINE_ERROR(NonPositiveDelta);

// fairness
FAIRDIV_DEFINE_ERROR(SingleAgent);

// incentives
FAIRDIV_DEFINE_ERROR(EmptyFamily);

// analysis
FAIRDIV_DEFINE_ERROR(PreconditionViolation);
FAIRDIV_DEFINE_ERROR(TraceMismatch);
FAIRDIV_DEFINE_ERROR(InvalidMapping);

// instances
FAIRDIV_DEFINE_ERROR(ParameterOutOfRange);
FAIRDIV_DEFINE_ERROR(NoWitness);

// io / cli
FAIRDIV_DEFINE_ERROR(NonTabularReport);

/// Malformed instance or allocation file. `field` is a JSON-pointer-like path
/// to the first offending field.
class FormatError : public Error {
 public:
  FormatError(std::string path, std::string field, const std::string& what)
      : Error(path + ": " + (field.empty() ? "" : field + ": ") + what),
        path_(std::move(path)),
        field_(std::move(field)) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string path_;
  std::string field_;
};

#undef FAIRDIV_DEFINE_ERROR

}  // namespace fairdiv
