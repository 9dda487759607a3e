#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolhd {

enum class ErrorKind {
  Parse,
  LengthMismatch,
  ShapeUnavailable,
  Unsatisfiable,
  NoSecondModel,
  UniqueModel,
  NotAModel,
  TooLarge,
  NoPolyAlgorithm,
  Internal,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::LengthMismatch: return "length_mismatch";
    case ErrorKind::ShapeUnavailable: return "shape_unavailable";
    case ErrorKind::Unsatisfiable: return "unsatisfiable";
    case ErrorKind::NoSecondModel: return "no_second_model";
    case ErrorKind::UniqueModel: return "unique_model";
    case ErrorKind::NotAModel: return "not_a_model";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::NoPolyAlgorithm: return "no_poly_algorithm";
    case ErrorKind::Internal: return "internal_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Consistency check for conditions the theory guarantees.
inline void ensure(bool cond, const char* what) {
  if (!cond) fail(ErrorKind::Internal, what);
}

}  // namespace boolhd
