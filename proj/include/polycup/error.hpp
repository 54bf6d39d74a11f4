#ifndef POLYCUP_ERROR_HPP
#define POLYCUP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycup {

enum class ErrorKind {
  DegenerateFace,
  VertexOutOfRange,
  NotAPseudomanifold,
  Nonorientable,
  IncoherentOrientation,
  DegreeOutOfRange,
  DegreeMismatch,
  DegreeOverflow,
  ComplexMismatch,
  UnknownCell,
  NotClosed,
  UnsupportedDegreePair,
  MalformedHeader,
  CountMismatch,
  IndexOutOfRange,
  UnparseableNumber,
  UnknownProperty,
  UnknownProfile,
};

inline constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotAPseudomanifold: return "NotAPseudomanifold";
    case ErrorKind::Nonorientable: return "Nonorientable";
    case ErrorKind::IncoherentOrientation: return "IncoherentOrientation";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::ComplexMismatch: return "ComplexMismatch";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnsupportedDegreePair: return "UnsupportedDegreePair";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnparseableNumber: return "UnparseableNumber";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::UnknownProfile: return "UnknownProfile";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind and a
/// human-readable detail (offending cell ids, line numbers, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace polycup

#endif  // POLYCUP_ERROR_HPP
