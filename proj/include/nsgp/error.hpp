#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nsgp {

using integer = std::int64_t;

enum class errc {
  empty_generator_list,
  non_coprime_generators,
  not_closed_under_addition,
  missing_zero,
  conductor_too_large,
  full_semigroup,
  not_an_element,
  ambient_mismatch,
  d_too_small,
  premise_violated,
  not_d_symmetric,
  invalid_b,
  not_a_semigroup,
  limit_too_small,
  bound_exceeded,
  bound_too_small,
  unknown_suite,
  parse_error,
  representation_not_found,
  invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_generator_list: return "EmptyGeneratorList";
    case errc::non_coprime_generators: return "NonCoprimeGenerators";
    case errc::not_closed_under_addition: return "NotClosedUnderAddition";
    case errc::missing_zero: return "MissingZero";
    case errc::conductor_too_large: return "ConductorTooLarge";
    case errc::full_semigroup: return "FullSemigroup";
    case errc::not_an_element: return "NotAnElement";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::d_too_small: return "DTooSmall";
    case errc::premise_violated: return "PremiseViolated";
    case errc::not_d_symmetric: return "NotDSymmetric";
    case errc::invalid_b: return "InvalidB";
    case errc::not_a_semigroup: return "NotASemigroup";
    case errc::limit_too_small: return "LimitTooSmall";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::parse_error: return "ParseError";
    case errc::representation_not_found: return "RepresentationNotFound";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Exception carried by every failing operation in the library.
///
/// `witness()` is set for the errors that have a concrete certificate:
/// a pair (a, b) whose sum escapes the set for NotClosedUnderAddition, or a
/// pair (e, f) with e + f + b outside S for NotASemigroup. Parse errors carry
/// the 1-based column in `column()`.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  error(errc code, const std::string& what, std::pair<integer, integer> witness)
      : error(code, what) {
    witness_ = witness;
  }

  static error at_column(const std::string& what, std::size_t column) {
    error e(errc::parse_error, what + " (column " + std::to_string(column) + ")");
    e.column_ = column;
    return e;
  }

  errc code() const noexcept { return code_; }
  const std::optional<std::pair<integer, integer>>& witness() const noexcept { return witness_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  errc code_;
  std::optional<std::pair<integer, integer>> witness_;
  std::optional<std::size_t> column_;
};

}  // namespace nsgp
