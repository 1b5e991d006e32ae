#pragma once

/**
 * @file quotient.hpp
 * @brief Quotients S = T/d and d-folds of minimal genus.
 *
 * T is a d-fold of S when S = T/d = {s in N : d*s in T}. Every d-fold of S
 * has genus at least g(S) + ceil((d - 1) f(S) / 2); the bound is attained by
 *
 *     T = d*S  U  { x >= floor(d f / 2) + 1 : d does not divide x },
 *
 * and every d-fold attaining it has Frobenius number d*f(S).
 */

#include <utility>

#include "nsgp/semigroup.hpp"

namespace nsgp {

/// {s in N : d*s in T}. The result has conductor at most ceil(c(T)/d).
inline NumericalSemigroup quotient(const NumericalSemigroup& t, integer d) {
  if (d < 1) throw error(errc::invalid_argument, "d must be positive");
  if (d == 1) return t;
  const integer bound = (t.conductor() + d - 1) / d;
  return from_membership(bound, [&](integer s) { return t.contains(d * s); });
}

struct DFoldReport {
  NumericalSemigroup base;
  integer d = 0;
  NumericalSemigroup fold;
  integer genus_fold = 0;
  integer frobenius_fold = 0;
  integer type_fold = 0;
  bool is_min_genus = false;
};

namespace detail {
inline void require_fold_args(const NumericalSemigroup& s, integer d) {
  if (d < 2) throw error(errc::d_too_small, "d must be at least 2, got " + std::to_string(d));
  require_proper(s, "the minimal-genus d-fold");
}

constexpr integer floor_div(integer a, integer b) noexcept {
  const integer q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr integer ceil_div(integer a, integer b) noexcept { return -floor_div(-a, b); }
}  // namespace detail

/// g(S) + ceil((d - 1) f / 2).
inline integer min_genus_dfold_value(const NumericalSemigroup& s, integer d) {
  detail::require_fold_args(s, d);
  return genus(s) + detail::ceil_div((d - 1) * s.frobenius(), 2);
}

inline DFoldReport construct_min_genus_dfold(const NumericalSemigroup& s, integer d) {
  detail::require_fold_args(s, d);
  const integer f = s.frobenius();
  const integer start = detail::floor_div(d * f, 2) + 1;
  auto fold = from_membership(d * f + 1, [&](integer x) {
    return x % d == 0 ? s.contains(x / d) : x >= start;
  });
  DFoldReport report{s, d, fold, genus(fold), fold.frobenius(), type_of(fold), false};
  report.is_min_genus = report.genus_fold == min_genus_dfold_value(s, d);
  return report;
}

/// Bounds on the type of a minimal-genus d-fold: exactly t(S) when f is even
/// or d is odd; otherwise t(S) or t(S) + 1, and exactly t(S) + 1 when S is
/// almost symmetric.
inline std::pair<integer, integer> expected_min_fold_type(const NumericalSemigroup& s,
                                                          integer d) {
  detail::require_fold_args(s, d);
  const integer t = type_of(s);
  if (s.frobenius() % 2 == 0 || d % 2 == 1) return {t, t};
  if (is_almost_symmetric(s)) return {t + 1, t + 1};
  return {t, t + 1};
}

/// For almost symmetric S and a d-fold T of S, checks that T has minimal
/// genus iff T is almost symmetric of type t (t = t(S) when f is even or d
/// odd, t(S) + 1 otherwise), and that in that case d | f(T) with
/// f(T) / d = f(S).
inline bool check_almost_symmetric_fold_corollaries(const NumericalSemigroup& s, integer d,
                                                    const NumericalSemigroup& t) {
  detail::require_fold_args(s, d);
  if (!is_almost_symmetric(s)) {
    throw error(errc::premise_violated, "base semigroup is not almost symmetric");
  }
  if (!(quotient(t, d) == s)) {
    throw error(errc::premise_violated, "T is not a " + std::to_string(d) + "-fold of S");
  }
  const integer f = s.frobenius();
  const integer expected_type = (f % 2 == 0 || d % 2 == 1) ? type_of(s) : type_of(s) + 1;
  const bool minimal = genus(t) == min_genus_dfold_value(s, d);
  const bool shape = is_almost_symmetric(t) && type_of(t) == expected_type;
  if (minimal != shape) return false;
  if (shape && !(t.frobenius() % d == 0 && t.frobenius() / d == f)) return false;
  return true;
}

}  // namespace nsgp
