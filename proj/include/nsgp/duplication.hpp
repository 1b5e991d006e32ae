#pragma once

/**
 * @file duplication.hpp
 * @brief Numerical duplication and the symmetric doubles of a semigroup.
 *
 * S |><|^b E = 2*S U (2*E + b) for odd b in S. It is a numerical semigroup
 * iff E + E + b is contained in S, and it is always a double of S. The
 * symmetric doubles of S are exactly S |><|^b K with K + K + b in S; such a
 * double has Frobenius number 2 f(S) + b and genus f(S) + (b + 1) / 2, so the
 * least admissible b gives the unique symmetric double of minimal genus.
 */

#include <vector>

#include "nsgp/ideal.hpp"
#include "nsgp/quotient.hpp"

namespace nsgp {

struct DoubleReport {
  NumericalSemigroup base;
  integer b = 0;
  NumericalSemigroup double_semigroup;
  integer genus_double = 0;
  integer frobenius_double = 0;
};

inline NumericalSemigroup numerical_duplication(const NumericalSemigroup& s,
                                                const RelativeIdeal& e, integer b) {
  if (b % 2 == 0 || !s.contains(b)) {
    throw error(errc::invalid_b, std::to_string(b) + " is not an odd element of S");
  }
  detail::require_same_ambient(e, s);
  if (auto w = sum_plus_scalar_witness(e, e, b, s)) {
    throw error(errc::not_a_semigroup,
                std::to_string(w->first) + " + " + std::to_string(w->second) + " + " +
                    std::to_string(b) + " is not in S",
                *w);
  }
  // Even part is 2*S, odd part is 2*E + b; both are full from the larger tail on.
  const integer bound = std::max(2 * s.conductor(), 2 * e.tail_start() + b);
  return from_membership(bound, [&](integer x) {
    return x % 2 == 0 ? s.contains(x / 2) : e.contains((x - b) / 2);
  });
}

namespace detail {
inline DoubleReport make_double_report(const NumericalSemigroup& s, integer b,
                                       NumericalSemigroup t) {
  DoubleReport r{s, b, std::move(t), 0, 0};
  r.genus_double = genus(r.double_semigroup);
  r.frobenius_double = r.double_semigroup.frobenius();
  return r;
}

inline integer least_odd_element(const NumericalSemigroup& s) {
  for (integer x : s.small_elements()) {
    if (x % 2 == 1) return x;
  }
  const integer c = s.conductor();
  return c % 2 == 1 ? c : c + 1;
}
}  // namespace detail

/// Members of the symmetric-double family with b <= b_limit, by ascending b.
inline std::vector<DoubleReport> symmetric_doubles(const NumericalSemigroup& s,
                                                   integer b_limit) {
  detail::require_proper(s, "the symmetric double family");
  if (b_limit < s.frobenius() + 2) {
    throw error(errc::limit_too_small,
                "b_limit must be at least f(S) + 2 = " + std::to_string(s.frobenius() + 2));
  }
  const auto k = canonical_ideal(s);
  std::vector<DoubleReport> out;
  for (integer b = 1; b <= b_limit; b += 2) {
    if (!s.contains(b) || !sum_plus_scalar_contained(k, k, b, s)) continue;
    out.push_back(detail::make_double_report(s, b, numerical_duplication(s, k, b)));
  }
  return out;
}

/// The unique symmetric double of minimal genus. Odd elements are tried in
/// ascending order; any odd b > f(S) is admissible, so the search stops at
/// the first odd element past the Frobenius number.
inline DoubleReport min_genus_symmetric_double(const NumericalSemigroup& s) {
  if (s.is_full()) return detail::make_double_report(s, 1, NumericalSemigroup{});
  const auto k = canonical_ideal(s);
  for (integer b = 1;; b += 2) {
    if (!s.contains(b)) continue;
    if (b > s.frobenius() || sum_plus_scalar_contained(k, k, b, s)) {
      return detail::make_double_report(s, b, numerical_duplication(s, k, b));
    }
  }
}

/// For almost symmetric S the least odd element is always admissible.
inline DoubleReport min_genus_symmetric_double_almost_symmetric(const NumericalSemigroup& s) {
  if (s.is_full()) return min_genus_symmetric_double(s);
  if (!is_almost_symmetric(s)) {
    throw error(errc::premise_violated, "semigroup is not almost symmetric");
  }
  const integer b = detail::least_odd_element(s);
  // No containment search: numerical_duplication still validates.
  return detail::make_double_report(s, b, numerical_duplication(s, canonical_ideal(s), b));
}

}  // namespace nsgp
