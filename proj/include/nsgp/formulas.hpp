#pragma once

/**
 * @file formulas.hpp
 * @brief Closed forms for the Frobenius number of a quotient.
 *
 * Central fact: if S is d-symmetric (for every multiple n of d, n or f(S) - n
 * is in S) and x is the least element of S congruent to f(S) mod d, then
 *
 *     f(S/d) = (f(S) - x) / d.
 *
 * This covers symmetric and pseudo-symmetric S for every d >= 2, and for
 * symmetric S and d = 2 the element x is the least odd generator of any
 * generating system. The remaining functions specialise that to families
 * where f(S) is known in closed form.
 *
 * Functions taking an arrangement of generators (`std::span<const integer>`)
 * use 0-based indices: n_1 is gens[0].
 */

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "nsgp/notation.hpp"
#include "nsgp/quotient.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

namespace detail {

// Largest target accepted by the generator-representation searches.
inline constexpr integer representation_search_limit = integer{1} << 24;

// reach[v] iff v is a nonnegative combination of `gens` (any gcd).
inline std::vector<bool> reachable(std::span<const integer> gens, integer bound) {
  std::vector<bool> reach(static_cast<std::size_t>(bound + 1));
  reach[0] = true;
  for (integer v = 1; v <= bound; ++v) {
    for (integer n : gens) {
      if (n <= v && reach[static_cast<std::size_t>(v - n)]) {
        reach[static_cast<std::size_t>(v)] = true;
        break;
      }
    }
  }
  return reach;
}

inline bool in_monoid(std::span<const integer> gens, integer v) {
  if (v < 0) return false;
  return reachable(gens, v)[static_cast<std::size_t>(v)];
}

inline void require_arrangement(std::span<const integer> gens, std::size_t min_size) {
  if (gens.size() < min_size) {
    throw error(errc::invalid_argument,
                "need at least " + std::to_string(min_size) + " generators");
  }
  integer g = 0;
  for (integer n : gens) {
    if (n <= 0) throw error(errc::invalid_argument, "generators must be positive");
    g = std::gcd(g, n);
  }
  if (g != 1) throw error(errc::non_coprime_generators, "gcd of generators is " + std::to_string(g));
}

inline std::vector<integer> others(std::span<const integer> gens, std::size_t i) {
  std::vector<integer> out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j != i) out.push_back(gens[j]);
  }
  return out;
}

inline integer least_odd(std::span<const integer> gens) {
  std::optional<integer> x;
  for (integer n : gens) {
    if (n % 2 == 1 && (!x || n < *x)) x = n;
  }
  // gcd 1 guarantees an odd generator.
  if (!x) throw error(errc::non_coprime_generators, "no odd generator");
  return *x;
}

inline integer mod(integer a, integer m) noexcept {
  const integer r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// f(<a, b>) = ab - a - b.
inline integer sylvester_frobenius(integer a, integer b) {
  if (a < 2 || b < 2) throw error(errc::invalid_argument, "generators must be at least 2");
  if (std::gcd(a, b) != 1) throw error(errc::non_coprime_generators, "gcd(a, b) != 1");
  return a * b - a - b;
}

/// Least element of S congruent to f(S) modulo d.
inline integer least_element_congruent_to_frobenius(const NumericalSemigroup& s, integer d) {
  if (d < 1) throw error(errc::invalid_argument, "d must be positive");
  const integer r = detail::mod(s.frobenius(), d);
  for (integer x = r;; x += d) {
    if (s.contains(x)) return x;
  }
}

/// (f(S) - x) / d without checking any premise. Exact division always holds
/// because x is congruent to f(S).
inline integer quotient_frobenius_formula_value(const NumericalSemigroup& s, integer d) {
  if (d < 2) throw error(errc::d_too_small, "d must be at least 2");
  return (s.frobenius() - least_element_congruent_to_frobenius(s, d)) / d;
}

inline integer quotient_frobenius_d_symmetric(const NumericalSemigroup& s, integer d) {
  if (d < 2) throw error(errc::d_too_small, "d must be at least 2");
  if (!is_d_symmetric(s, d)) {
    throw error(errc::not_d_symmetric,
                to_set_notation(s) + " is not " + std::to_string(d) + "-symmetric");
  }
  return quotient_frobenius_formula_value(s, d);
}

/// Same formula for symmetric or pseudo-symmetric S. A pseudo-symmetric S
/// with 2d | f(S) is not d-symmetric, but then x = 0 and the value f(S)/d
/// is still correct.
inline integer quotient_frobenius_sym_or_psym(const NumericalSemigroup& s, integer d) {
  if (d < 2) throw error(errc::d_too_small, "d must be at least 2");
  if (s.is_full() || !(is_symmetric(s) || is_pseudo_symmetric(s))) {
    throw error(errc::premise_violated, "semigroup is neither symmetric nor pseudo-symmetric");
  }
  return quotient_frobenius_formula_value(s, d);
}

/// f(S/2) = (f(S) - x) / 2 for symmetric S, x the least odd generator of the
/// given generating system (minimal or not).
inline integer half_quotient_frobenius_symmetric(const NumericalSemigroup& s,
                                                 const GeneratorList& system) {
  if (s.is_full() || !is_symmetric(s)) {
    throw error(errc::premise_violated, "semigroup is not symmetric");
  }
  if (!(from_generators(system) == s)) {
    throw error(errc::premise_violated, "generators do not generate the semigroup");
  }
  return (s.frobenius() - detail::least_odd(system.values())) / 2;
}

inline integer half_quotient_frobenius_symmetric(const NumericalSemigroup& s) {
  if (s.is_full() || !is_symmetric(s)) {
    throw error(errc::premise_violated, "semigroup is not symmetric");
  }
  return (s.frobenius() - detail::least_odd(minimal_generators(s).values())) / 2;
}

/// f(<a, b>/2) for coprime 2 <= a < b.
inline integer half_quotient_two_generators(integer a, integer b) {
  if (a < 2 || b <= a) throw error(errc::invalid_argument, "need 2 <= a < b");
  if (std::gcd(a, b) != 1) throw error(errc::non_coprime_generators, "gcd(a, b) != 1");
  return a % 2 == 1 ? (a * b - b) / 2 - a : (a * b - a) / 2 - b;
}

/// Least element of <a, a+1> congruent to a^2 - a - 1 modulo 5.
inline integer x_for_consecutive_mod5(integer a) {
  if (a < 2) throw error(errc::invalid_argument, "need a >= 2");
  switch (a % 5) {
    case 0: return 4 * (a + 1);
    case 1:
    case 2: return 2 * (a + 1);
    case 3: return 0;
    default: return 4 * a;
  }
}

/// f(<a, a+1>/5).
inline integer fifth_quotient_consecutive(integer a) {
  if (a < 2) throw error(errc::invalid_argument, "need a >= 2");
  switch (a % 5) {
    case 0: return a * a / 5 - a - 1;
    case 1:
    case 2: return (a * a - 3 * a - 3) / 5;
    case 3: return (a * a - a - 1) / 5;
    default: return (a * a - 1) / 5 - a;
  }
}

/// Least k >= 1 with k * gens[i] in the monoid generated by the other
/// generators. Bounded by min_{j != i} gens[j].
inline integer c_coefficient(std::span<const integer> gens, std::size_t i) {
  detail::require_arrangement(gens, 2);
  if (i >= gens.size()) throw error(errc::invalid_argument, "generator index out of range");
  const auto rest = detail::others(gens, i);
  const integer kmax = *std::min_element(rest.begin(), rest.end());
  const integer bound = kmax * gens[i];
  if (bound > detail::representation_search_limit) {
    throw error(errc::representation_not_found, "search bound exceeded");
  }
  const auto reach = detail::reachable(rest, bound);
  for (integer k = 1; k <= kmax; ++k) {
    if (reach[static_cast<std::size_t>(k * gens[i])]) return k;
  }
  throw error(errc::representation_not_found, "no multiple found");
}

/// Row r with r[i] = 0 and sum_{j != i} r[j] * gens[j] = c_i * gens[i];
/// the lexicographically smallest such row.
inline std::vector<integer> representation(std::span<const integer> gens, std::size_t i) {
  const integer target = c_coefficient(gens, i) * gens[i];
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j != i) idx.push_back(j);
  }
  // suffix[k][v]: v is a combination of gens[idx[k..]].
  std::vector<std::vector<bool>> suffix(idx.size() + 1);
  suffix[idx.size()] = std::vector<bool>(static_cast<std::size_t>(target + 1));
  suffix[idx.size()][0] = true;
  for (std::size_t k = idx.size(); k-- > 0;) {
    const integer n = gens[idx[k]];
    auto& cur = suffix[k];
    cur = suffix[k + 1];
    for (integer v = n; v <= target; ++v) {
      if (cur[static_cast<std::size_t>(v - n)]) cur[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<integer> row(gens.size(), 0);
  integer rem = target;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const integer n = gens[idx[k]];
    integer r = 0;
    while (!suffix[k + 1][static_cast<std::size_t>(rem - r * n)]) ++r;
    row[idx[k]] = r;
    rem -= r * n;
  }
  return row;
}

/// Every row representing c_i * gens[i], in lexicographic order. Throws
/// RepresentationNotFound when there are more than `max_rows`.
inline std::vector<std::vector<integer>> all_representations(std::span<const integer> gens,
                                                             std::size_t i,
                                                             std::size_t max_rows = 100000) {
  const integer target = c_coefficient(gens, i) * gens[i];
  std::vector<std::vector<integer>> rows;
  std::vector<integer> row(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, integer rem) -> void {
    if (j == gens.size()) {
      if (rem == 0) {
        if (rows.size() == max_rows) {
          throw error(errc::representation_not_found, "too many representations");
        }
        rows.push_back(row);
      }
      return;
    }
    if (j == i) {
      self(self, j + 1, rem);
      return;
    }
    for (integer r = 0; r * gens[j] <= rem; ++r) {
      row[j] = r;
      self(self, j + 1, rem - r * gens[j]);
    }
    row[j] = 0;
  };
  rec(rec, 0, target);
  return rows;
}

/// Parameters of <a m1, a m2, b m1 + c m2>.
struct FamilyParameters {
  integer a = 0, b = 0, c = 0, m1 = 0, m2 = 0;

  bool valid() const noexcept {
    return a >= 2 && b >= 0 && c >= 0 && b + c >= 2 && m1 >= 1 && m2 >= 1 &&
           std::gcd(m1, m2) == 1 && std::gcd(a, b * m1 + c * m2) == 1;
  }
  std::array<integer, 3> generators() const noexcept {
    return {a * m1, a * m2, b * m1 + c * m2};
  }
};

namespace detail {
inline integer cross_check(const NumericalSemigroup& s, integer value, const char* family) {
  const integer generic = half_quotient_frobenius_symmetric(s);
  if (generic != value) {
    throw error(errc::premise_violated,
                std::string(family) + " formula gives " + std::to_string(value) +
                    " but the symmetric formula gives " + std::to_string(generic) + " for " +
                    to_set_notation(s));
  }
  return value;
}
}  // namespace detail

/// f(S/2) for the symmetric three-generated S = <a m1, a m2, b m1 + c m2>:
/// (a (m1 m2 - m1 - m2) + (a - 1)(b m1 + c m2) - x) / 2.
inline integer three_gen_symmetric(const FamilyParameters& p) {
  if (!p.valid()) throw error(errc::premise_violated, "family parameters violate invariants");
  const auto gens = p.generators();
  const auto s = from_generators(GeneratorList({gens[0], gens[1], gens[2]}));
  if (s.is_full() || !is_symmetric(s)) {
    throw error(errc::premise_violated, "constructed semigroup is not symmetric");
  }
  const integer x = detail::least_odd(gens);
  const integer value =
      (p.a * (p.m1 * p.m2 - p.m1 - p.m2) + (p.a - 1) * (p.b * p.m1 + p.c * p.m2) - x) / 2;
  return detail::cross_check(s, value, "three-generator");
}

/// An ordering (n1, n2, n3, n4) of four minimal generators in which
/// c_i n_i lies in the monoid of the two generators other than n_i and
/// n_{i+1} (indices mod 4). This is the relation pattern of four-generated
/// symmetric semigroups that are not complete intersections. The first
/// ordering found starting from the smallest generator is returned.
inline std::optional<std::array<integer, 4>> bresinsky_arrangement(const GeneratorList& gens) {
  if (gens.size() != 4) return std::nullopt;
  std::array<integer, 4> p{gens[0], gens[1], gens[2], gens[3]};
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      const integer target = c_coefficient(p, i) * p[i];
      const std::array<integer, 2> pair{p[(i + 2) % 4], p[(i + 3) % 4]};
      ok = detail::in_monoid(pair, target);
    }
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

/// f(S/2) = (n2 c2 + n3 c3 + n4 r14 - (n1 + n2 + n3 + n4 + x)) / 2 for a
/// four-generated symmetric S that is not a complete intersection, with
/// generators in the given arrangement. The complete-intersection premise is
/// the caller's; a wrong premise or arrangement is caught by comparison with
/// the generic symmetric formula.
inline integer four_gen_symmetric_non_ci(std::span<const integer> gens) {
  if (gens.size() != 4) throw error(errc::premise_violated, "need exactly four generators");
  detail::require_arrangement(gens, 4);
  const auto s = from_generators(GeneratorList(std::vector<integer>(gens.begin(), gens.end())));
  const auto minimal = minimal_generators(s);
  if (minimal.size() != 4) throw error(errc::premise_violated, "generators are not minimal");
  if (!is_symmetric(s)) throw error(errc::premise_violated, "semigroup is not symmetric");
  const integer c2 = c_coefficient(gens, 1);
  const integer c3 = c_coefficient(gens, 2);
  const integer r14 = representation(gens, 0)[3];
  const integer sum = gens[0] + gens[1] + gens[2] + gens[3];
  const integer value =
      (gens[1] * c2 + gens[2] * c3 + gens[3] * r14 - (sum + detail::least_odd(gens))) / 2;
  return detail::cross_check(s, value, "four-generator");
}

/// c_i = d_{i-1} / d_i for the prefix gcds d_i, if the arrangement is free
/// (d_e = 1 and every c_i n_i lies in <n_1, ..., n_{i-1}>). Entry 0 is unused.
inline std::optional<std::vector<integer>> free_coefficients(std::span<const integer> gens) {
  detail::require_arrangement(gens, 1);
  std::vector<integer> c(gens.size(), 0);
  integer prev = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const integer cur = std::gcd(prev, gens[i]);
    c[i] = prev / cur;
    if (!detail::in_monoid(gens.first(i), c[i] * gens[i])) return std::nullopt;
    prev = cur;
  }
  return c;
}

/// f(S/2) = ((c_2 - 1) n_2 + ... + (c_e - 1) n_e - n_1 - x) / 2 for S free
/// for the given arrangement of its minimal generators.
inline integer free_semigroup(std::span<const integer> gens) {
  detail::require_arrangement(gens, 1);
  const auto s = from_generators(GeneratorList(std::vector<integer>(gens.begin(), gens.end())));
  auto sorted = std::vector<integer>(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  const auto minimal = minimal_generators(s);
  if (!std::equal(sorted.begin(), sorted.end(), minimal.begin(), minimal.end())) {
    throw error(errc::premise_violated, "generators are not the minimal generators");
  }
  const auto c = free_coefficients(gens);
  if (!c) throw error(errc::premise_violated, "arrangement is not free");
  integer total = -gens[0] - detail::least_odd(gens);
  for (std::size_t i = 1; i < gens.size(); ++i) total += ((*c)[i] - 1) * gens[i];
  return detail::cross_check(s, total / 2, "free-semigroup");
}

}  // namespace nsgp
