#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force enumeration and definition-level recomputation.
 *
 * Everything in `nsgp::brute` works from a dense membership table and the
 * textbook definitions; it does not call the invariant algorithms of
 * semigroup.hpp, so agreement between the two is evidence for both.
 * Enumeration is guarded by hard bounds that raise `errc::bound_exceeded`.
 */

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

namespace brute {

/// Dense membership of S on [0, size).
inline std::vector<bool> table(const NumericalSemigroup& s, integer size) {
  std::vector<bool> in(static_cast<std::size_t>(size), true);
  const auto elems = s.small_elements();
  const integer c = elems.back();
  for (integer x = 0; x < std::min(c, size); ++x) in[static_cast<std::size_t>(x)] = false;
  for (integer x : elems) {
    if (x < size) in[static_cast<std::size_t>(x)] = true;
  }
  return in;
}

struct Invariants {
  std::vector<integer> gaps;
  integer genus = 0;
  integer frobenius = -1;
  std::vector<integer> pf;
  integer type = 0;
  std::vector<integer> minimal_generators;
  std::vector<integer> l_set;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool almost_symmetric = false;
};

/// Every invariant straight from its definition.
inline Invariants invariants(const NumericalSemigroup& s) {
  const integer c = s.small_elements().back();
  const integer window = 2 * c + 2 * (s.small_elements().size() > 1 ? s.small_elements()[1] : 1) + 2;
  const auto in = table(s, window);
  auto member = [&](integer x) {
    return x >= 0 && (x >= window || in[static_cast<std::size_t>(x)]);
  };

  Invariants r;
  for (integer x = 0; x < window; ++x) {
    if (!member(x)) r.gaps.push_back(x);
  }
  r.genus = static_cast<integer>(r.gaps.size());
  r.frobenius = r.gaps.empty() ? -1 : r.gaps.back();
  const integer f = r.frobenius;

  // x + s in S for every nonzero element s; s > f - x is automatic.
  for (integer x : r.gaps) {
    bool ok = true;
    for (integer s = 1; s <= f - x && ok; ++s) {
      if (member(s) && !member(x + s)) ok = false;
    }
    if (ok) r.pf.push_back(x);
  }
  r.type = static_cast<integer>(r.pf.size());

  for (integer n = 1; n < window; ++n) {
    if (!member(n)) continue;
    bool sum = false;
    for (integer a = 1; a < n && !sum; ++a) sum = member(a) && member(n - a);
    if (!sum) r.minimal_generators.push_back(n);
  }

  for (integer x : r.gaps) {
    if (!member(f - x)) r.l_set.push_back(x);
  }

  if (f >= 0) {
    r.symmetric = true;
    for (integer x = 0; x <= f; ++x) {
      if (member(x) == member(f - x)) r.symmetric = false;
    }
    r.pseudo_symmetric = f % 2 == 0;
    for (integer x : r.gaps) {
      if (2 * x != f && !member(f - x)) r.pseudo_symmetric = false;
    }
    r.almost_symmetric = std::includes(r.pf.begin(), r.pf.end(), r.l_set.begin(), r.l_set.end());
  }
  return r;
}

/// Largest integer that is not a nonnegative combination of `gens`, by sieve.
inline integer frobenius_of_generators(std::span<const integer> gens) {
  if (gens.empty()) throw error(errc::empty_generator_list, "no generators given");
  const integer lo = *std::min_element(gens.begin(), gens.end());
  const integer hi = *std::max_element(gens.begin(), gens.end());
  // f <= (lo - 1)(hi - 1) - 1 for coprime generators.
  const integer bound = lo * hi + hi;
  if (bound > conductor_limit()) throw error(errc::bound_exceeded, "sieve bound too large");
  std::vector<bool> sum(static_cast<std::size_t>(bound + 1));
  sum[0] = true;
  integer f = -1;
  for (integer x = 1; x <= bound; ++x) {
    for (integer n : gens) {
      if (n <= x && sum[static_cast<std::size_t>(x - n)]) {
        sum[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
    if (!sum[static_cast<std::size_t>(x)]) f = x;
  }
  return f;
}

/// Largest s with d*s outside S, scanning s directly.
inline integer quotient_frobenius(const NumericalSemigroup& s, integer d) {
  const integer c = s.small_elements().back();
  const auto in = table(s, c);
  integer f = -1;
  for (integer q = 0; q * d < c; ++q) {
    if (!in[static_cast<std::size_t>(q * d)]) f = q;
  }
  return f;
}

inline integer genus(const NumericalSemigroup& s) {
  const integer c = s.small_elements().back();
  const auto in = table(s, c);
  return static_cast<integer>(std::count(in.begin(), in.end(), false));
}

}  // namespace brute

inline integer brute_frobenius(const GeneratorList& gens) {
  return brute::frobenius_of_generators(gens.values());
}

inline brute::Invariants brute_invariants(const NumericalSemigroup& s) {
  detail::check_conductor(2 * s.conductor());
  return brute::invariants(s);
}

inline constexpr integer max_enumeration_genus = 20;

/// Depth-first walk of the tree of numerical semigroups of genus <= g_max,
/// starting at N; the children of S are S \ {n} for the minimal generators
/// n > f(S). Each semigroup is visited exactly once.
template <class Visit>
void for_each_by_genus(integer g_max, Visit&& visit) {
  if (g_max > max_enumeration_genus) {
    throw error(errc::bound_exceeded,
                "genus bound " + std::to_string(g_max) + " exceeds " +
                    std::to_string(max_enumeration_genus));
  }
  if (g_max < 0) return;
  std::vector<NumericalSemigroup> stack{NumericalSemigroup{}};
  while (!stack.empty()) {
    NumericalSemigroup s = std::move(stack.back());
    stack.pop_back();
    const integer g = genus(s);
    if (g < g_max) {
      const auto gens = minimal_generators(s);
      // Push in reverse so children are visited by ascending removed generator.
      for (auto it = gens.values().rbegin(); it != gens.values().rend(); ++it) {
        const integer n = *it;
        if (n <= s.frobenius()) continue;
        stack.push_back(from_membership(n + 1, [&](integer x) { return x < n && s.contains(x); }));
      }
    }
    visit(s);
  }
}

inline std::vector<NumericalSemigroup> enumerate_by_genus(integer g_max) {
  std::vector<NumericalSemigroup> out;
  for_each_by_genus(g_max, [&](const NumericalSemigroup& s) { out.push_back(s); });
  return out;
}

/// Gap sets of every numerical semigroup of genus exactly g, found by
/// testing every g-subset of [1, 2g - 1] (the Frobenius number of a genus-g
/// semigroup is at most 2g - 1). Sorted lexicographically.
inline std::vector<std::vector<integer>> gap_sets_by_subset_filter(integer g) {
  if (g > 10) throw error(errc::bound_exceeded, "subset filter is limited to genus 10");
  std::vector<std::vector<integer>> out;
  if (g <= 0) {
    out.push_back({});
    return out;
  }
  const integer n = 2 * g - 1;
  std::vector<integer> pick;
  auto rec = [&](auto&& self, integer next) -> void {
    if (static_cast<integer>(pick.size()) == g) {
      std::vector<bool> gap(static_cast<std::size_t>(n + 1));
      for (integer x : pick) gap[static_cast<std::size_t>(x)] = true;
      for (integer a = 1; a <= n; ++a) {
        if (gap[static_cast<std::size_t>(a)]) continue;
        for (integer b = a; a + b <= n; ++b) {
          if (!gap[static_cast<std::size_t>(b)] && gap[static_cast<std::size_t>(a + b)]) return;
        }
      }
      out.push_back(pick);
      return;
    }
    for (integer x = next; x <= n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr integer max_dfold_free_positions = 22;

/// Visits every T with T/d = S and f(T) <= f_bound exactly once.
///
/// Multiples of d are pinned to d*S; each non-multiple in [1, f_bound] is
/// either kept or made a gap, depth-first in increasing order. A gap is only
/// allowed when no two smaller members sum to it, which is exactly additive
/// closure because every smaller position is already decided.
template <class Visit>
void for_each_dfold(const NumericalSemigroup& s, integer d, integer f_bound, Visit&& visit) {
  if (d < 1) throw error(errc::invalid_argument, "d must be positive");
  if (f_bound < d * s.frobenius()) {
    throw error(errc::bound_too_small,
                "f_bound must be at least d*f(S) = " + std::to_string(d * s.frobenius()));
  }
  if (f_bound - f_bound / d > max_dfold_free_positions) {
    throw error(errc::bound_exceeded, "too many free positions for exhaustive search");
  }
  const integer size = f_bound + 1;
  std::vector<bool> in(static_cast<std::size_t>(size));
  in[0] = true;
  std::vector<integer> members{0};

  auto sum_of_members = [&](integer x) {
    for (integer y : members) {
      if (y == 0) continue;
      if (2 * y > x) break;
      if (in[static_cast<std::size_t>(x - y)]) return true;
    }
    return false;
  };

  auto rec = [&](auto&& self, integer x) -> void {
    if (x == size) {
      visit(from_membership(size, [&](integer y) { return in[static_cast<std::size_t>(y)]; }));
      return;
    }
    auto keep = [&] {
      in[static_cast<std::size_t>(x)] = true;
      members.push_back(x);
      self(self, x + 1);
      members.pop_back();
      in[static_cast<std::size_t>(x)] = false;
    };
    auto drop = [&] {
      if (!sum_of_members(x)) self(self, x + 1);
    };
    if (x % d == 0) {
      if (s.contains(x / d)) keep();
      else drop();
    } else {
      keep();
      drop();
    }
  };
  rec(rec, 1);
}

inline std::vector<NumericalSemigroup> enumerate_dfolds(const NumericalSemigroup& s, integer d,
                                                        integer f_bound) {
  std::vector<NumericalSemigroup> out;
  for_each_dfold(s, d, f_bound, [&](NumericalSemigroup t) { out.push_back(std::move(t)); });
  return out;
}

}  // namespace nsgp
