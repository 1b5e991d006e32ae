#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups and their first-order invariants.
 *
 * A numerical semigroup S is an additive submonoid of the naturals with finite
 * complement. It is stored by its conductor c (least integer with [c, oo) in S)
 * and the sorted list of its elements in [0, c]; membership below c is backed
 * by a dense bitmap so `contains` is O(1).
 *
 * Conventions:
 * - f(N) = -1 and conductor(N) = 0.
 * - Quantities that only make sense for S != N (pseudo-Frobenius numbers, the
 *   symmetry predicates) throw `errc::full_semigroup` for N.
 * - Conductors above `conductor_limit()` are rejected. The limit defaults to
 *   2^20 and can be overridden with the environment variable
 *   NSGP_MAX_CONDUCTOR.
 */

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsgp/error.hpp"

namespace nsgp {

inline integer conductor_limit() {
  static const integer limit = [] {
    if (const char* env = std::getenv("NSGP_MAX_CONDUCTOR")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<integer>(v);
    }
    return integer{1} << 20;
  }();
  return limit;
}

/// A sorted, duplicate-free list of positive integers with gcd 1.
/// Need not be a minimal system of generators.
class GeneratorList {
 public:
  explicit GeneratorList(std::vector<integer> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw error(errc::empty_generator_list, "no generators given");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() <= 0) {
      throw error(errc::invalid_argument, "generators must be positive");
    }
    integer g = 0;
    for (integer n : gens_) g = std::gcd(g, n);
    if (g != 1) {
      throw error(errc::non_coprime_generators, "gcd of generators is " + std::to_string(g));
    }
  }
  GeneratorList(std::initializer_list<integer> gens)
      : GeneratorList(std::vector<integer>(gens)) {}

  std::span<const integer> values() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  integer operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const noexcept { return gens_.begin(); }
  auto end() const noexcept { return gens_.end(); }

  friend bool operator==(const GeneratorList&, const GeneratorList&) = default;

 private:
  std::vector<integer> gens_;
};

class NumericalSemigroup;
NumericalSemigroup from_generators(const GeneratorList& gens);
NumericalSemigroup from_small_elements(std::span<const integer> elements, integer conductor);

class NumericalSemigroup {
 public:
  /// The semigroup N of all nonnegative integers.
  NumericalSemigroup() : small_{0} {}

  integer conductor() const noexcept { return conductor_; }
  integer frobenius() const noexcept { return conductor_ - 1; }
  bool is_full() const noexcept { return conductor_ == 0; }

  /// Elements of S in [0, conductor], ascending; the last one is the conductor.
  std::span<const integer> small_elements() const noexcept { return small_; }

  bool contains(integer x) const noexcept {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  /// Least nonzero element.
  integer multiplicity() const noexcept { return small_.size() > 1 ? small_[1] : 1; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.conductor_ == b.conductor_ && a.small_ == b.small_;
  }

 private:
  friend NumericalSemigroup from_generators(const GeneratorList& gens);
  friend NumericalSemigroup from_small_elements(std::span<const integer>, integer);
  template <class Pred>
  friend NumericalSemigroup from_membership(integer bound, Pred&& in_set);

  // `member` covers [0, bound); every integer >= bound is an element.
  static NumericalSemigroup build(std::vector<bool> member) {
    integer c = static_cast<integer>(member.size());
    while (c > 0 && member[static_cast<std::size_t>(c - 1)]) --c;
    member.resize(static_cast<std::size_t>(c));
    NumericalSemigroup s;
    s.conductor_ = c;
    s.small_.clear();
    for (integer x = 0; x < c; ++x) {
      if (member[static_cast<std::size_t>(x)]) s.small_.push_back(x);
    }
    s.small_.push_back(c);
    s.member_ = std::move(member);
    return s;
  }

  integer conductor_ = 0;
  std::vector<integer> small_;
  std::vector<bool> member_;
};

namespace detail {

inline void check_conductor(integer c) {
  if (c > conductor_limit()) {
    throw error(errc::conductor_too_large,
                "conductor " + std::to_string(c) + " exceeds limit " +
                    std::to_string(conductor_limit()));
  }
}

// First pair (a, b), a <= b, of elements below `bound` whose sum is below
// `bound` and not in the set, or nothing when the set is additively closed.
inline std::optional<std::pair<integer, integer>> closure_violation(
    const std::vector<bool>& member) {
  const integer bound = static_cast<integer>(member.size());
  std::vector<integer> elems;
  for (integer x = 1; x < bound; ++x) {
    if (member[static_cast<std::size_t>(x)]) elems.push_back(x);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const integer s = elems[i] + elems[j];
      if (s >= bound) break;
      if (!member[static_cast<std::size_t>(s)]) return std::pair{elems[i], elems[j]};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Builds the semigroup whose elements below `bound` are those accepted by
/// `in_set` and which contains every integer >= bound. Rejects sets that are
/// not closed under addition or miss 0.
template <class Pred>
NumericalSemigroup from_membership(integer bound, Pred&& in_set) {
  if (bound < 0) bound = 0;
  detail::check_conductor(bound);
  std::vector<bool> member(static_cast<std::size_t>(bound));
  for (integer x = 0; x < bound; ++x) member[static_cast<std::size_t>(x)] = in_set(x);
  if (bound > 0 && !member[0]) throw error(errc::missing_zero, "0 must be an element");
  if (auto w = detail::closure_violation(member)) {
    throw error(errc::not_closed_under_addition,
                std::to_string(w->first) + " + " + std::to_string(w->second) + " is not an element",
                *w);
  }
  return NumericalSemigroup::build(std::move(member));
}

/// Additive closure of a generator list.
///
/// Uses shortest paths over residues modulo the least generator m: the
/// distance to residue r is the least element of S congruent to r, so
/// f(S) = max distance - m.
inline NumericalSemigroup from_generators(const GeneratorList& gens) {
  const integer m = gens[0];
  if (m == 1) return NumericalSemigroup{};
  detail::check_conductor(m - 1);

  const integer unreached = std::numeric_limits<integer>::max();
  std::vector<integer> dist(static_cast<std::size_t>(m), unreached);
  dist[0] = 0;
  using entry = std::pair<integer, integer>;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (integer n : gens.values().subspan(1)) {
      const integer nd = d + n;
      const integer nr = nd % m;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  const integer conductor = *std::max_element(dist.begin(), dist.end()) - m + 1;
  detail::check_conductor(conductor);

  std::vector<bool> member(static_cast<std::size_t>(conductor));
  for (integer x = 0; x < conductor; ++x) {
    member[static_cast<std::size_t>(x)] = x >= dist[static_cast<std::size_t>(x % m)];
  }
  return NumericalSemigroup::build(std::move(member));
}

/// Validates the set {elements} U [conductor, oo). Elements at or above the
/// conductor are redundant and ignored; the conductor is lowered to its
/// minimal valid value.
inline NumericalSemigroup from_small_elements(std::span<const integer> elements,
                                              integer conductor) {
  if (conductor < 0) throw error(errc::invalid_argument, "conductor must be nonnegative");
  detail::check_conductor(conductor);
  std::vector<bool> member(static_cast<std::size_t>(conductor));
  for (integer x : elements) {
    if (x < 0) throw error(errc::invalid_argument, "negative element " + std::to_string(x));
    if (x < conductor) member[static_cast<std::size_t>(x)] = true;
  }
  if (conductor > 0 && !member[0]) throw error(errc::missing_zero, "0 must be an element");
  if (auto w = detail::closure_violation(member)) {
    throw error(errc::not_closed_under_addition,
                std::to_string(w->first) + " + " + std::to_string(w->second) + " is not an element",
                *w);
  }
  return NumericalSemigroup::build(std::move(member));
}

inline NumericalSemigroup from_small_elements(std::initializer_list<integer> elements,
                                              integer conductor) {
  return from_small_elements(std::span<const integer>(elements.begin(), elements.size()),
                             conductor);
}

inline bool contains(const NumericalSemigroup& s, integer x) noexcept { return s.contains(x); }

inline std::vector<integer> gaps(const NumericalSemigroup& s) {
  std::vector<integer> out;
  for (integer x = 1; x < s.conductor(); ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return out;
}

inline integer genus(const NumericalSemigroup& s) noexcept {
  return s.conductor() - static_cast<integer>(s.small_elements().size() - 1);
}

inline integer frobenius(const NumericalSemigroup& s) noexcept { return s.frobenius(); }

/// The unique minimal system of generators: nonzero elements that are not a
/// sum of two nonzero elements. All of them lie below conductor + multiplicity.
inline GeneratorList minimal_generators(const NumericalSemigroup& s) {
  if (s.is_full()) return GeneratorList{1};
  const integer m = s.multiplicity();
  const integer limit = s.conductor() + m;
  std::vector<integer> nonzero;
  for (integer x : s.small_elements().subspan(1)) nonzero.push_back(x);
  for (integer x = s.conductor() + 1; x < limit; ++x) nonzero.push_back(x);

  std::vector<integer> gens;
  for (integer n : nonzero) {
    bool decomposable = false;
    for (integer a : nonzero) {
      if (2 * a > n) break;
      if (s.contains(n - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(n);
  }
  return GeneratorList(std::move(gens));
}

/// Least element of S in each residue class modulo n, sorted ascending.
inline std::vector<integer> apery_set(const NumericalSemigroup& s, integer n) {
  if (n <= 0 || !s.contains(n)) {
    throw error(errc::not_an_element, std::to_string(n) + " is not a nonzero element");
  }
  std::vector<integer> least(static_cast<std::size_t>(n), -1);
  integer found = 0;
  for (integer x = 0; found < n; ++x) {
    auto& slot = least[static_cast<std::size_t>(x % n)];
    if (slot < 0 && s.contains(x)) {
      slot = x;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

namespace detail {
inline void require_proper(const NumericalSemigroup& s, const char* what) {
  if (s.is_full()) throw error(errc::full_semigroup, std::string(what) + " is undefined for N");
}
}  // namespace detail

/// Gaps x with x + n in S for every minimal generator n.
inline std::vector<integer> pseudo_frobenius(const NumericalSemigroup& s) {
  detail::require_proper(s, "PF(S)");
  const auto gens = minimal_generators(s);
  std::vector<integer> out;
  for (integer x : gaps(s)) {
    if (std::all_of(gens.begin(), gens.end(), [&](integer n) { return s.contains(x + n); })) {
      out.push_back(x);
    }
  }
  return out;
}

inline integer type_of(const NumericalSemigroup& s) {
  return static_cast<integer>(pseudo_frobenius(s).size());
}

/// L(S): gaps x whose reflection f(S) - x is also a gap.
inline std::vector<integer> l_set(const NumericalSemigroup& s) {
  detail::require_proper(s, "L(S)");
  std::vector<integer> out;
  const integer f = s.frobenius();
  for (integer x : gaps(s)) {
    if (!s.contains(f - x)) out.push_back(x);
  }
  return out;
}

inline bool is_symmetric(const NumericalSemigroup& s) {
  detail::require_proper(s, "symmetry");
  return 2 * genus(s) == s.frobenius() + 1;
}

inline bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  detail::require_proper(s, "pseudo-symmetry");
  const integer f = s.frobenius();
  if (f % 2 != 0) return false;
  for (integer x : gaps(s)) {
    if (2 * x != f && !s.contains(f - x)) return false;
  }
  return true;
}

inline bool is_almost_symmetric(const NumericalSemigroup& s) {
  const auto l = l_set(s);
  const auto pf = pseudo_frobenius(s);
  return std::includes(pf.begin(), pf.end(), l.begin(), l.end());
}

/// For every multiple n of d, n or f(S) - n lies in S. Only multiples in
/// [0, f] can fail, so N is d-symmetric for every d.
inline bool is_d_symmetric(const NumericalSemigroup& s, integer d) {
  if (d < 1) throw error(errc::invalid_argument, "d must be positive");
  const integer f = s.frobenius();
  for (integer n = 0; n <= f; n += d) {
    if (!s.contains(n) && !s.contains(f - n)) return false;
  }
  return true;
}

}  // namespace nsgp
