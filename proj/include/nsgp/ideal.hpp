#pragma once

/**
 * @file ideal.hpp
 * @brief Relative ideals of a numerical semigroup and the canonical ideal.
 *
 * A relative ideal E of S is a set of integers with a minimum m such that
 * E + S is contained in E. It is stored as the offset m, the shifts t with
 * m + t in E listed up to a threshold tau, and the rule that every integer
 * >= m + tau belongs to E. The threshold is always minimal, so two ideals of
 * the same semigroup are equal iff their fields are equal.
 *
 * Notation: "m; t1,...,tau->", e.g. the canonical ideal of {0,5,7,8,10,12->}
 * prints as "0; 0,2,5,7,8,9,10,12->".
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsgp/notation.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

class RelativeIdeal {
 public:
  /// S regarded as an ideal of itself.
  explicit RelativeIdeal(NumericalSemigroup ambient)
      : RelativeIdeal(ambient, 0, ambient.conductor(),
                      [&](integer x) { return ambient.contains(x); }) {}

  /// The ideal {x in [lo, hi) : in_set(x)} U [hi, oo) of `ambient`.
  /// Throws if lo is not an element or the set is not closed under adding S.
  template <class Pred>
  RelativeIdeal(NumericalSemigroup ambient, integer lo, integer hi, Pred&& in_set)
      : ambient_(std::move(ambient)), offset_(lo) {
    if (hi < lo) hi = lo;
    detail::check_conductor(hi - lo);
    std::vector<bool> member(static_cast<std::size_t>(hi - lo));
    for (integer x = lo; x < hi; ++x) member[static_cast<std::size_t>(x - lo)] = in_set(x);
    if (hi > lo && !member[0]) {
      throw error(errc::invalid_argument, "offset " + std::to_string(lo) + " is not an element");
    }
    integer tau = hi - lo;
    while (tau > 0 && member[static_cast<std::size_t>(tau - 1)]) --tau;
    member.resize(static_cast<std::size_t>(tau));
    member_ = std::move(member);
    for (integer t = 0; t < tau; ++t) {
      if (member_[static_cast<std::size_t>(t)]) shifts_.push_back(t);
    }
    shifts_.push_back(tau);

    // E + S within E; sums at or past offset + tau are members automatically.
    for (integer t : shifts_) {
      for (integer s = 0; t + s < tau; ++s) {
        if (ambient_.contains(s) && !contains(offset_ + t + s)) {
          throw error(errc::invalid_argument,
                      std::to_string(offset_ + t) + " + " + std::to_string(s) +
                          " escapes the candidate ideal");
        }
      }
    }
  }

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  integer offset() const noexcept { return offset_; }
  integer min() const noexcept { return offset_; }
  integer threshold() const noexcept { return shifts_.back(); }
  std::span<const integer> small_shifts() const noexcept { return shifts_; }
  /// First integer of the infinite tail, offset + tau.
  integer tail_start() const noexcept { return offset_ + shifts_.back(); }

  bool contains(integer x) const noexcept {
    const integer t = x - offset_;
    if (t < 0) return false;
    if (t >= static_cast<integer>(member_.size())) return true;
    return member_[static_cast<std::size_t>(t)];
  }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.ambient_ == b.ambient_ && a.offset_ == b.offset_ && a.shifts_ == b.shifts_;
  }

 private:
  NumericalSemigroup ambient_;
  integer offset_ = 0;
  std::vector<integer> shifts_;
  std::vector<bool> member_;
};

namespace detail {
inline void require_same_ambient(const RelativeIdeal& e, const NumericalSemigroup& s) {
  if (!(e.ambient() == s)) {
    throw error(errc::ambient_mismatch, "ideal belongs to " + to_set_notation(e.ambient()) +
                                            ", not " + to_set_notation(s));
  }
}
}  // namespace detail

/// K = {k : f(S) - k not in S}; its minimum is 0 and its largest non-member
/// is f(S).
inline RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  detail::require_proper(s, "the canonical ideal");
  const integer f = s.frobenius();
  return RelativeIdeal(s, 0, f + 1, [&](integer k) { return !s.contains(f - k); });
}

inline RelativeIdeal translate(const RelativeIdeal& e, integer x) {
  return RelativeIdeal(e.ambient(), e.min() + x, e.tail_start() + x,
                       [&](integer y) { return e.contains(y - x); });
}

/// E + F = {e + f}. Everything from min(E) + tail(F) (or symmetric) on is a
/// member, so only a finite window is scanned.
inline RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  detail::require_same_ambient(f, e.ambient());
  const integer lo = e.min() + f.min();
  const integer hi = std::min(e.min() + f.tail_start(), e.tail_start() + f.min());
  return RelativeIdeal(e.ambient(), lo, hi, [&](integer x) {
    for (integer a = e.min(); a <= x - f.min(); ++a) {
      if (e.contains(a) && f.contains(x - a)) return true;
    }
    return false;
  });
}

/// E = K + x for some integer x.
inline bool is_canonical(const RelativeIdeal& e) {
  if (e.ambient().is_full()) {
    // K is undefined for N; the only translate class is N itself.
    return e.small_shifts().size() == 1 && e.small_shifts()[0] == 0;
  }
  return translate(e, -e.min()) == canonical_ideal(e.ambient());
}

/// First pair (e, f) in lexicographic order with e + f + b outside S, or
/// nothing when E + F + b is contained in S. Only sums below conductor(S)
/// need checking.
inline std::optional<std::pair<integer, integer>> sum_plus_scalar_witness(
    const RelativeIdeal& e, const RelativeIdeal& f, integer b, const NumericalSemigroup& s) {
  detail::require_same_ambient(e, s);
  detail::require_same_ambient(f, s);
  const integer limit = s.conductor() - b;  // e + f < limit may fail
  for (integer x = e.min(); x + f.min() < limit; ++x) {
    if (!e.contains(x)) continue;
    for (integer y = f.min(); x + y < limit; ++y) {
      if (f.contains(y) && !s.contains(x + y + b)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

inline bool sum_plus_scalar_contained(const RelativeIdeal& e, const RelativeIdeal& f, integer b,
                                      const NumericalSemigroup& s) {
  return !sum_plus_scalar_witness(e, f, b, s).has_value();
}

inline std::string to_ideal_notation(const RelativeIdeal& e) {
  return std::to_string(e.offset()) + "; " + detail::join(e.small_shifts()) + "->";
}

/// Parses "m; t1,...,tau->" as an ideal of `ambient`.
inline RelativeIdeal parse_ideal_notation(const NumericalSemigroup& ambient,
                                          std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw error::at_column("expected ';' after offset", 1);
  const auto head = detail::parse_list(text.substr(0, semi));
  if (head.arrow || head.values.size() != 1) throw error::at_column("expected one offset", 1);
  const integer m = head.values[0];
  const auto tail = detail::parse_list(text.substr(semi + 1));
  if (!tail.arrow) throw error::at_column("shift list must end with '->'", text.size() + 1);
  std::vector<bool> listed;
  for (std::size_t i = 0; i < tail.values.size(); ++i) {
    const integer t = tail.values[i];
    if (t < 0 || (i > 0 && t <= tail.values[i - 1])) {
      throw error(errc::parse_error, "shifts must be nonnegative and strictly increasing");
    }
  }
  const integer tau = tail.values.back();
  detail::check_conductor(tau);
  listed.resize(static_cast<std::size_t>(tau));
  for (integer t : tail.values) {
    if (t < tau) listed[static_cast<std::size_t>(t)] = true;
  }
  return RelativeIdeal(ambient, m, m + tau,
                       [&](integer x) { return listed[static_cast<std::size_t>(x - m)]; });
}

}  // namespace nsgp
