#pragma once

#include <gtest/gtest.h>

#include <vector>

#include "nsgp/error.hpp"
#include "nsgp/notation.hpp"

namespace nsgp::testing {

using V = std::vector<integer>;

inline NumericalSemigroup set(const char* text) { return parse_set_notation(text); }

// Code of the nsgp::error thrown by fn; records a failure if nothing is thrown.
template <class Fn>
errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::invalid_argument;
}

}  // namespace nsgp::testing
