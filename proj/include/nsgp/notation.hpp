#pragma once

// Text notations:
//   set form        "0,6,9,10,12,14->"  small elements, the last one is the conductor
//   generator form  "6,9,10"
// Both printers are exact inverses of the parsers on canonical input.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

namespace detail {

struct parsed_list {
  std::vector<integer> values;
  bool arrow = false;
};

// Comma-separated integers, optionally terminated by "->". Spaces around
// numbers are tolerated. Columns in errors are 1-based.
inline parsed_list parse_list(std::string_view text) {
  parsed_list out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw error::at_column("empty input", 1);
  while (true) {
    skip_ws();
    const std::size_t start = i;
    bool negative = false;
    if (i < text.size() && text[i] == '-' && !(i + 1 < text.size() && text[i + 1] == '>')) {
      negative = true;
      ++i;
    }
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw error::at_column("expected an integer", i + 1);
    }
    integer v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > (std::numeric_limits<integer>::max() - 9) / 10) {
        throw error::at_column("integer too large", start + 1);
      }
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    out.values.push_back(negative ? -v : v);
    skip_ws();
    if (i == text.size()) break;
    if (text.substr(i, 2) == "->") {
      out.arrow = true;
      i += 2;
      skip_ws();
      if (i != text.size()) throw error::at_column("unexpected text after '->'", i + 1);
      break;
    }
    if (text[i] != ',') throw error::at_column("expected ',' or '->'", i + 1);
    ++i;
  }
  return out;
}

inline std::string join(std::span<const integer> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

inline std::string to_set_notation(const NumericalSemigroup& s) {
  return detail::join(s.small_elements()) + "->";
}

inline std::string to_generator_notation(const GeneratorList& gens) {
  return detail::join(gens.values());
}

/// Parses "x1,...,xr->" as {x1..xr} U [xr, oo). The list must be strictly
/// increasing.
inline NumericalSemigroup parse_set_notation(std::string_view text) {
  auto list = detail::parse_list(text);
  if (!list.arrow) throw error::at_column("set notation must end with '->'", text.size() + 1);
  for (std::size_t i = 1; i < list.values.size(); ++i) {
    if (list.values[i] <= list.values[i - 1]) {
      throw error(errc::parse_error, "elements must be strictly increasing");
    }
  }
  return from_small_elements(list.values, list.values.back());
}

inline GeneratorList parse_generator_notation(std::string_view text) {
  auto list = detail::parse_list(text);
  if (list.arrow) throw error(errc::parse_error, "generator notation takes no '->'");
  return GeneratorList(std::move(list.values));
}

/// Either notation; a trailing "->" selects the set form.
inline NumericalSemigroup parse_semigroup(std::string_view text) {
  auto list = detail::parse_list(text);
  if (list.arrow) return parse_set_notation(text);
  return from_generators(GeneratorList(std::move(list.values)));
}

}  // namespace nsgp
