#pragma once

// Command layer of the `nsgp` tool. Argument parsing lives in tools/; this
// header turns a parsed request into output and an exit code so it can be
// driven directly from tests.
//
// Every command builds one JSON value; `--format text` renders the same value
// as "key: value" lines, so both formats always carry identical numbers.
//
// Exit codes: 0 success, 1 verification failures, 2 usage/parse/domain errors.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsgp/duplication.hpp"
#include "nsgp/formulas.hpp"
#include "nsgp/ideal.hpp"
#include "nsgp/notation.hpp"
#include "nsgp/oracles.hpp"
#include "nsgp/quotient.hpp"
#include "nsgp/semigroup.hpp"
#include "nsgp/verify.hpp"

namespace nsgp::cli {

enum class Command {
  info,
  quotient,
  multiple,
  multiples,
  duplicate,
  doubles,
  frobenius_quotient,
  verify,
};

enum class Format { text, json };

struct CliRequest {
  Command command = Command::info;
  std::optional<std::string> gens;
  std::optional<std::string> set;
  std::vector<integer> d;
  std::optional<integer> b;
  std::optional<integer> max_genus;
  std::optional<integer> f_bound;
  std::optional<integer> b_limit;
  std::optional<std::string> suite;
  bool min_genus = false;
  Format format = Format::text;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Semigroup as {"small_elements", "frobenius", "genus", "type", "pf", "flags"}.
/// For N, "type" and "pf" are null.
inline nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  nlohmann::json j;
  j["notation"] = to_set_notation(s);
  j["small_elements"] = std::vector<integer>(s.small_elements().begin(), s.small_elements().end());
  j["frobenius"] = s.frobenius();
  j["genus"] = genus(s);
  const auto mg = minimal_generators(s);
  j["minimal_generators"] = std::vector<integer>(mg.begin(), mg.end());
  if (s.is_full()) {
    j["type"] = nullptr;
    j["pf"] = nullptr;
    j["flags"] = nlohmann::json::object();
  } else {
    j["type"] = type_of(s);
    j["pf"] = pseudo_frobenius(s);
    j["flags"] = {{"symmetric", is_symmetric(s)},
                  {"pseudo_symmetric", is_pseudo_symmetric(s)},
                  {"almost_symmetric", is_almost_symmetric(s)}};
  }
  return j;
}

namespace detail {

inline void render_text(std::ostream& out, const nlohmann::json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
      render_text(out, it.value(), key);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
    }
  } else if (j.is_array()) {
    out << prefix << ": ";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << ',';
      if (j[i].is_string()) out << j[i].get<std::string>();
      else out << j[i].dump();
    }
    out << '\n';
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

inline NumericalSemigroup input_semigroup(const CliRequest& r) {
  if (r.gens.has_value() == r.set.has_value()) {
    throw usage_error("exactly one of --gens or --set is required");
  }
  if (r.gens) return from_generators(parse_generator_notation(*r.gens));
  return parse_set_notation(*r.set);
}

inline integer single_d(const CliRequest& r, integer min_d) {
  if (r.d.size() != 1) throw usage_error("exactly one --d value is required");
  if (r.d[0] < min_d) throw usage_error("--d must be at least " + std::to_string(min_d));
  return r.d[0];
}

inline nlohmann::json fold_json(const DFoldReport& rep) {
  return {{"base", to_set_notation(rep.base)},
          {"d", rep.d},
          {"fold", to_set_notation(rep.fold)},
          {"genus", rep.genus_fold},
          {"frobenius", rep.frobenius_fold},
          {"type", rep.type_fold},
          {"is_min_genus", rep.is_min_genus}};
}

inline nlohmann::json double_json(const DoubleReport& rep) {
  return {{"base", to_set_notation(rep.base)},
          {"b", rep.b},
          {"double", to_set_notation(rep.double_semigroup)},
          {"genus", rep.genus_double},
          {"frobenius", rep.frobenius_double}};
}

inline nlohmann::json info(const CliRequest& r) {
  const auto s = input_semigroup(r);
  auto j = semigroup_json(s);
  j["gaps"] = gaps(s);
  j["conductor"] = s.conductor();
  nlohmann::json dsym = nlohmann::json::object();
  std::vector<integer> ds{2, 3, 4, 5, 6};
  for (integer d : r.d) {
    if (d < 1) throw usage_error("--d must be positive");
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end());
  for (integer d : ds) dsym[std::to_string(d)] = is_d_symmetric(s, d);
  j["flags"]["d_symmetric"] = dsym;
  return j;
}

inline nlohmann::json frobenius_quotient(const CliRequest& r) {
  const auto s = input_semigroup(r);
  const integer d = single_d(r, 2);
  const integer direct = quotient(s, d).frobenius();
  nlohmann::json j{{"semigroup", to_set_notation(s)},
                   {"d", d},
                   {"direct", direct},
                   {"x", least_element_congruent_to_frobenius(s, d)},
                   {"formula_value", quotient_frobenius_formula_value(s, d)},
                   {"d_symmetric", is_d_symmetric(s, d)}};
  bool premise = is_d_symmetric(s, d);
  if (!s.is_full() && (is_symmetric(s) || is_pseudo_symmetric(s))) premise = true;
  j["premise_holds"] = premise;
  j["agrees"] = quotient_frobenius_formula_value(s, d) == direct;
  return j;
}

}  // namespace detail

/// Executes a request, writing the result to `out` and diagnostics to `err`.
inline int run(const CliRequest& r, std::ostream& out, std::ostream& err) {
  nlohmann::json result;
  int code = 0;
  try {
    switch (r.command) {
      case Command::info:
        result = detail::info(r);
        break;
      case Command::quotient: {
        const auto s = detail::input_semigroup(r);
        const integer d = detail::single_d(r, 1);
        result = semigroup_json(quotient(s, d));
        result["d"] = d;
        break;
      }
      case Command::multiple: {
        const auto s = detail::input_semigroup(r);
        const integer d = detail::single_d(r, 2);
        result = detail::fold_json(construct_min_genus_dfold(s, d));
        result["min_genus"] = min_genus_dfold_value(s, d);
        const auto [lo, hi] = expected_min_fold_type(s, d);
        result["expected_type"] = {lo, hi};
        break;
      }
      case Command::multiples: {
        const auto s = detail::input_semigroup(r);
        const integer d = detail::single_d(r, 1);
        const integer bound = r.f_bound.value_or(d * s.frobenius());
        nlohmann::json folds = nlohmann::json::array();
        integer best = -1;
        for_each_dfold(s, d, bound, [&](const NumericalSemigroup& t) {
          folds.push_back({{"fold", to_set_notation(t)},
                           {"genus", genus(t)},
                           {"frobenius", t.frobenius()}});
          if (best < 0 || genus(t) < best) best = genus(t);
        });
        result = {{"base", to_set_notation(s)}, {"d", d}, {"f_bound", bound},
                  {"count", folds.size()}, {"min_genus", best}, {"folds", folds}};
        break;
      }
      case Command::duplicate: {
        const auto s = detail::input_semigroup(r);
        if (!r.b) throw usage_error("--b is required");
        const auto k = canonical_ideal(s);
        const auto t = numerical_duplication(s, k, *r.b);
        result = {{"base", to_set_notation(s)},
                  {"ideal", to_ideal_notation(k)},
                  {"b", *r.b},
                  {"double", to_set_notation(t)},
                  {"genus", genus(t)},
                  {"frobenius", t.frobenius()},
                  {"symmetric", !t.is_full() && is_symmetric(t)}};
        break;
      }
      case Command::doubles: {
        const auto s = detail::input_semigroup(r);
        if (r.min_genus) {
          result = detail::double_json(min_genus_symmetric_double(s));
        } else {
          const integer limit = r.b_limit.value_or(s.frobenius() + 2);
          nlohmann::json list = nlohmann::json::array();
          for (const auto& rep : symmetric_doubles(s, limit)) list.push_back(detail::double_json(rep));
          result = {{"base", to_set_notation(s)}, {"b_limit", limit}, {"doubles", list}};
        }
        break;
      }
      case Command::frobenius_quotient:
        result = detail::frobenius_quotient(r);
        break;
      case Command::verify: {
        if (!r.suite) throw usage_error("--suite is required");
        SuiteBounds bounds;
        if (r.max_genus) bounds.max_genus = *r.max_genus;
        bounds.d_values = r.d;
        if (r.f_bound) bounds.max_fold_frobenius = *r.f_bound;
        const auto report = run_suite(*r.suite, bounds);
        result = to_json(report);
        code = report.passed() ? 0 : 1;
        break;
      }
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (r.format == Format::json) {
    out << result.dump(2) << '\n';
  } else {
    detail::render_text(out, result, "");
  }
  return code;
}

/// Parses a comma-separated integer list such as "2,3".
inline std::vector<integer> parse_int_list(const std::string& text) {
  return nsgp::detail::parse_list(text).values;
}

}  // namespace nsgp::cli
