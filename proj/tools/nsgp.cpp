// nsgp: command-line front end for the numerical semigroup library.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "nsgp/cli.hpp"

int main(int argc, char** argv) {
  using nsgp::cli::Command;
  using nsgp::cli::CliRequest;

  CLI::App app{"Quotients, multiples and numerical duplication of numerical semigroups"};
  app.require_subcommand(1);

  CliRequest request;
  std::string d_text;
  std::string format = "text";

  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"info", {Command::info, "gaps, genus, Frobenius number, PF, type and symmetry flags"}},
      {"quotient", {Command::quotient, "the quotient S/d"}},
      {"multiple", {Command::multiple, "a d-fold of minimal genus"}},
      {"multiples", {Command::multiples, "all d-folds with Frobenius number <= --f-bound"}},
      {"duplicate", {Command::duplicate, "numerical duplication with the canonical ideal"}},
      {"doubles", {Command::doubles, "symmetric doubles (or the minimal-genus one)"}},
      {"frobenius-quotient", {Command::frobenius_quotient, "closed-form f(S/d) vs direct"}},
      {"verify", {Command::verify, "run a verification suite"}},
  };

  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.second);
    const Command cmd = entry.first;
    sub->callback([&request, cmd] { request.command = cmd; });
    sub->add_option("--gens", request.gens, "generators, e.g. \"6,9,10\"");
    sub->add_option("--set", request.set, "small elements, e.g. \"0,6,9,10,12,14->\"");
    sub->add_option("--d", d_text, "d (verify: comma-separated list)");
    sub->add_option("--b", request.b, "odd element b for duplication");
    sub->add_option("--max-genus", request.max_genus, "genus bound for verify");
    sub->add_option("--f-bound", request.f_bound, "Frobenius bound for multiples / verify");
    sub->add_option("--b-limit", request.b_limit, "largest b listed by doubles");
    sub->add_option("--suite", request.suite, "verification suite name");
    sub->add_flag("--min-genus", request.min_genus, "doubles: only the minimal-genus one");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
    if (!d_text.empty()) request.d = nsgp::cli::parse_int_list(d_text);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const nsgp::error& e) {
    std::cerr << "usage error: --d: " << e.what() << '\n';
    return 2;
  }
  request.format = format == "json" ? nsgp::cli::Format::json : nsgp::cli::Format::text;
  return nsgp::cli::run(request, std::cout, std::cerr);
}
