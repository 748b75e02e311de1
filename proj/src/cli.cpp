#include "hardy/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include "hardy/errors.hpp"
#include "hardy/evaluator.hpp"
#include "hardy/hardy_model.hpp"
#include "hardy/notation.hpp"
#include "hardy/numerals.hpp"
#include "hardy/quantum_oracle.hpp"
#include "hardy/report.hpp"
#include "hardy/suites.hpp"

namespace hardy::cli {

namespace {

struct Options {
  // reproduce
  std::vector<std::string> atoms{"x1", "x2", "x3", "x4"};
  std::size_t depth = 3;
  std::string format = "text";
  std::size_t samples = 10000;
  // eval
  std::string expression;
  // check
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::string suite = "all";
  // numerals
  std::string system;
  std::size_t n = 0;
  std::string base = "\xE2\x88\x85";
};

int cmd_reproduce(const Options& o, std::ostream& out) {
  if (o.atoms.size() != 4) throw CLI::ValidationError("--atoms", "expected exactly four labels");
  const AtomQuadruple quad = AtomQuadruple::from_labels({o.atoms[0], o.atoms[1], o.atoms[2], o.atoms[3]});
  const ReproductionReport report = reproduce(quad, o.depth, o.samples, o.seed);
  if (o.format == "machine") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  return report.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const Options& o, std::ostream& out) {
  out << render(evaluate(o.expression)) << "\n";
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<std::string> names = suite_names();
  if (o.suite != "all") names = {o.suite};
  bool all = true;
  for (const auto& name : names) {
    const SuiteResult suite = run_suite(name, o.seed, o.trials);
    for (const auto& line : suite.lines) {
      out << (line.passed ? "[PASS] " : "[FAIL] ") << suite.name << ": " << line.name;
      if (!line.detail.empty()) out << " -- " << line.detail;
      out << "\n";
    }
    all = all && suite.passed();
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_quantum(const Options& o, std::ostream& out) {
  const auto d = quantum::run_double_mzi();
  if (o.format == "machine") {
    out << to_json(d).dump(2) << "\n";
  } else {
    out << render_text(d);
  }
  return kExitOk;
}

int cmd_numerals(const Options& o, std::ostream& out) {
  NumeralBase base;
  if (o.base != "\xE2\x88\x85" && o.base != "{}") {
    if (!Atom::valid_label(o.base)) throw CLI::ValidationError("--base", "expected an atom label, {} or \xE2\x88\x85");
    base = NumeralBase(Atom(o.base));
  }
  const NumeralSystem system = o.system == "vn" ? NumeralSystem::VonNeumann : NumeralSystem::Zermelo;
  out << print_set(numeral(NumeralSpec{system, o.n, base})) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hereditarily finite set model of Hardy's double interferometer", "hardy"};
  app.require_subcommand(1);
  Options o;

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Rebuild the classical model and report every quantity");
  reproduce_cmd->add_option("--atoms", o.atoms, "Four distinct atom labels")->delimiter(',')->expected(4);
  reproduce_cmd->add_option("--depth", o.depth, "Numeral depth")->check(CLI::Range(1, 64));
  reproduce_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));
  reproduce_cmd->add_option("--seed", o.seed, "Seed for sampled axiom checks");
  reproduce_cmd->add_option("--samples", o.samples, "Sampled union/additivity pairs");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a set expression");
  eval_cmd->add_option("expression", o.expression)->required();

  auto* check_cmd = app.add_subcommand("check", "Run the verification suites");
  check_cmd->add_option("--seed", o.seed);
  check_cmd->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  std::vector<std::string> suites = suite_names();
  suites.emplace_back("all");
  check_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(suites));

  auto* quantum_cmd = app.add_subcommand("quantum", "Amplitude calculation for the double interferometer");
  quantum_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "machine"}));

  auto* numerals_cmd = app.add_subcommand("numerals", "Print a von Neumann or Zermelo numeral");
  numerals_cmd->add_option("--system", o.system)->required()->check(CLI::IsMember({"vn", "zm"}));
  numerals_cmd->add_option("--n", o.n)->required()->check(CLI::Range(0, 4096));
  numerals_cmd->add_option("--base", o.base, "Atom label, {} or the empty-set sign");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (reproduce_cmd->parsed()) return cmd_reproduce(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (quantum_cmd->parsed()) return cmd_quantum(o, out);
    return cmd_numerals(o, out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hardy::cli
