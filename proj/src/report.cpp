#include "hardy/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hardy/notation.hpp"

namespace hardy {

namespace {

using nlohmann::ordered_json;

ordered_json closure_json(const ClosureCheck& c) {
  return ordered_json{{"checked_count", c.checked_count},
                      {"failure_count", c.failure_count},
                      {"failures", c.failures}};
}

ordered_json sampled_json(const SampledCheck& c) {
  ordered_json j = closure_json(c);
  j["seed"] = c.seed;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool ReproductionReport::all_checks_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

ReproductionReport reproduce(const AtomQuadruple& quad, std::size_t depth, std::size_t union_samples,
                             std::uint64_t seed) {
  const HardyModel model = build_model(quad, depth);
  const HardyResult result = hardy_probability(model);
  const quantum::OutcomeDistribution oracle = quantum::run_double_mzi();

  ReproductionReport r;
  for (std::size_t i = 0; i < 4; ++i) r.atoms[i] = quad.atoms()[i].label();
  r.depth = depth;
  r.omega_size = result.omega_size;
  r.field_size_log2 = result.field_size_log2;
  r.c_d_disjoint = model.c_d_disjoint();
  r.annihilated_a = print_set(result.annihilated_a);
  r.annihilated_b = print_set(result.annihilated_b);
  r.joint_set = print_set(result.joint_set);
  r.probability = result.probability;
  r.p_gamma = oracle.p_gamma;
  r.p_dd = oracle.p(quantum::Arm::D, quantum::Arm::D);
  r.agreement = r.probability == Rational(1, 16) && std::abs(r.p_dd - 0.0625) <= quantum::kTolerance;

  const auto check = [&](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back(CheckLine{std::move(name), ok, std::move(detail)});
  };

  if (model.omega_size() <= kExhaustiveOmegaLimit) {
    r.axiom_report = verify_axioms(model.triple, union_samples, seed);
    check("field axioms", r.axiom_report->all_pass());
  }
  const Rational counted(static_cast<std::int64_t>(result.joint_event.count()),
                         static_cast<std::int64_t>(result.omega_size));
  check("P = |joint| / |omega|", result.probability == counted, to_string(counted));
  check("quantum distribution totals 1", std::abs(oracle.total() - 1.0) <= quantum::kTolerance,
        fmt(oracle.total()));

  if (depth == 3) {
    check("|omega| = 16", r.omega_size == 16, std::to_string(r.omega_size));
    check("|F| = 2^16", r.field_size_log2 == 16, "2^" + std::to_string(r.field_size_log2));
    check("C & D = {}", r.c_d_disjoint);
    check("munion A & munion B = D_2(x1)", intersection_identity_check(model), r.joint_set);
    check("P = 1/16", r.probability == Rational(1, 16), to_string(r.probability));
    check("classical and quantum agree", r.agreement);
  }
  return r;
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
  return ordered_json{
      {"omega_size", r.omega_size},
      {"omega_in_field", r.omega_in_field},
      {"complement_closure", closure_json(r.complement_closure)},
      {"union_closure", sampled_json(r.union_closure)},
      {"measure_bounds", r.measure_bounds},
      {"measure_checked_count", r.measure_checked_count},
      {"measure_exhaustive", r.measure_exhaustive},
      {"total_mass_is_one", r.total_mass_is_one},
      {"additivity", sampled_json(r.additivity)},
      {"all_pass", r.all_pass()},
  };
}

nlohmann::ordered_json to_json(const ReproductionReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back(ordered_json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return ordered_json{
      {"atoms", r.atoms},
      {"depth", r.depth},
      {"omega_size", r.omega_size},
      {"field_size_log2", r.field_size_log2},
      {"c_d_disjoint", r.c_d_disjoint},
      {"axiom_report", r.axiom_report ? to_json(*r.axiom_report) : ordered_json(nullptr)},
      {"annihilated_a", r.annihilated_a},
      {"annihilated_b", r.annihilated_b},
      {"joint_set", r.joint_set},
      {"probability", to_string(r.probability)},
      {"quantum", ordered_json{{"p_gamma", r.p_gamma}, {"p_dd", r.p_dd}}},
      {"agreement", r.agreement},
      {"checks", checks},
      {"all_checks_pass", r.all_checks_pass()},
  };
}

nlohmann::ordered_json to_json(const quantum::OutcomeDistribution& d) {
  using quantum::Arm;
  return ordered_json{
      {"p_gamma", d.p_gamma},
      {"p_cc", d.p(Arm::C, Arm::C)},
      {"p_cd", d.p(Arm::C, Arm::D)},
      {"p_dc", d.p(Arm::D, Arm::C)},
      {"p_dd", d.p(Arm::D, Arm::D)},
      {"total", d.total()},
  };
}

std::string render_text(const ReproductionReport& r) {
  std::ostringstream os;
  os << "atoms            (" << r.atoms[0] << ", " << r.atoms[1] << ", " << r.atoms[2] << ", "
     << r.atoms[3] << ")\n"
     << "depth            " << r.depth << "\n"
     << "|omega|          " << r.omega_size << "\n"
     << "|F|              2^" << r.field_size_log2 << "\n"
     << "C & D empty      " << yes_no(r.c_d_disjoint) << "\n";
  if (r.axiom_report) {
    const AxiomReport& a = *r.axiom_report;
    os << "field axioms     " << (a.all_pass() ? "pass" : "FAIL") << " (" << a.complement_closure.checked_count
       << " complements, " << a.union_closure.checked_count << " unions, " << a.additivity.checked_count
       << " additivity pairs, seed " << a.union_closure.seed << ")\n";
  } else {
    os << "field axioms     skipped (|omega| > " << kExhaustiveOmegaLimit << ")\n";
  }
  os << "munion A(x1)     " << r.annihilated_a << "\n"
     << "munion B(x1)     " << r.annihilated_b << "\n"
     << "intersection     " << r.joint_set << "\n"
     << "P(intersection)  " << to_string(r.probability) << "\n"
     << "quantum p(d,d)   " << fmt(r.p_dd) << "\n"
     << "quantum p_gamma  " << fmt(r.p_gamma) << "\n"
     << "agreement        " << yes_no(r.agreement) << "\n";
  for (const auto& c : r.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string render_text(const quantum::OutcomeDistribution& d) {
  using quantum::Arm;
  std::ostringstream os;
  os << "p_gamma  " << fmt(d.p_gamma) << "\n"
     << "p(c,c)   " << fmt(d.p(Arm::C, Arm::C)) << "\n"
     << "p(c,d)   " << fmt(d.p(Arm::C, Arm::D)) << "\n"
     << "p(d,c)   " << fmt(d.p(Arm::D, Arm::C)) << "\n"
     << "p(d,d)   " << fmt(d.p(Arm::D, Arm::D)) << "\n"
     << "total    " << fmt(d.total()) << "\n";
  return os.str();
}

}  // namespace hardy
