#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/hardy_model.hpp"
#include "hardy/probability.hpp"
#include "hardy/quantum_oracle.hpp"
#include "hardy/suites.hpp"

namespace hardy {

struct ReproductionReport {
  std::array<std::string, 4> atoms;
  std::size_t depth = 3;
  std::size_t omega_size = 0;
  std::size_t field_size_log2 = 0;
  bool c_d_disjoint = false;
  /// Absent when |Ω| exceeds the exhaustive verification limit.
  std::optional<AxiomReport> axiom_report;
  std::string annihilated_a;
  std::string annihilated_b;
  std::string joint_set;
  Rational probability;
  double p_gamma = 0.0;
  double p_dd = 0.0;
  /// Classical probability is exactly 1/16 and the oracle's p(d,d) is within 1e-12 of it.
  bool agreement = false;
  std::vector<CheckLine> checks;

  bool all_checks_pass() const noexcept;
};

/// Builds the model, runs the field axioms, the joint-event probability and the
/// amplitude oracle. The construction's own claims (|Ω| = 16, disjoint wings,
/// the D_2 identity, agreement) are asserted only at depth 3.
ReproductionReport reproduce(const AtomQuadruple& quad, std::size_t depth, std::size_t union_samples,
                             std::uint64_t seed);

nlohmann::ordered_json to_json(const AxiomReport& r);
nlohmann::ordered_json to_json(const ReproductionReport& r);
nlohmann::ordered_json to_json(const quantum::OutcomeDistribution& d);

std::string render_text(const ReproductionReport& r);
std::string render_text(const quantum::OutcomeDistribution& d);

}  // namespace hardy
