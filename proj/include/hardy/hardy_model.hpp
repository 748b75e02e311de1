#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/hfset.hpp"
#include "hardy/probability.hpp"

namespace hardy {

/// The four labels x1..x4 that stand in for the construction's real parameters.
/// Only their pairwise distinctness matters.
class AtomQuadruple {
 public:
  /// Throws NonDistinctAtoms on the first colliding pair (lowest positions first).
  explicit AtomQuadruple(std::array<Atom, 4> atoms);
  static AtomQuadruple from_labels(const std::array<std::string, 4>& labels);
  static AtomQuadruple standard();  // x1, x2, x3, x4

  /// One-based access, 1 <= k <= 4.
  const Atom& x(int k) const { return atoms_.at(static_cast<std::size_t>(k - 1)); }
  const std::array<Atom, 4>& atoms() const noexcept { return atoms_; }

 private:
  std::array<Atom, 4> atoms_;
};

/// True for the position pairs named by the four stated inequalities
/// x1≠x2, x2≠x3, x3≠x4, x4≠x1 (positions are one-based).
bool is_cyclic_pair(int i, int j) noexcept;

/// Every pair (i, j), i < j, of one-based positions whose labels coincide.
std::vector<std::pair<int, int>> collisions(const std::array<Atom, 4>& atoms);

struct HardyModel {
  std::array<Atom, 4> atoms;
  std::size_t depth = 3;
  HfSet c_set;     // C_k(x1) ∪ C_k(x2) ∪ D_k(x3) ∪ D_k(x4)
  HfSet d_set;     // C_k(x4) ∪ C_k(x3) ∪ D_k(x2) ∪ D_k(x1)
  ProbabilityTriple triple;  // uniform over the members of c_set ∪ d_set
  HfSet hidden_a;  // C_k(x1)
  HfSet hidden_b;  // D_k(x1)

  const Atom& x(int k) const { return atoms.at(static_cast<std::size_t>(k - 1)); }
  bool c_d_disjoint() const { return intersect(c_set, d_set).is_empty(); }
  std::size_t omega_size() const noexcept { return triple.size(); }
};

/// Builds both wings, the sample space and the hidden parameters at numeral
/// depth `depth` (the construction uses 3). Throws InvalidDepth for depth 0.
/// Wing disjointness holds only for depth >= 3 and is not enforced here.
HardyModel build_model(const AtomQuadruple& quad, std::size_t depth = 3);

/// Annihilation is the monadic union.
HfSet annihilate(const HfSet& s);

struct HardyResult {
  HfSet annihilated_a;
  HfSet annihilated_b;
  HfSet joint_set;
  Event joint_event;
  Rational probability;
  std::size_t omega_size = 0;
  std::size_t field_size_log2 = 0;
};

/// P(∪[A] ∩ ∪[B]) on the model's uniform triple.
HardyResult hardy_probability(const HardyModel& m);

/// Whether ∪[A] ∩ ∪[B] equals D_2(x1). Only meaningful at depth 3.
bool intersection_identity_check(const HardyModel& m);

struct FieldMembership {
  std::string label;
  std::string set_text;
  bool in_field = false;
};

/// C_2(x_n) and D_2(x_n) for n = 1..4, then ∪[A], ∪[B] and their intersection.
std::vector<FieldMembership> field_membership_report(const HardyModel& m);

/// Field membership for an arbitrary probe set.
FieldMembership probe_field_membership(const HardyModel& m, const std::string& label,
                                       const HfSet& probe);

struct DistinctnessDiagnostic {
  std::array<std::string, 4> labels;
  std::size_t depth = 3;
  std::vector<std::pair<int, int>> collisions;
  bool satisfies_cyclic_conditions = false;  // x1≠x2, x2≠x3, x3≠x4, x4≠x1
  bool pairwise_distinct = false;
  bool wings_disjoint = false;
  HfSet wing_intersection;
  std::size_t omega_size = 0;

  /// Satisfies the four stated inequalities yet the wings overlap.
  bool cyclic_conditions_insufficient() const noexcept {
    return satisfies_cyclic_conditions && !wings_disjoint;
  }
};

/// Builds the wings for possibly colliding labels and reports what breaks.
DistinctnessDiagnostic distinctness_diagnostic(const std::array<std::string, 4>& labels,
                                               std::size_t depth = 3);

/// Diagnostic for every collision pattern of four positions (the 15 set
/// partitions), with labels drawn from a, b, c, d in first-use order.
std::vector<DistinctnessDiagnostic> collision_sweep(std::size_t depth = 3);

}  // namespace hardy
