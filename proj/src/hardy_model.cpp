#include "hardy/hardy_model.hpp"

#include <algorithm>

#include "hardy/errors.hpp"
#include "hardy/notation.hpp"
#include "hardy/numerals.hpp"

namespace hardy {

namespace {

struct Wings {
  HfSet c_set;
  HfSet d_set;
};

Wings build_wings(const std::array<Atom, 4>& x, std::size_t depth) {
  const auto C = [&](int k) { return von_neumann(depth, NumeralBase(x[static_cast<std::size_t>(k - 1)])); };
  const auto D = [&](int k) { return zermelo(depth, NumeralBase(x[static_cast<std::size_t>(k - 1)])); };
  Wings w;
  w.c_set = unite(unite(C(1), C(2)), unite(D(3), D(4)));
  w.d_set = unite(unite(C(4), C(3)), unite(D(2), D(1)));
  return w;
}

std::string position_name(int k) { return "x" + std::to_string(k); }

}  // namespace

bool is_cyclic_pair(int i, int j) noexcept {
  if (i > j) std::swap(i, j);
  return (j == i + 1) || (i == 1 && j == 4);
}

std::vector<std::pair<int, int>> collisions(const std::array<Atom, 4>& atoms) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      if (atoms[static_cast<std::size_t>(i - 1)] == atoms[static_cast<std::size_t>(j - 1)]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

AtomQuadruple::AtomQuadruple(std::array<Atom, 4> atoms) : atoms_(std::move(atoms)) {
  const auto hits = collisions(atoms_);
  if (hits.empty()) return;
  const auto [i, j] = hits.front();
  const bool cyclic = is_cyclic_pair(i, j);
  std::string message = "NonDistinctAtoms: " + position_name(i) + " and " + position_name(j) +
                        " are both '" + atoms_[static_cast<std::size_t>(i - 1)].label() + "'; ";
  if (cyclic) {
    message += "this violates the stated condition " + position_name(i) + " != " + position_name(j);
  } else {
    message += "the stated conditions x1!=x2, x2!=x3, x3!=x4, x4!=x1 allow this pair, "
               "but the wings C and D then share members";
  }
  throw NonDistinctAtoms(std::move(message), i, j, cyclic);
}

AtomQuadruple AtomQuadruple::from_labels(const std::array<std::string, 4>& labels) {
  return AtomQuadruple({Atom(labels[0]), Atom(labels[1]), Atom(labels[2]), Atom(labels[3])});
}

AtomQuadruple AtomQuadruple::standard() { return from_labels({"x1", "x2", "x3", "x4"}); }

HardyModel build_model(const AtomQuadruple& quad, std::size_t depth) {
  if (depth == 0) throw InvalidDepth("numeral depth must be at least 1");
  const auto& x = quad.atoms();
  Wings wings = build_wings(x, depth);
  const HfSet omega = unite(wings.c_set, wings.d_set);
  const auto points = omega.children();
  return HardyModel{
      x,
      depth,
      std::move(wings.c_set),
      std::move(wings.d_set),
      uniform_triple(std::vector<HfSet>(points.begin(), points.end())),
      von_neumann(depth, NumeralBase(x[0])),
      zermelo(depth, NumeralBase(x[0])),
  };
}

HfSet annihilate(const HfSet& s) { return monadic_union(s); }

HardyResult hardy_probability(const HardyModel& m) {
  HardyResult r;
  r.annihilated_a = annihilate(m.hidden_a);
  r.annihilated_b = annihilate(m.hidden_b);
  r.joint_set = intersect(r.annihilated_a, r.annihilated_b);
  r.joint_event = event_from_set(r.joint_set, m.triple);
  r.probability = prob(r.joint_event, m.triple);
  r.omega_size = m.omega_size();
  r.field_size_log2 = m.triple.field_size_log2();
  return r;
}

bool intersection_identity_check(const HardyModel& m) {
  const HfSet joint = intersect(annihilate(m.hidden_a), annihilate(m.hidden_b));
  return joint == zermelo(2, NumeralBase(m.x(1)));
}

FieldMembership probe_field_membership(const HardyModel& m, const std::string& label,
                                       const HfSet& probe) {
  return FieldMembership{label, print_set(probe), in_field(probe, m.triple)};
}

std::vector<FieldMembership> field_membership_report(const HardyModel& m) {
  std::vector<FieldMembership> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(probe_field_membership(m, "C2(" + position_name(n) + ")",
                                         von_neumann(2, NumeralBase(m.x(n)))));
  }
  for (int n = 1; n <= 4; ++n) {
    out.push_back(probe_field_membership(m, "D2(" + position_name(n) + ")",
                                         zermelo(2, NumeralBase(m.x(n)))));
  }
  const HfSet a = annihilate(m.hidden_a);
  const HfSet b = annihilate(m.hidden_b);
  out.push_back(probe_field_membership(m, "munion(A(x1))", a));
  out.push_back(probe_field_membership(m, "munion(B(x1))", b));
  out.push_back(probe_field_membership(m, "munion(A(x1)) & munion(B(x1))", intersect(a, b)));
  return out;
}

DistinctnessDiagnostic distinctness_diagnostic(const std::array<std::string, 4>& labels,
                                               std::size_t depth) {
  if (depth == 0) throw InvalidDepth("numeral depth must be at least 1");
  const std::array<Atom, 4> atoms{Atom(labels[0]), Atom(labels[1]), Atom(labels[2]), Atom(labels[3])};
  DistinctnessDiagnostic d;
  d.labels = labels;
  d.depth = depth;
  d.collisions = collisions(atoms);
  d.pairwise_distinct = d.collisions.empty();
  d.satisfies_cyclic_conditions =
      std::none_of(d.collisions.begin(), d.collisions.end(),
                   [](const auto& p) { return is_cyclic_pair(p.first, p.second); });
  const Wings wings = build_wings(atoms, depth);
  d.wing_intersection = intersect(wings.c_set, wings.d_set);
  d.wings_disjoint = d.wing_intersection.is_empty();
  d.omega_size = unite(wings.c_set, wings.d_set).cardinality();
  return d;
}

std::vector<DistinctnessDiagnostic> collision_sweep(std::size_t depth) {
  // Restricted growth strings of length 4 enumerate the set partitions.
  std::vector<DistinctnessDiagnostic> out;
  static constexpr std::array<const char*, 4> kNames{"a", "b", "c", "d"};
  std::array<int, 4> block{0, 0, 0, 0};
  for (block[1] = 0; block[1] <= 1; ++block[1]) {
    for (block[2] = 0; block[2] <= 1 + std::max(block[0], block[1]); ++block[2]) {
      const int m2 = std::max({block[0], block[1], block[2]});
      for (block[3] = 0; block[3] <= m2 + 1; ++block[3]) {
        std::array<std::string, 4> labels;
        for (std::size_t i = 0; i < 4; ++i) labels[i] = kNames[static_cast<std::size_t>(block[i])];
        out.push_back(distinctness_diagnostic(labels, depth));
      }
    }
  }
  return out;
}

}  // namespace hardy
