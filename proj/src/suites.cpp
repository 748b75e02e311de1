#include "hardy/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/hardy_model.hpp"
#include "hardy/notation.hpp"
#include "hardy/numerals.hpp"
#include "hardy/probability.hpp"
#include "hardy/quantum_oracle.hpp"
#include "hardy/random_sets.hpp"

namespace hardy {

namespace {

std::string quad_text(const std::array<std::string, 4>& labels) {
  return "(" + labels[0] + "," + labels[1] + "," + labels[2] + "," + labels[3] + ")";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool SuiteResult::passed() const noexcept {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

void SuiteResult::add(std::string check, bool ok, std::string detail) {
  lines.push_back(CheckLine{std::move(check), ok, std::move(detail)});
}

SuiteResult numerals_suite(std::size_t max_depth) {
  SuiteResult suite{"numerals", {}};
  for (const NumeralBase& base : {NumeralBase::empty_set(), NumeralBase(Atom("x1"))}) {
    const std::string b = base.to_string();
    for (std::size_t n = 1; n <= max_depth; ++n) {
      const HfSet c = von_neumann(n, base);
      const HfSet d = zermelo(n, base);
      const std::string at = "n=" + std::to_string(n) + ",base=" + b;
      suite.add("card C_n = n [" + at + "]", c.cardinality() == n, std::to_string(c.cardinality()));
      suite.add("card D_n = 1 [" + at + "]", d.cardinality() == 1, std::to_string(d.cardinality()));
      if (n >= 2 || base.is_empty_set()) {
        const HfSet uc = monadic_union(c);
        const HfSet ud = monadic_union(d);
        suite.add("munion C_n = C_{n-1} [" + at + "]", uc == von_neumann(n - 1, base), print_set(uc));
        suite.add("munion D_n = D_{n-1} [" + at + "]", ud == zermelo(n - 1, base), print_set(ud));
      } else {
        suite.add("munion C_1 = {} [" + at + "]", monadic_union(c).is_empty(), print_set(monadic_union(c)));
        suite.add("munion D_1 = {} [" + at + "]", monadic_union(d).is_empty(), print_set(monadic_union(d)));
      }
      const HfSet cd = intersect(c, d);
      if (n == 1) {
        suite.add("C_1 = D_1 [" + at + "]", c == d, print_set(c));
      } else if (n == 2) {
        suite.add("C_2 != D_2 [" + at + "]", c != d, print_set(c) + " vs " + print_set(d));
        suite.add("C_2 & D_2 = D_2 [" + at + "]", cd == d, print_set(cd));
      } else {
        suite.add("C_n & D_n = {} [" + at + "]", cd.is_empty(), print_set(cd));
      }
    }
  }
  const NumeralBase x(Atom("x")), y(Atom("y"));
  for (std::size_t n = 1; n <= max_depth; ++n) {
    const std::string at = "n=" + std::to_string(n);
    suite.add("C_n(x) & C_n(y) = {} [" + at + "]", intersect(von_neumann(n, x), von_neumann(n, y)).is_empty());
    suite.add("D_n(x) & D_n(y) = {} [" + at + "]", intersect(zermelo(n, x), zermelo(n, y)).is_empty());
  }
  return suite;
}

SuiteResult axioms_suite(std::uint64_t seed, std::size_t samples) {
  SuiteResult suite{"axioms", {}};
  const HardyModel m = build_model(AtomQuadruple::standard(), 3);
  const AxiomReport r = verify_axioms(m.triple, samples, seed);
  const auto first_failure = [](const ClosureCheck& c) {
    return c.failures.empty() ? std::string() : " first failure " + c.failures.front();
  };
  suite.add("omega in F", r.omega_in_field);
  suite.add("complement closure", r.complement_closure.holds(),
            std::to_string(r.complement_closure.checked_count) + " events" + first_failure(r.complement_closure));
  suite.add("union closure", r.union_closure.holds(),
            std::to_string(r.union_closure.checked_count) + " pairs, seed " + std::to_string(seed) +
                first_failure(r.union_closure));
  suite.add("0 <= P(X) <= 1", r.measure_bounds,
            std::to_string(r.measure_checked_count) + (r.measure_exhaustive ? " events (exhaustive)" : " events (sampled)"));
  suite.add("P(omega) = 1", r.total_mass_is_one);
  suite.add("finite additivity", r.additivity.holds(),
            std::to_string(r.additivity.checked_count) + " disjoint pairs, seed " + std::to_string(seed) +
                first_failure(r.additivity));
  suite.add("|F| = 2^16", r.omega_size == 16 && r.complement_closure.checked_count == 65536,
            "2^" + std::to_string(r.omega_size));
  return suite;
}

SuiteResult quadruple_suite(std::uint64_t seed, std::size_t trials) {
  SuiteResult suite{"quadruples", {}};
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  std::string first;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto labels = random_distinct_labels(rng, 4);
    const std::array<std::string, 4> quad{labels[0], labels[1], labels[2], labels[3]};
    const HardyModel m = build_model(AtomQuadruple::from_labels(quad), 3);
    const HardyResult r = hardy_probability(m);
    const bool ok = m.omega_size() == 16 && m.c_d_disjoint() && r.probability == Rational(1, 16) &&
                    intersection_identity_check(m) && is_subset(m.hidden_a, m.c_set) &&
                    is_subset(m.hidden_b, m.d_set) && intersect(m.hidden_a, m.hidden_b).is_empty();
    if (!ok) {
      ++failures;
      if (first.empty()) first = "first failing quadruple " + quad_text(quad);
    }
  }
  suite.add("random quadruples: |omega|=16, C&D={}, identity, P=1/16", failures == 0,
            std::to_string(trials) + " trials, seed " + std::to_string(seed) + ", " +
                std::to_string(failures) + " failures" + (first.empty() ? "" : "; " + first));
  return suite;
}

SuiteResult distinctness_suite() {
  SuiteResult suite{"distinctness", {}};
  for (const DistinctnessDiagnostic& d : collision_sweep(3)) {
    const auto same = [&](int i, int j) {
      return d.labels[static_cast<std::size_t>(i - 1)] == d.labels[static_cast<std::size_t>(j - 1)];
    };
    // The wings overlap exactly when some C-numeral atom of one wing is a
    // C-numeral atom of the other: x1 or x2 against x3 or x4.
    const bool expect_overlap = same(1, 3) || same(1, 4) || same(2, 3) || same(2, 4);
    std::string tag = expect_overlap ? "EXPECTED-NONDISJOINT" : "EXPECTED-DISJOINT";
    if (d.cyclic_conditions_insufficient()) tag += " CYCLIC-CONDITIONS-INSUFFICIENT";
    std::string detail = tag + " cyclic=" + (d.satisfies_cyclic_conditions ? "yes" : "no") +
                         " |omega|=" + std::to_string(d.omega_size) +
                         " C&D=" + print_set(d.wing_intersection);
    suite.add(quad_text(d.labels), d.wings_disjoint == !expect_overlap, std::move(detail));
  }
  const DistinctnessDiagnostic gap = distinctness_diagnostic({"a", "b", "a", "d"}, 3);
  suite.add("(a,b,a,d)", gap.cyclic_conditions_insufficient(),
            "EXPECTED-NONDISJOINT meets x1!=x2, x2!=x3, x3!=x4, x4!=x1 yet C&D=" +
                print_set(gap.wing_intersection));
  return suite;
}

SuiteResult quantum_suite(std::uint64_t seed, std::size_t trials) {
  using namespace quantum;
  SuiteResult suite{"quantum", {}};
  const OutcomeDistribution d = run_double_mzi();
  suite.add("p(d_e,d_p) = 0.0625", std::abs(d.p(Arm::D, Arm::D) - 0.0625) <= kTolerance, fmt(d.p(Arm::D, Arm::D)));
  suite.add("p_gamma = 0.25", std::abs(d.p_gamma - 0.25) <= kTolerance, fmt(d.p_gamma));
  suite.add("total = 1", std::abs(d.total() - 1.0) <= kTolerance, fmt(d.total()));

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const BeamSplitterConvention u = random_unitary(rng);
    QuantumState s = random_state(rng);
    for (const auto particle : {Particle::Electron, Particle::Positron}) {
      s = apply_beam_splitter(s, particle, 1, u);
      worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
    }
    s = apply_annihilation(s);
    worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
    for (const auto particle : {Particle::Electron, Particle::Positron}) {
      s = apply_beam_splitter(s, particle, 2, u);
      worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
    }
    worst = std::max(worst, std::abs(run_double_mzi(u).total() - 1.0));
  }
  suite.add("normalization preserved per stage", worst <= kTolerance,
            std::to_string(trials) + " random states, seed " + std::to_string(seed) + ", max drift " + fmt(worst));
  return suite;
}

SuiteResult depth_suite() {
  SuiteResult suite{"depth", {}};
  const AtomQuadruple quad = AtomQuadruple::standard();
  std::vector<std::size_t> matching;
  for (std::size_t k = 1; k <= 8; ++k) {
    const HardyModel m = build_model(quad, k);
    const HardyResult r = hardy_probability(m);
    const std::string value = to_string(r.probability) + " (|omega|=" + std::to_string(r.omega_size) +
                              ", joint=" + print_set(r.joint_set) + ")";
    const std::string name = "k=" + std::to_string(k);
    if (r.probability == Rational(1, 16)) matching.push_back(k);
    if (k == 1) {
      suite.add(name + ": P = 0", r.probability == Rational(0), value);
    } else if (k == 2) {
      // The singletons {x_i} sit in both wings at this depth, so |omega| = 8.
      suite.add(name + ": P = 1/8", r.probability == Rational(1, 8) && r.omega_size == 8, value);
    } else if (k == 3) {
      suite.add(name + ": P = 1/16", r.probability == Rational(1, 16) && r.omega_size == 16, value);
    } else {
      suite.add(name + ": P = 0", r.probability == Rational(0) && r.omega_size == 4 * k + 4, value);
    }
  }
  suite.add("k=3 is the only depth in 1..8 with P = 1/16", matching == std::vector<std::size_t>{3});
  return suite;
}

SuiteResult algebra_suite(std::uint64_t seed, std::size_t trials) {
  SuiteResult suite{"algebra", {}};
  std::mt19937_64 rng(seed);
  const RandomSetOptions options;
  std::array<std::size_t, 8> failures{};
  std::array<std::string, 8> first;
  const std::array<const char*, 8> names{"commutativity",   "associativity",         "idempotence",
                                         "absorption",      "De Morgan",             "munion {A,B} = A u B",
                                         "print/parse round trip", "print injective"};
  const auto note = [&](std::size_t law, bool ok, const HfSet& a, const HfSet& b) {
    if (ok) return;
    if (failures[law]++ == 0) first[law] = "A=" + print_set(a) + " B=" + print_set(b);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const HfSet a = random_set(rng, options);
    const HfSet b = random_set(rng, options);
    const HfSet c = random_set(rng, options);
    const HfSet universe = unite(unite(a, b), c);
    note(0, unite(a, b) == unite(b, a) && intersect(a, b) == intersect(b, a), a, b);
    note(1, unite(unite(a, b), c) == unite(a, unite(b, c)) &&
                intersect(intersect(a, b), c) == intersect(a, intersect(b, c)), a, b);
    note(2, unite(a, a) == a && intersect(a, a) == a, a, b);
    note(3, unite(a, intersect(a, b)) == a && intersect(a, unite(a, b)) == a, a, b);
    note(4, difference(universe, unite(a, b)) == intersect(difference(universe, a), difference(universe, b)) &&
                difference(universe, intersect(a, b)) == unite(difference(universe, a), difference(universe, b)),
         a, b);
    note(5, monadic_union(HfSet::set_of({a, b})) == unite(a, b), a, b);
    note(6, parse_set(print_set(a)) == a, a, b);
    note(7, (print_set(a) == print_set(b)) == (a == b), a, b);
  }
  for (std::size_t law = 0; law < names.size(); ++law) {
    suite.add(names[law], failures[law] == 0,
              std::to_string(trials) + " triples, seed " + std::to_string(seed) +
                  (first[law].empty() ? "" : "; first failure " + first[law]));
  }
  return suite;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"numerals", "axioms", "quadruples", "distinctness",
                                              "quantum",  "depth",  "algebra"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t trials) {
  if (name == "numerals") return numerals_suite(10);
  if (name == "axioms") return axioms_suite(seed, std::max<std::size_t>(trials, 10000));
  if (name == "quadruples") return quadruple_suite(seed, trials);
  if (name == "distinctness") return distinctness_suite();
  if (name == "quantum") return quantum_suite(seed, trials);
  if (name == "depth") return depth_suite();
  if (name == "algebra") return algebra_suite(seed, trials);
  throw Error("unknown suite '" + name + "'");
}

}  // namespace hardy
