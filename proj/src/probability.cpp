#include "hardy/probability.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/notation.hpp"

namespace hardy {

namespace {

constexpr std::size_t kMaxRecordedFailures = 16;

void record_failure(ClosureCheck& check, const std::string& what) {
  ++check.failure_count;
  if (check.failures.size() < kMaxRecordedFailures) check.failures.push_back(what);
}

std::string hex(std::uint64_t mask) {
  std::ostringstream os;
  os << "0x" << std::hex << mask;
  return os.str();
}

void require_same_space(const Event& a, const Event& b) {
  if (a.omega_size() != b.omega_size()) {
    throw IndexOutOfRange("events over spaces of size " + std::to_string(a.omega_size()) + " and " +
                          std::to_string(b.omega_size()));
  }
}

void require_valid(const Event& e, const ProbabilityTriple& t) {
  if (e.omega_size() != t.size()) {
    throw IndexOutOfRange("event over a space of size " + std::to_string(e.omega_size()) +
                          " used with a triple of size " + std::to_string(t.size()));
  }
}

// Sorts points (with their weights) canonically and rejects duplicates.
void canonicalize(std::vector<HfSet>& points, std::vector<Rational>& weights) {
  if (points.empty()) throw EmptySampleSpace();
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

  std::vector<HfSet> sorted_points;
  std::vector<Rational> sorted_weights;
  std::vector<std::string> duplicates;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const HfSet& p = points[order[i]];
    if (!sorted_points.empty() && sorted_points.back() == p) {
      const std::string text = print_set(p);
      if (std::find(duplicates.begin(), duplicates.end(), text) == duplicates.end()) {
        duplicates.push_back(text);
      }
      continue;
    }
    sorted_points.push_back(p);
    sorted_weights.push_back(weights[order[i]]);
  }
  if (!duplicates.empty()) throw DuplicateElement(std::move(duplicates));
  points = std::move(sorted_points);
  weights = std::move(sorted_weights);
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Event Event::from_indices(std::size_t omega_size, const std::vector<std::size_t>& indices) {
  boost::dynamic_bitset<> bits(omega_size);
  for (const std::size_t i : indices) {
    if (i >= omega_size) {
      throw IndexOutOfRange("index " + std::to_string(i) + " outside a space of size " +
                            std::to_string(omega_size));
    }
    bits.set(i);
  }
  return Event(std::move(bits));
}

Event Event::from_mask(std::size_t omega_size, std::uint64_t mask) {
  if (omega_size > 64) throw IndexOutOfRange("mask construction limited to 64 points");
  return Event(boost::dynamic_bitset<>(omega_size, static_cast<unsigned long>(mask)));
}

std::vector<std::size_t> Event::indices() const {
  std::vector<std::size_t> out;
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

bool Event::is_subset_of(const Event& other) const {
  require_same_space(*this, other);
  return bits_.is_subset_of(other.bits_);
}

ProbabilityTriple ProbabilityTriple::uniform(std::vector<HfSet> elements) {
  if (elements.empty()) throw EmptySampleSpace();
  std::vector<Rational> weights(elements.size(),
                                Rational(1, static_cast<std::int64_t>(elements.size())));
  canonicalize(elements, weights);
  return ProbabilityTriple(std::move(elements), std::move(weights));
}

ProbabilityTriple ProbabilityTriple::weighted(std::vector<HfSet> elements,
                                              std::vector<Rational> weights) {
  if (elements.size() != weights.size()) {
    throw InvalidWeights("expected one weight per sample point");
  }
  canonicalize(elements, weights);
  Rational total(0);
  for (const auto& w : weights) {
    if (w < Rational(0)) throw InvalidWeights("negative weight " + to_string(w));
    total += w;
  }
  if (total != Rational(1)) throw InvalidWeights("weights sum to " + to_string(total) + ", expected 1/1");
  return ProbabilityTriple(std::move(elements), std::move(weights));
}

std::optional<std::size_t> ProbabilityTriple::index_of(const HfSet& point) const {
  const auto it = std::lower_bound(omega_.begin(), omega_.end(), point);
  if (it == omega_.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - omega_.begin());
}

ProbabilityTriple uniform_triple(std::vector<HfSet> elements) {
  return ProbabilityTriple::uniform(std::move(elements));
}

Event event_from_set(const HfSet& s, const ProbabilityTriple& t) {
  if (s.is_atom()) throw AtomOperand("event_from_set", print_set(s));
  std::vector<std::size_t> indices;
  std::vector<std::string> missing;
  for (const auto& m : s.children()) {
    if (const auto i = t.index_of(m)) {
      indices.push_back(*i);
    } else {
      missing.push_back(print_set(m));
    }
  }
  if (!missing.empty()) throw NotAnEvent(std::move(missing));
  return Event::from_indices(t.size(), indices);
}

bool in_field(const HfSet& s, const ProbabilityTriple& t) {
  if (s.is_atom()) return false;
  const auto kids = s.children();
  return std::all_of(kids.begin(), kids.end(), [&](const HfSet& m) { return t.index_of(m).has_value(); });
}

HfSet event_to_set(const Event& e, const ProbabilityTriple& t) {
  require_valid(e, t);
  std::vector<HfSet> points;
  for (const auto i : e.indices()) points.push_back(t.omega()[i]);
  return HfSet::set_of(std::move(points));
}

Rational prob(const Event& e, const ProbabilityTriple& t) {
  require_valid(e, t);
  Rational total(0);
  const auto& bits = e.bits();
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i)) {
    total += t.weights()[i];
  }
  return total;
}

Event complement(const Event& e, const ProbabilityTriple& t) {
  require_valid(e, t);
  return Event(~e.bits_);
}

Event union_events(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.bits_ | b.bits_);
}

Event intersect_events(const Event& a, const Event& b) {
  require_same_space(a, b);
  return Event(a.bits_ & b.bits_);
}

AxiomReport verify_axioms(const ProbabilityTriple& t, std::size_t union_samples, std::uint64_t seed) {
  const std::size_t n = t.size();
  if (n > kExhaustiveOmegaLimit) throw SampleSpaceTooLarge(n, kExhaustiveOmegaLimit);

  AxiomReport report;
  report.omega_size = n;
  const Event full = Event::all(n);
  const Event none = Event::none(n);
  const std::uint64_t full_mask = (std::uint64_t{1} << n) - 1;

  // (i) Ω is an event: it is the set of all sample points.
  report.omega_in_field = full.count() == n && event_to_set(full, t) == HfSet::set_of(t.omega());

  // (ii) Complement closure, exhaustively.
  for (std::uint64_t mask = 0; mask <= full_mask; ++mask) {
    const Event e = Event::from_mask(n, mask);
    const Event c = complement(e, t);
    ++report.complement_closure.checked_count;
    const bool ok = c.omega_size() == n && intersect_events(e, c) == none &&
                    union_events(e, c) == full && complement(c, t) == e &&
                    c == Event::from_mask(n, ~mask & full_mask);
    if (!ok) record_failure(report.complement_closure, hex(mask));
  }

  // Measure bounds.
  const auto check_bounds = [&](const Event& e) {
    const Rational p = prob(e, t);
    ++report.measure_checked_count;
    return p >= Rational(0) && p <= Rational(1);
  };
  report.measure_bounds = true;
  std::mt19937_64 rng(seed);
  if (n <= kExhaustiveMeasureLimit) {
    report.measure_exhaustive = true;
    for (std::uint64_t mask = 0; mask <= full_mask; ++mask) {
      report.measure_bounds = check_bounds(Event::from_mask(n, mask)) && report.measure_bounds;
    }
  } else {
    for (std::size_t i = 0; i < union_samples; ++i) {
      report.measure_bounds = check_bounds(Event::from_mask(n, rng() & full_mask)) && report.measure_bounds;
    }
  }

  report.total_mass_is_one = prob(full, t) == Rational(1);

  // (iii) Union closure on seeded pairs.
  report.union_closure.seed = seed;
  std::mt19937_64 union_rng(seed);
  for (std::size_t i = 0; i < union_samples; ++i) {
    const std::uint64_t a = union_rng() & full_mask;
    const std::uint64_t b = union_rng() & full_mask;
    const Event u = union_events(Event::from_mask(n, a), Event::from_mask(n, b));
    ++report.union_closure.checked_count;
    if (u.omega_size() != n || u != Event::from_mask(n, a | b)) {
      record_failure(report.union_closure, hex(a) + "|" + hex(b));
    }
  }

  // Finite additivity on seeded disjoint pairs.
  report.additivity.seed = seed;
  std::mt19937_64 add_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < union_samples; ++i) {
    const std::uint64_t a = add_rng() & full_mask;
    const std::uint64_t b = add_rng() & full_mask & ~a;
    const Event ea = Event::from_mask(n, a);
    const Event eb = Event::from_mask(n, b);
    ++report.additivity.checked_count;
    if (prob(union_events(ea, eb), t) != prob(ea, t) + prob(eb, t)) {
      record_failure(report.additivity, hex(a) + "+" + hex(b));
    }
  }
  return report;
}

}  // namespace hardy
