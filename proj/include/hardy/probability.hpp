#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include "hardy/hfset.hpp"

namespace hardy {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with the fraction in lowest terms; integers render as "n/1".
std::string to_string(const Rational& r);

class ProbabilityTriple;

/// Subset of a sample space, as a bitmask over the space's canonical ordering.
class Event {
 public:
  Event() = default;
  /// Throws IndexOutOfRange if any index is >= omega_size.
  static Event from_indices(std::size_t omega_size, const std::vector<std::size_t>& indices);
  static Event none(std::size_t omega_size) { return Event(boost::dynamic_bitset<>(omega_size)); }
  static Event all(std::size_t omega_size) { return Event(~boost::dynamic_bitset<>(omega_size)); }
  /// Low `omega_size` bits of `mask` (omega_size <= 64).
  static Event from_mask(std::size_t omega_size, std::uint64_t mask);

  std::size_t omega_size() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool contains(std::size_t index) const { return index < bits_.size() && bits_.test(index); }
  std::vector<std::size_t> indices() const;
  const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

  bool is_subset_of(const Event& other) const;

  friend bool operator==(const Event&, const Event&) = default;

 private:
  explicit Event(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}
  boost::dynamic_bitset<> bits_;

  friend Event complement(const Event&, const ProbabilityTriple&);
  friend Event union_events(const Event&, const Event&);
  friend Event intersect_events(const Event&, const Event&);
};

/// Finite (Ω, 2^Ω, P). Ω is kept in canonical order; P is given by exact
/// per-point weights that are non-negative and sum to one.
class ProbabilityTriple {
 public:
  /// Weight 1/|Ω| on every point. Throws EmptySampleSpace or DuplicateElement.
  static ProbabilityTriple uniform(std::vector<HfSet> elements);
  /// Arbitrary exact weights. Throws EmptySampleSpace, DuplicateElement or InvalidWeights.
  static ProbabilityTriple weighted(std::vector<HfSet> elements, std::vector<Rational> weights);

  const std::vector<HfSet>& omega() const noexcept { return omega_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return omega_.size(); }
  /// The field is the full power set, so |F| = 2^|Ω|.
  std::size_t field_size_log2() const noexcept { return omega_.size(); }

  std::optional<std::size_t> index_of(const HfSet& point) const;

 private:
  ProbabilityTriple(std::vector<HfSet> omega, std::vector<Rational> weights)
      : omega_(std::move(omega)), weights_(std::move(weights)) {}

  std::vector<HfSet> omega_;
  std::vector<Rational> weights_;
};

ProbabilityTriple uniform_triple(std::vector<HfSet> elements);

/// Index set of the members of `s`. Throws NotAnEvent naming the members not in Ω,
/// or AtomOperand if `s` is an atom.
Event event_from_set(const HfSet& s, const ProbabilityTriple& t);

/// True iff every member of `s` is a sample point of `t`.
bool in_field(const HfSet& s, const ProbabilityTriple& t);

/// Set of sample points selected by `e`.
HfSet event_to_set(const Event& e, const ProbabilityTriple& t);

/// Exact measure. Throws IndexOutOfRange if `e` was built for another space size.
Rational prob(const Event& e, const ProbabilityTriple& t);

Event complement(const Event& e, const ProbabilityTriple& t);
/// Both throw IndexOutOfRange on mismatched space sizes.
Event union_events(const Event& a, const Event& b);
Event intersect_events(const Event& a, const Event& b);

struct ClosureCheck {
  std::size_t checked_count = 0;
  std::size_t failure_count = 0;
  /// First few failing instances, rendered as hex masks.
  std::vector<std::string> failures;
  bool holds() const noexcept { return failure_count == 0; }
};

struct SampledCheck : ClosureCheck {
  std::uint64_t seed = 0;
};

struct AxiomReport {
  std::size_t omega_size = 0;
  bool omega_in_field = false;
  ClosureCheck complement_closure;
  SampledCheck union_closure;
  /// 0 <= P(X) <= 1; exhaustive when |Ω| <= 16, otherwise sampled.
  bool measure_bounds = false;
  std::size_t measure_checked_count = 0;
  bool measure_exhaustive = false;
  bool total_mass_is_one = false;
  /// P(A ∪ B) = P(A) + P(B) for sampled disjoint pairs.
  SampledCheck additivity;

  bool all_pass() const noexcept {
    return omega_in_field && complement_closure.holds() && union_closure.holds() &&
           measure_bounds && total_mass_is_one && additivity.holds();
  }
};

inline constexpr std::size_t kExhaustiveOmegaLimit = 24;
inline constexpr std::size_t kExhaustiveMeasureLimit = 16;

/// Executes the field axioms against `t`: Ω ∈ F and complement closure over all
/// 2^|Ω| events, union closure and additivity on `union_samples` seeded pairs,
/// measure bounds, and P(Ω) = 1. Throws SampleSpaceTooLarge if |Ω| > 24.
AxiomReport verify_axioms(const ProbabilityTriple& t, std::size_t union_samples, std::uint64_t seed);

}  // namespace hardy
