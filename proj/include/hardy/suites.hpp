#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hardy {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckLine> lines;

  bool passed() const noexcept;
  void add(std::string check, bool ok, std::string detail = {});
};

/// Numeral recurrences, cardinalities and C/D intersections for n = 1..max_depth
/// over the empty base and an atom base.
SuiteResult numerals_suite(std::size_t max_depth = 10);

/// Field axioms on the standard depth-3 triple.
SuiteResult axioms_suite(std::uint64_t seed, std::size_t samples);

/// `trials` random pairwise-distinct quadruples at depth 3.
SuiteResult quadruple_suite(std::uint64_t seed, std::size_t trials);

/// All 15 collision patterns of four positions at depth 3.
SuiteResult distinctness_suite();

/// Amplitude oracle values plus normalization on `trials` random states.
SuiteResult quantum_suite(std::uint64_t seed, std::size_t trials);

/// Joint-event probability for depths 1..8.
SuiteResult depth_suite();

/// Boolean-algebra laws, monadic/binary union agreement and notation round trip.
SuiteResult algebra_suite(std::uint64_t seed, std::size_t trials);

const std::vector<std::string>& suite_names();

/// Throws hardy::Error for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t trials);

}  // namespace hardy
