#include "hardy/random_sets.hpp"

#include <algorithm>

namespace hardy {

namespace {

// uniform_int_distribution output is implementation-defined; a plain modulo keeps
// generated sets identical across standard libraries.
std::size_t below(std::mt19937_64& rng, std::size_t bound) {
  return bound == 0 ? 0 : static_cast<std::size_t>(rng() % bound);
}

HfSet random_node(std::mt19937_64& rng, const RandomSetOptions& options, std::size_t rank_budget) {
  if (rank_budget == 0) return HfSet::empty();
  const std::size_t breadth = below(rng, options.max_breadth + 1);
  std::vector<HfSet> children;
  children.reserve(breadth);
  for (std::size_t i = 0; i < breadth; ++i) {
    const bool want_atom = !options.atom_pool.empty() && below(rng, 3) == 0;
    if (want_atom) {
      children.emplace_back(Atom(options.atom_pool[below(rng, options.atom_pool.size())]));
    } else {
      children.push_back(random_node(rng, options, below(rng, rank_budget)));
    }
  }
  return HfSet::set_of(std::move(children));
}

}  // namespace

HfSet random_set(std::mt19937_64& rng, const RandomSetOptions& options) {
  return random_node(rng, options, options.max_rank);
}

std::vector<std::string> random_distinct_labels(std::mt19937_64& rng, std::size_t count) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::vector<std::string> labels;
  while (labels.size() < count) {
    std::string label(1, kLetters[below(rng, kLetters.size())]);
    label += std::to_string(below(rng, 1000));
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
  }
  return labels;
}

}  // namespace hardy
