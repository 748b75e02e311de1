#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hardy/hfset.hpp"

namespace hardy {

struct RandomSetOptions {
  std::size_t max_rank = 5;
  std::size_t max_breadth = 5;
  std::vector<std::string> atom_pool = {"a", "b", "c", "x1", "x2"};
};

/// Random set-node (never an atom) with rank <= max_rank and at most max_breadth
/// children per node. Deterministic for a given engine state.
HfSet random_set(std::mt19937_64& rng, const RandomSetOptions& options = {});

/// `count` pairwise-distinct labels drawn from a label alphabet of the form
/// <letter><digits>; deterministic for a given engine state.
std::vector<std::string> random_distinct_labels(std::mt19937_64& rng, std::size_t count);

}  // namespace hardy
