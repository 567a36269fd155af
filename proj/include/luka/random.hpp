// Seeded generators for models, formulas and thresholds.
#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "luka/formula.hpp"
#include "luka/model.hpp"

namespace luka {

using Rng = std::mt19937_64;

struct ModelShape {
  std::size_t max_states = 6;
  unsigned max_denominator = 20;
  /// Forces r_a(s,s) = 1 for every agent and state.
  bool serial = false;
};

struct FormulaShape {
  std::size_t max_depth = 4;
  std::vector<std::string> atoms{"p", "q", "r"};
  std::vector<std::string> agents{"a", "b"};
  bool announcements = true;
  unsigned max_denominator = 20;
};

/// Rational k/d with 1 <= d <= max_denominator, biased towards 0 and 1.
Rational random_unit(Rng& rng, unsigned max_denominator);
Threshold random_threshold(Rng& rng, unsigned max_denominator = 20);

/// Model with between 1 and shape.max_states states, over the given agents
/// and atoms.
Model random_model(Rng& rng, const std::vector<std::string>& agents,
                   const std::vector<std::string>& atoms, const ModelShape& shape = {});

/// Random formula of depth at most shape.max_depth. Announcement contents
/// are always announcement-free.
Formula random_formula(Rng& rng, const FormulaShape& shape);

}  // namespace luka
