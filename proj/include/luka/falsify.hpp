// Random refutation search: a sound test for non-validity.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "luka/formula.hpp"
#include "luka/model.hpp"

namespace luka {

enum class ModelClass { All, Serial };

struct Counterexample {
  Model model;
  std::string state;
  TruthValue value;
};

/// Evaluates `f` on `budget` random models (up to 6 states, denominators up
/// to 20) over the atoms and agents of `f`, and returns the first state where
/// the value is below 1. Deterministic for a given seed.
std::optional<Counterexample> falsify(const Formula& f, std::size_t budget, ModelClass cls,
                                      std::uint64_t seed = 1);

}  // namespace luka
