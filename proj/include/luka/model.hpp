// Finite fuzzy Kripke models and their text format.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "luka/core.hpp"

namespace luka {

class ModelError : public std::runtime_error {
 public:
  ModelError(const std::string& message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

/// States, agents and atoms are kept in declaration order. Accessibility and
/// valuation are total; entries not set explicitly are 0.
///
/// Entries are raw rationals and may lie outside [0,1]; validate_model()
/// reports such entries and the evaluator refuses the model.
class Model {
 public:
  Model() = default;
  Model(std::vector<std::string> states, std::vector<std::string> agents,
        std::vector<std::string> atoms);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return states_.size(); }

  std::optional<std::size_t> state_index(std::string_view name) const;
  std::optional<std::size_t> agent_index(std::string_view name) const;
  std::optional<std::size_t> atom_index(std::string_view name) const;

  const Rational& rel(std::size_t agent, std::size_t from, std::size_t to) const {
    return rel_[(agent * size() + from) * size() + to];
  }
  const Rational& val(std::size_t state, std::size_t atom) const {
    return val_[state * atoms_.size() + atom];
  }
  void set_rel(std::size_t agent, std::size_t from, std::size_t to, Rational v);
  void set_val(std::size_t state, std::size_t atom, Rational v);

  // Name-based convenience accessors; throw ModelError on unknown names.
  const Rational& rel(std::string_view agent, std::string_view from, std::string_view to) const;
  const Rational& val(std::string_view state, std::string_view atom) const;
  void set_rel(std::string_view agent, std::string_view from, std::string_view to, Rational v);
  void set_val(std::string_view state, std::string_view atom, Rational v);

  /// Sub-model on the given states (indices, ascending), with relations and
  /// valuation restricted unchanged.
  Model restrict_to(const std::vector<std::size_t>& keep) const;

  /// Equality of the name-indexed maps; declaration order is irrelevant.
  friend bool operator==(const Model& a, const Model& b);

 private:
  std::vector<std::string> states_;
  std::vector<std::string> agents_;
  std::vector<std::string> atoms_;
  std::vector<Rational> rel_;
  std::vector<Rational> val_;
};

struct ClosureDirectives {
  std::optional<TruthValue> reflexive_degree;
  bool symmetric = false;
};

/// Sets r_a(s,s) to the reflexive degree for every (a,s) not listed in
/// `explicit_diagonal` (pairs of agent/state index), then symmetrizes each
/// relation with the pointwise max of both directions.
void apply_closure(Model& m, const ClosureDirectives& d,
                   const std::vector<std::pair<std::size_t, std::size_t>>& explicit_diagonal = {});

struct ModelViolation {
  std::string message;
};

/// Lists every invariant violation; empty on success.
std::vector<ModelViolation> validate_model(const Model& m);

/// Reads the line-oriented model format and applies closure directives.
Model parse_model(std::string_view text);
Model load_model(const std::string& path);

/// Writes the model with explicit `val` lines for every entry and `rel` lines
/// for every nonzero degree; no closure directives are emitted.
std::string serialize_model(const Model& m);

}  // namespace luka
