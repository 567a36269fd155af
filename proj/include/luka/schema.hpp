// Axiom schemata of the doxastic and dynamic Łukasiewicz calculi, and the
// registry of named propositional theorems that stands in for the
// "all tautologies" schema.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "luka/formula.hpp"

namespace luka {

enum class SchemaId { A1, A2, L0, L1, L2, LB1, LB2, LG0, LG1, LD1, LD2, LD3, LD4, LD5 };

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bindings for schema metavariables. Formula slots are named
/// phi/psi/chi/phi1/psi1/phi2/psi2 (and `p`, which must be bound to an atom),
/// the agent slot is `a`, threshold slots are g, g', g''.
struct Substitution {
  std::map<std::string, Formula> formulas;
  std::map<std::string, std::string> agents;
  std::map<std::string, Threshold> thresholds;
};

struct Schema {
  std::string name;
  std::vector<std::string> formula_vars;
  std::vector<std::string> agent_vars;
  std::vector<std::string> threshold_vars;
  std::function<Formula(const Substitution&)> build;
  /// Returns an error message when the side condition fails.
  std::function<std::optional<std::string>(const Substitution&)> side_condition;
};

const std::vector<SchemaId>& all_schema_ids();
std::string_view schema_name(SchemaId id);
std::optional<SchemaId> schema_from_name(std::string_view name);
const Schema& axiom_schema(SchemaId id);

/// Registered theorems of propositional Łukasiewicz logic.
const std::map<std::string, Schema, std::less<>>& theorem_registry();

/// Fills in `schema` after checking that `subst` binds exactly its
/// metavariables and satisfies its side condition.
Formula instantiate(const Schema& schema, const Substitution& subst);
Formula instantiate_schema(SchemaId id, const Substitution& subst);
Formula instantiate_theorem(std::string_view name, const Substitution& subst);

}  // namespace luka
