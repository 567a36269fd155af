// Hilbert-style derivations: script format and checker.
//
//   proof <name>
//   premise "<formula>"                      premise list
//   <n>: premise "<formula>"
//   <n>: axiom <ID> key=value ...            ID in A1..LD5
//   <n>: theorem <name> key=value ...        registered theorem
//   <n>: mp <i> <j>                          line j must be (line i -> this)
//   <n>: rb <i> a=<agent>                    this = B[agent] (line i)
//   <n>: rg <i> g=<rational>                 this = (line i >= g)
//   <n>: conj <i> <j>                        this = line i & line j
//   qed <n> ["<formula>"]
//
// Any justified line may end with `=> "<formula>"`, which must equal the
// derived formula. Formula values are quoted; agents and thresholds are bare.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "luka/formula.hpp"
#include "luka/schema.hpp"

namespace luka {

struct PremiseRef {};
struct AxiomRef {
  SchemaId id;
  Substitution subst;
};
struct TheoremRef {
  std::string name;
  Substitution subst;
};
struct ModusPonens {
  int minor;  // φ
  int major;  // φ -> ψ
};
struct NecB {
  int line;
  std::string agent;
};
struct NecG {
  int line;
  Threshold g;
};
/// Conjunction introduction, checked by expansion into conj_intro + two MPs.
struct ConjIntro {
  int left;
  int right;
};

using Justification =
    std::variant<PremiseRef, AxiomRef, TheoremRef, ModusPonens, NecB, NecG, ConjIntro>;

struct ProofLine {
  int index;
  /// Given for premise lines; for other lines an optional assertion.
  std::optional<Formula> formula;
  Justification why;
  int source_line = 0;
};

struct ProofScript {
  std::string name;
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
  int conclusion = 0;
  std::optional<Formula> stated_conclusion;
};

struct ProofIssue {
  int line;  // proof line index, 0 for script-level issues
  std::string reason;
};

struct ProofReport {
  std::vector<ProofIssue> issues;
  /// Derived formula of every line that checked.
  std::map<int, Formula> derived;
  std::optional<Formula> conclusion;

  bool ok() const { return issues.empty(); }
};

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

ProofScript parse_proof(std::string_view text);
ProofScript load_proof(const std::string& path);

ProofReport verify_proof(const ProofScript& script);

}  // namespace luka
