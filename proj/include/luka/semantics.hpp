// Valuation of formulas on finite models, and public-announcement updates.
#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "luka/formula.hpp"
#include "luka/model.hpp"

namespace luka {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an announcement holds at no state of the model it updates.
class EmptyUpdateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UpdateResult {
  Model model;
  std::vector<std::string> removed;
};

/// One evaluation context over a fixed model. Values are memoized per
/// (model, formula node); every update model built during evaluation is owned
/// by the context and gets its own cache entries.
///
/// The model must outlive the evaluator. Formulas passed in are retained for
/// the evaluator's lifetime.
class Evaluator {
 public:
  explicit Evaluator(const Model& m);

  const Model& model() const { return root_; }

  TruthValue evaluate(std::string_view state, const Formula& f);
  /// Values of `f` at every state, in state order.
  const std::vector<TruthValue>& evaluate_all(const Formula& f);
  TruthValue believe(std::string_view state, std::string_view agent, const Formula& f);

 private:
  const std::vector<TruthValue>& values(const Model& m, const Formula& f);
  const Model& updated(const Model& m, const Formula& content, const Threshold& g);
  void check_signature(const Formula& f) const;

  const Model& root_;
  std::vector<Formula> retained_;
  std::map<std::pair<const Model*, const void*>, std::vector<TruthValue>> memo_;
  std::map<std::tuple<const Model*, const void*, Rational>, std::unique_ptr<Model>> updates_;
};

TruthValue evaluate(const Model& m, std::string_view state, const Formula& f);

/// min over s' of max(1 - r_a(s,s'), V_{s'}(f)).
TruthValue believe_value(const Model& m, std::string_view state, std::string_view agent,
                         const Formula& f);

/// Restricts `m` to the states where `content >= g` holds. Throws
/// EmptyUpdateError when no state survives.
UpdateResult update_model(const Model& m, const Formula& content, const Threshold& g);

struct UpdateStep {
  Formula content;
  Threshold threshold;
  std::vector<std::string> surviving;
  std::vector<std::string> removed;
  Model model;
};

struct UpdateTrace {
  Model initial;
  std::vector<UpdateStep> steps;

  const Model& current() const { return steps.empty() ? initial : steps.back().model; }
  /// Number of models in the trace, the initial one included.
  std::size_t length() const { return steps.size() + 1; }
};

using Announcement = std::pair<Formula, Threshold>;

UpdateTrace run_announcements(const Model& m, const std::vector<Announcement>& anns);

/// Applies one more announcement to the trace; on EmptyUpdateError the trace
/// is left unchanged.
void extend_trace(UpdateTrace& trace, const Formula& content, const Threshold& g);

}  // namespace luka
