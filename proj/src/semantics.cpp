#include "luka/semantics.hpp"

#include "luka/syntax.hpp"

namespace luka {

namespace {

void require_valid(const Model& m) {
  auto issues = validate_model(m);
  if (!issues.empty()) throw EvaluationError("invalid model: " + issues.front().message);
}

std::size_t state_of(const Model& m, std::string_view s) {
  auto idx = m.state_index(s);
  if (!idx) throw EvaluationError("undeclared state '" + std::string(s) + "'");
  return *idx;
}

void require_announcement_free(const Formula& content) {
  if (!is_announcement_free(content)) {
    throw EvaluationError("announced content must be announcement-free");
  }
}

}  // namespace

Evaluator::Evaluator(const Model& m) : root_(m) { require_valid(m); }

void Evaluator::check_signature(const Formula& f) const {
  for (const auto& p : atoms_of(f)) {
    if (!root_.atom_index(p)) throw EvaluationError("undeclared atom '" + p + "'");
  }
  for (const auto& a : agents_of(f)) {
    if (!root_.agent_index(a)) throw EvaluationError("undeclared agent '" + a + "'");
  }
}

TruthValue Evaluator::evaluate(std::string_view state, const Formula& f) {
  const std::size_t s = state_of(root_, state);
  return evaluate_all(f)[s];
}

const std::vector<TruthValue>& Evaluator::evaluate_all(const Formula& f) {
  check_signature(f);
  retained_.push_back(f);
  return values(root_, f);
}

TruthValue Evaluator::believe(std::string_view state, std::string_view agent, const Formula& f) {
  if (!root_.agent_index(agent)) throw EvaluationError("undeclared agent '" + std::string(agent) + "'");
  const std::size_t s = state_of(root_, state);
  Formula b = Formula::believes(std::string(agent), f);
  return evaluate_all(b)[s];
}

const Model& Evaluator::updated(const Model& m, const Formula& content, const Threshold& g) {
  auto key = std::make_tuple(&m, content.id(), g.value());
  auto it = updates_.find(key);
  if (it != updates_.end()) return *it->second;
  const auto& vals = values(m, content);
  std::vector<std::size_t> keep;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (tv_geq(vals[s], g).is_one()) keep.push_back(s);
  }
  auto [pos, inserted] = updates_.emplace(key, std::make_unique<Model>(m.restrict_to(keep)));
  return *pos->second;
}

const std::vector<TruthValue>& Evaluator::values(const Model& m, const Formula& f) {
  auto key = std::make_pair(&m, f.id());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const std::size_t n = m.size();
  std::vector<TruthValue> out;
  out.reserve(n);
  switch (f.kind()) {
    case Kind::Bottom:
      out.assign(n, TruthValue::zero());
      break;
    case Kind::Atom: {
      const std::size_t p = *m.atom_index(f.name());
      for (std::size_t s = 0; s < n; ++s) out.emplace_back(m.val(s, p));
      break;
    }
    case Kind::Not: {
      const auto& c = values(m, f.child());
      for (std::size_t s = 0; s < n; ++s) out.push_back(tv_neg(c[s]));
      break;
    }
    case Kind::Geq: {
      const auto& c = values(m, f.child());
      for (std::size_t s = 0; s < n; ++s) out.push_back(tv_geq(c[s], f.threshold()));
      break;
    }
    case Kind::Conj:
    case Kind::Impl: {
      const auto& l = values(m, f.left());
      const auto& r = values(m, f.right());
      for (std::size_t s = 0; s < n; ++s) {
        out.push_back(f.kind() == Kind::Conj ? tv_conj(l[s], r[s]) : tv_impl(l[s], r[s]));
      }
      break;
    }
    case Kind::Believes: {
      const std::size_t a = *m.agent_index(f.name());
      const auto& c = values(m, f.child());
      for (std::size_t s = 0; s < n; ++s) {
        TruthValue best = TruthValue::one();
        for (std::size_t t = 0; t < n && !best.is_zero(); ++t) {
          TruthValue term = tv_max(TruthValue(1 - m.rel(a, s, t)), c[t]);
          best = tv_min(best, term);
        }
        out.push_back(std::move(best));
      }
      break;
    }
    case Kind::Announce: {
      const Model& next = updated(m, f.content(), f.threshold());
      const auto& inner = values(next, f.body());
      // Surviving states keep their relative order in the update model.
      std::size_t k = 0;
      const auto& pre = values(m, f.content());
      for (std::size_t s = 0; s < n; ++s) {
        if (tv_geq(pre[s], f.threshold()).is_zero()) {
          out.push_back(TruthValue::one());
        } else {
          out.push_back(inner[k++]);
        }
      }
      break;
    }
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

TruthValue evaluate(const Model& m, std::string_view state, const Formula& f) {
  Evaluator ev(m);
  return ev.evaluate(state, f);
}

TruthValue believe_value(const Model& m, std::string_view state, std::string_view agent,
                         const Formula& f) {
  Evaluator ev(m);
  return ev.believe(state, agent, f);
}

UpdateResult update_model(const Model& m, const Formula& content, const Threshold& g) {
  require_announcement_free(content);
  Evaluator ev(m);
  const auto& vals = ev.evaluate_all(content);
  std::vector<std::size_t> keep;
  UpdateResult out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (tv_geq(vals[s], g).is_one()) {
      keep.push_back(s);
    } else {
      out.removed.push_back(m.states()[s]);
    }
  }
  if (keep.empty()) {
    throw EmptyUpdateError("announcement (" + print_formula(content) + " >= " +
                           rational_text(g.value()) + ") holds at no state");
  }
  out.model = m.restrict_to(keep);
  return out;
}

void extend_trace(UpdateTrace& trace, const Formula& content, const Threshold& g) {
  UpdateResult r = update_model(trace.current(), content, g);
  UpdateStep step{content, g, r.model.states(), std::move(r.removed), std::move(r.model)};
  trace.steps.push_back(std::move(step));
}

UpdateTrace run_announcements(const Model& m, const std::vector<Announcement>& anns) {
  require_valid(m);
  UpdateTrace trace{m, {}};
  for (const auto& [content, g] : anns) extend_trace(trace, content, g);
  return trace;
}

}  // namespace luka
