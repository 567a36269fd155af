#include "luka/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "luka/formula.hpp"

namespace luka {

ModelError::ModelError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

std::optional<std::size_t> find_name(const std::vector<std::string>& v, std::string_view name) {
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

std::size_t require(std::optional<std::size_t> idx, const char* what, std::string_view name) {
  if (!idx) throw ModelError(std::string("undeclared ") + what + " '" + std::string(name) + "'");
  return *idx;
}

}  // namespace

Model::Model(std::vector<std::string> states, std::vector<std::string> agents,
             std::vector<std::string> atoms)
    : states_(std::move(states)), agents_(std::move(agents)), atoms_(std::move(atoms)) {
  rel_.assign(agents_.size() * states_.size() * states_.size(), Rational(0));
  val_.assign(states_.size() * atoms_.size(), Rational(0));
}

std::optional<std::size_t> Model::state_index(std::string_view name) const {
  return find_name(states_, name);
}
std::optional<std::size_t> Model::agent_index(std::string_view name) const {
  return find_name(agents_, name);
}
std::optional<std::size_t> Model::atom_index(std::string_view name) const {
  return find_name(atoms_, name);
}

void Model::set_rel(std::size_t agent, std::size_t from, std::size_t to, Rational v) {
  v.canonicalize();
  rel_[(agent * size() + from) * size() + to] = std::move(v);
}

void Model::set_val(std::size_t state, std::size_t atom, Rational v) {
  v.canonicalize();
  val_[state * atoms_.size() + atom] = std::move(v);
}

const Rational& Model::rel(std::string_view agent, std::string_view from, std::string_view to) const {
  return rel(require(agent_index(agent), "agent", agent), require(state_index(from), "state", from),
             require(state_index(to), "state", to));
}

const Rational& Model::val(std::string_view state, std::string_view atom) const {
  return val(require(state_index(state), "state", state), require(atom_index(atom), "atom", atom));
}

void Model::set_rel(std::string_view agent, std::string_view from, std::string_view to, Rational v) {
  set_rel(require(agent_index(agent), "agent", agent), require(state_index(from), "state", from),
          require(state_index(to), "state", to), std::move(v));
}

void Model::set_val(std::string_view state, std::string_view atom, Rational v) {
  set_val(require(state_index(state), "state", state), require(atom_index(atom), "atom", atom),
          std::move(v));
}

Model Model::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (auto s : keep) names.push_back(states_.at(s));
  Model out(std::move(names), agents_, atoms_);
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = 0; j < keep.size(); ++j) {
        out.set_rel(a, i, j, rel(a, keep[i], keep[j]));
      }
    }
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t p = 0; p < atoms_.size(); ++p) out.set_val(i, p, val(keep[i], p));
  }
  return out;
}

bool operator==(const Model& a, const Model& b) {
  auto as_set = [](const std::vector<std::string>& v) {
    return std::set<std::string>(v.begin(), v.end());
  };
  if (a.size() != b.size() || as_set(a.states_) != as_set(b.states_) ||
      as_set(a.agents_) != as_set(b.agents_) || as_set(a.atoms_) != as_set(b.atoms_)) {
    return false;
  }
  for (const auto& s : a.states_) {
    for (const auto& p : a.atoms_) {
      if (a.val(s, p) != b.val(s, p)) return false;
    }
    for (const auto& ag : a.agents_) {
      for (const auto& t : a.states_) {
        if (a.rel(ag, s, t) != b.rel(ag, s, t)) return false;
      }
    }
  }
  return true;
}

void apply_closure(Model& m, const ClosureDirectives& d,
                   const std::vector<std::pair<std::size_t, std::size_t>>& explicit_diagonal) {
  const std::size_t n = m.size();
  if (d.reflexive_degree) {
    std::set<std::pair<std::size_t, std::size_t>> fixed(explicit_diagonal.begin(),
                                                        explicit_diagonal.end());
    for (std::size_t a = 0; a < m.agents().size(); ++a) {
      for (std::size_t s = 0; s < n; ++s) {
        if (!fixed.contains({a, s})) m.set_rel(a, s, s, d.reflexive_degree->value());
      }
    }
  }
  if (d.symmetric) {
    for (std::size_t a = 0; a < m.agents().size(); ++a) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
          Rational hi = std::max(m.rel(a, s, t), m.rel(a, t, s));
          m.set_rel(a, s, t, hi);
          m.set_rel(a, t, s, hi);
        }
      }
    }
  }
}

std::vector<ModelViolation> validate_model(const Model& m) {
  std::vector<ModelViolation> out;
  if (m.states().empty()) out.push_back({"model has no states"});
  auto check_names = [&](const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!is_identifier(n)) out.push_back({std::string("invalid ") + what + " name '" + n + "'"});
      if (!seen.insert(n).second) out.push_back({std::string("duplicate ") + what + " '" + n + "'"});
    }
  };
  check_names(m.states(), "state");
  check_names(m.agents(), "agent");
  check_names(m.atoms(), "atom");
  auto in_unit = [](const Rational& r) { return sgn(r) >= 0 && r <= 1; };
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t p = 0; p < m.atoms().size(); ++p) {
      if (!in_unit(m.val(s, p))) {
        out.push_back({"valuation of '" + m.atoms()[p] + "' at '" + m.states()[s] + "' is " +
                       m.val(s, p).get_str() + ", outside [0,1]"});
      }
    }
    for (std::size_t a = 0; a < m.agents().size(); ++a) {
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (!in_unit(m.rel(a, s, t))) {
          out.push_back({"relation of '" + m.agents()[a] + "' from '" + m.states()[s] + "' to '" +
                         m.states()[t] + "' is " + m.rel(a, s, t).get_str() + ", outside [0,1]"});
        }
      }
    }
  }
  return out;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{n, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

Rational unit_value(const std::string& text, int line) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const NumberFormatError& e) {
    throw ModelError(e.what(), line);
  }
  if (r > 1) throw ModelError("value " + text + " outside [0,1]", line);
  return r;
}

}  // namespace

Model parse_model(std::string_view text) {
  std::vector<std::string> states, agents, atoms;
  bool have_states = false, have_agents = false, have_atoms = false;
  ClosureDirectives closure;
  std::vector<Line> entries;

  for (auto& line : split_lines(text)) {
    const std::string& kw = line.words.front();
    auto declare = [&](std::vector<std::string>& into, bool& seen, const char* what) {
      if (seen) throw ModelError(std::string("repeated '") + kw + "' declaration", line.number);
      seen = true;
      std::set<std::string> uniq;
      for (std::size_t i = 1; i < line.words.size(); ++i) {
        const auto& w = line.words[i];
        if (!is_identifier(w) || w == "bot") {
          throw ModelError(std::string("invalid ") + what + " name '" + w + "'", line.number);
        }
        if (!uniq.insert(w).second) {
          throw ModelError(std::string("duplicate ") + what + " '" + w + "'", line.number);
        }
        into.push_back(w);
      }
    };
    if (kw == "agents") {
      declare(agents, have_agents, "agent");
    } else if (kw == "atoms") {
      declare(atoms, have_atoms, "atom");
    } else if (kw == "states") {
      declare(states, have_states, "state");
    } else if (kw == "reflexive") {
      if (line.words.size() != 2) throw ModelError("usage: reflexive <degree>", line.number);
      closure.reflexive_degree = TruthValue(unit_value(line.words[1], line.number));
    } else if (kw == "symmetric") {
      if (line.words.size() != 1) throw ModelError("usage: symmetric", line.number);
      closure.symmetric = true;
    } else if (kw == "val" || kw == "rel") {
      entries.push_back(std::move(line));
    } else {
      throw ModelError("unknown directive '" + kw + "'", line.number);
    }
  }
  if (states.empty()) throw ModelError("model declares no states");

  Model m(states, agents, atoms);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> diagonal;
  for (const auto& line : entries) {
    auto lookup = [&](std::optional<std::size_t> idx, const char* what, const std::string& name) {
      if (!idx) throw ModelError(std::string("undeclared ") + what + " '" + name + "'", line.number);
      return *idx;
    };
    const auto& w = line.words;
    if (w[0] == "val") {
      if (w.size() != 4) throw ModelError("usage: val <state> <atom> <value>", line.number);
      auto s = lookup(m.state_index(w[1]), "state", w[1]);
      auto p = lookup(m.atom_index(w[2]), "atom", w[2]);
      if (!seen.insert({0, s, p}).second) {
        throw ModelError("duplicate val entry for " + w[1] + " " + w[2], line.number);
      }
      m.set_val(s, p, unit_value(w[3], line.number));
    } else {
      if (w.size() != 5) throw ModelError("usage: rel <agent> <state> <state> <value>", line.number);
      auto a = lookup(m.agent_index(w[1]), "agent", w[1]);
      auto s = lookup(m.state_index(w[2]), "state", w[2]);
      auto t = lookup(m.state_index(w[3]), "state", w[3]);
      if (!seen.insert({1, a, s, t}).second) {
        throw ModelError("duplicate rel entry for " + w[1] + " " + w[2] + " " + w[3], line.number);
      }
      m.set_rel(a, s, t, unit_value(w[4], line.number));
      if (s == t) diagonal.emplace_back(a, s);
    }
  }
  apply_closure(m, closure, diagonal);
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  auto list = [&](const char* kw, const std::vector<std::string>& names) {
    out << kw;
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  };
  list("agents", m.agents());
  list("atoms", m.atoms());
  list("states", m.states());
  for (std::size_t s = 0; s < m.size(); ++s) {
    for (std::size_t p = 0; p < m.atoms().size(); ++p) {
      out << "val " << m.states()[s] << ' ' << m.atoms()[p] << ' ' << rational_text(m.val(s, p))
          << '\n';
    }
  }
  for (std::size_t a = 0; a < m.agents().size(); ++a) {
    for (std::size_t s = 0; s < m.size(); ++s) {
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (sgn(m.rel(a, s, t)) != 0) {
          out << "rel " << m.agents()[a] << ' ' << m.states()[s] << ' ' << m.states()[t] << ' '
              << rational_text(m.rel(a, s, t)) << '\n';
        }
      }
    }
  }
  return out.str();
}

}  // namespace luka
