#include "luka/proof.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "luka/syntax.hpp"

namespace luka {

ProofParseError::ProofParseError(const std::string& message, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Item {
  std::string key;  // empty for positional items
  std::string value;
  bool quoted = false;
};

std::vector<Item> split_items(const std::string& raw, int line) {
  std::vector<Item> out;
  std::size_t i = 0;
  auto read_quoted = [&](std::string& into) {
    ++i;  // opening quote
    auto close = raw.find('"', i);
    if (close == std::string::npos) throw ProofParseError("unterminated string", line);
    into = raw.substr(i, close - i);
    i = close + 1;
  };
  while (i < raw.size()) {
    char c = raw[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    Item item;
    if (c == '"') {
      read_quoted(item.value);
      item.quoted = true;
    } else if (raw.compare(i, 2, "=>") == 0) {
      item.value = "=>";
      i += 2;
    } else {
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '"' &&
             raw[i] != '=') {
        ++i;
      }
      std::string word = raw.substr(start, i - start);
      if (i < raw.size() && raw[i] == '=') {
        if (word.empty()) throw ProofParseError("stray '='", line);
        ++i;
        item.key = word;
        if (i < raw.size() && raw[i] == '"') {
          read_quoted(item.value);
          item.quoted = true;
        } else {
          std::size_t vs = i;
          while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
          item.value = raw.substr(vs, i - vs);
          if (item.value.empty()) throw ProofParseError("empty value for '" + word + "'", line);
        }
      } else {
        item.value = word;
      }
    }
    out.push_back(std::move(item));
  }
  return out;
}

Formula formula_at(const std::string& text, int line) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw ProofParseError("in formula \"" + text + "\": " + e.what(), line);
  }
}

int index_at(const std::string& text, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v <= 0) {
    throw ProofParseError("expected positive line number, got '" + text + "'", line);
  }
  return v;
}

Threshold threshold_at(const std::string& text, int line) {
  try {
    return Threshold(parse_rational(text));
  } catch (const std::exception& e) {
    throw ProofParseError("bad threshold '" + text + "': " + e.what(), line);
  }
}

bool is_threshold_key(const std::string& k) { return k == "g" || k == "g'" || k == "g''"; }

Substitution substitution_at(const std::vector<Item>& items, std::size_t from, int line) {
  Substitution s;
  for (std::size_t i = from; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.key.empty()) throw ProofParseError("expected key=value, got '" + it.value + "'", line);
    bool fresh = true;
    if (is_threshold_key(it.key)) {
      fresh = s.thresholds.emplace(it.key, threshold_at(it.value, line)).second;
    } else if (it.key == "a") {
      fresh = s.agents.emplace(it.key, it.value).second;
    } else {
      if (!it.quoted) throw ProofParseError("formula for '" + it.key + "' must be quoted", line);
      fresh = s.formulas.emplace(it.key, formula_at(it.value, line)).second;
    }
    if (!fresh) throw ProofParseError("metavariable '" + it.key + "' bound twice", line);
  }
  return s;
}

ProofLine parse_step(int index, std::vector<Item> items, int line) {
  ProofLine out{index, std::nullopt, PremiseRef{}, line};
  // Optional trailing assertion.
  if (items.size() >= 2 && items[items.size() - 2].key.empty() &&
      items[items.size() - 2].value == "=>") {
    if (!items.back().quoted) throw ProofParseError("'=>' must be followed by a quoted formula", line);
    out.formula = formula_at(items.back().value, line);
    items.resize(items.size() - 2);
  }
  if (items.empty()) throw ProofParseError("missing justification", line);
  const std::string rule = items[0].value;
  auto need = [&](std::size_t n) {
    if (items.size() != n) throw ProofParseError("wrong number of arguments for '" + rule + "'", line);
  };
  auto keyed = [&](std::size_t i, const char* key) -> const std::string& {
    if (items[i].key != key) throw ProofParseError(std::string("expected ") + key + "=...", line);
    return items[i].value;
  };
  if (rule == "premise") {
    need(2);
    if (out.formula) throw ProofParseError("premise lines state their formula directly", line);
    if (!items[1].quoted) throw ProofParseError("premise formula must be quoted", line);
    out.formula = formula_at(items[1].value, line);
    out.why = PremiseRef{};
  } else if (rule == "axiom") {
    if (items.size() < 2) throw ProofParseError("axiom needs a schema id", line);
    auto id = schema_from_name(items[1].value);
    if (!id) throw ProofParseError("unknown axiom schema '" + items[1].value + "'", line);
    out.why = AxiomRef{*id, substitution_at(items, 2, line)};
  } else if (rule == "theorem") {
    if (items.size() < 2) throw ProofParseError("theorem needs a name", line);
    out.why = TheoremRef{items[1].value, substitution_at(items, 2, line)};
  } else if (rule == "mp") {
    need(3);
    out.why = ModusPonens{index_at(items[1].value, line), index_at(items[2].value, line)};
  } else if (rule == "conj") {
    need(3);
    out.why = ConjIntro{index_at(items[1].value, line), index_at(items[2].value, line)};
  } else if (rule == "rb") {
    need(3);
    out.why = NecB{index_at(items[1].value, line), keyed(2, "a")};
  } else if (rule == "rg") {
    need(3);
    out.why = NecG{index_at(items[1].value, line), threshold_at(keyed(2, "g"), line)};
  } else {
    throw ProofParseError("unknown rule '" + rule + "'", line);
  }
  return out;
}

}  // namespace

ProofScript parse_proof(std::string_view text) {
  ProofScript script;
  bool have_name = false;
  bool have_qed = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto items = split_items(raw, n);
    if (items.empty()) continue;
    if (have_qed) throw ProofParseError("content after qed", n);
    const Item& head = items[0];
    if (head.quoted || !head.key.empty()) throw ProofParseError("unexpected item", n);
    if (head.value == "proof") {
      if (have_name || items.size() != 2) throw ProofParseError("expected 'proof <name>' once", n);
      script.name = items[1].value;
      have_name = true;
    } else if (head.value == "premise") {
      if (!script.lines.empty()) throw ProofParseError("premise list must precede proof lines", n);
      if (items.size() != 2 || !items[1].quoted) throw ProofParseError("expected premise \"...\"", n);
      script.premises.push_back(formula_at(items[1].value, n));
    } else if (head.value == "qed") {
      if (items.size() < 2 || items.size() > 3) throw ProofParseError("expected qed <n> [\"...\"]", n);
      script.conclusion = index_at(items[1].value, n);
      if (items.size() == 3) {
        if (!items[2].quoted) throw ProofParseError("conclusion formula must be quoted", n);
        script.stated_conclusion = formula_at(items[2].value, n);
      }
      have_qed = true;
    } else if (head.value.size() > 1 && head.value.back() == ':') {
      int index = index_at(head.value.substr(0, head.value.size() - 1), n);
      items.erase(items.begin());
      script.lines.push_back(parse_step(index, std::move(items), n));
    } else {
      throw ProofParseError("unrecognized line '" + head.value + "'", n);
    }
  }
  if (!have_name) throw ProofParseError("missing 'proof <name>' header", 1);
  if (!have_qed) throw ProofParseError("missing qed", n);
  return script;
}

ProofScript load_proof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofParseError("cannot open proof file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof(buf.str());
}

namespace {

class Checker {
 public:
  explicit Checker(const ProofScript& s) : script_(s) {}

  ProofReport run() {
    int last = 0;
    for (const auto& line : script_.lines) {
      if (line.index <= last) {
        issue(line.index, "line numbers must be strictly increasing");
        continue;
      }
      last = line.index;
      current_ = line.index;
      std::optional<Formula> got = derive(line);
      if (got && line.formula && !(*got == *line.formula)) {
        issue(line.index, "derived " + print_formula(*got) + " but line states " +
                              print_formula(*line.formula));
        got.reset();
      }
      if (got) report_.derived.emplace(line.index, *got);
    }
    auto it = report_.derived.find(script_.conclusion);
    if (it == report_.derived.end()) {
      issue(0, "conclusion line " + std::to_string(script_.conclusion) + " is not a checked line");
    } else {
      report_.conclusion = it->second;
      if (script_.stated_conclusion && !(*script_.stated_conclusion == it->second)) {
        issue(0, "conclusion is " + print_formula(it->second) + ", script states " +
                     print_formula(*script_.stated_conclusion));
      }
    }
    return std::move(report_);
  }

 private:
  void issue(int line, std::string reason) { report_.issues.push_back({line, std::move(reason)}); }

  std::optional<Formula> cited(int i) {
    if (i >= current_) {
      issue(current_, "cites line " + std::to_string(i) + ", which is not earlier");
      return std::nullopt;
    }
    auto it = report_.derived.find(i);
    if (it == report_.derived.end()) {
      issue(current_, "cites line " + std::to_string(i) + ", which is missing or invalid");
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Formula> modus_ponens(const Formula& minor, const Formula& major,
                                      const std::string& where) {
    if (major.kind() != Kind::Impl) {
      issue(current_, where + "major premise " + print_formula(major) + " is not an implication");
      return std::nullopt;
    }
    if (!(major.left() == minor)) {
      issue(current_, where + "antecedent of " + print_formula(major) + " does not match " +
                          print_formula(minor));
      return std::nullopt;
    }
    return major.right();
  }

  std::optional<Formula> derive(const ProofLine& line) {
    return std::visit([&](const auto& j) { return derive(line, j); }, line.why);
  }

  std::optional<Formula> derive(const ProofLine& line, const PremiseRef&) {
    if (!line.formula) {
      issue(line.index, "premise line without formula");
      return std::nullopt;
    }
    const auto& ps = script_.premises;
    if (std::find(ps.begin(), ps.end(), *line.formula) == ps.end()) {
      issue(line.index, print_formula(*line.formula) + " is not a declared premise");
      return std::nullopt;
    }
    return line.formula;
  }

  std::optional<Formula> derive(const ProofLine& line, const AxiomRef& a) {
    try {
      return instantiate_schema(a.id, a.subst);
    } catch (const SchemaError& e) {
      issue(line.index, e.what());
      return std::nullopt;
    }
  }

  std::optional<Formula> derive(const ProofLine& line, const TheoremRef& t) {
    try {
      return instantiate_theorem(t.name, t.subst);
    } catch (const SchemaError& e) {
      issue(line.index, e.what());
      return std::nullopt;
    }
  }

  std::optional<Formula> derive(const ProofLine&, const ModusPonens& mp) {
    auto minor = cited(mp.minor);
    auto major = cited(mp.major);
    if (!minor || !major) return std::nullopt;
    return modus_ponens(*minor, *major, "mp: ");
  }

  std::optional<Formula> derive(const ProofLine& line, const NecB& rb) {
    auto f = cited(rb.line);
    if (!f) return std::nullopt;
    if (!is_identifier(rb.agent)) {
      issue(line.index, "invalid agent '" + rb.agent + "'");
      return std::nullopt;
    }
    return Formula::believes(rb.agent, *f);
  }

  std::optional<Formula> derive(const ProofLine&, const NecG& rg) {
    auto f = cited(rg.line);
    if (!f) return std::nullopt;
    return Formula::geq(*f, rg.g);
  }

  // φ, ψ ⊢ φ & ψ via conj_intro: φ -> (ψ -> (φ & ψ)), then MP twice.
  std::optional<Formula> derive(const ProofLine&, const ConjIntro& c) {
    auto l = cited(c.left);
    auto r = cited(c.right);
    if (!l || !r) return std::nullopt;
    Substitution s;
    s.formulas.emplace("phi", *l);
    s.formulas.emplace("psi", *r);
    Formula theorem = instantiate_theorem("conj_intro", s);
    auto step = modus_ponens(*l, theorem, "conj expansion: ");
    if (!step) return std::nullopt;
    return modus_ponens(*r, *step, "conj expansion: ");
  }

  const ProofScript& script_;
  ProofReport report_;
  int current_ = 0;
};

}  // namespace

ProofReport verify_proof(const ProofScript& script) { return Checker(script).run(); }

}  // namespace luka
