#include "luka/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace luka {

struct Formula::Node {
  Kind kind;
  std::string name;
  std::optional<Threshold> g;
  std::optional<Formula> a;
  std::optional<Formula> b;
};

namespace {

void require_identifier(const std::string& s, const char* what) {
  if (!is_identifier(s)) {
    throw FormulaError(std::string("invalid ") + what + " name '" + s + "'");
  }
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

Formula Formula::bottom() {
  static const Formula kBottom(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}, {}}));
  return kBottom;
}

Formula Formula::atom(std::string name) {
  require_identifier(name, "atom");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, std::move(f), {}}));
}

Formula Formula::geq(Formula f, Threshold g) {
  return Formula(std::make_shared<const Node>(Node{Kind::Geq, {}, std::move(g), std::move(f), {}}));
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Conj, {}, {}, std::move(l), std::move(r)}));
}

Formula Formula::impl(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{Kind::Impl, {}, {}, std::move(l), std::move(r)}));
}

Formula Formula::believes(std::string agent, Formula f) {
  require_identifier(agent, "agent");
  return Formula(std::make_shared<const Node>(
      Node{Kind::Believes, std::move(agent), {}, std::move(f), {}}));
}

Formula Formula::announce(Formula content, Threshold g, Formula body) {
  if (!is_announcement_free(content)) {
    throw FormulaError("announced content must be announcement-free");
  }
  return Formula(std::make_shared<const Node>(
      Node{Kind::Announce, {}, std::move(g), std::move(content), std::move(body)}));
}

Formula Formula::disj(Formula l, Formula r) { return impl(impl(l, r), r); }

Formula Formula::wedge(Formula l, Formula r) {
  return negation(disj(negation(std::move(l)), negation(std::move(r))));
}

Formula Formula::sdisj(Formula l, Formula r) {
  return negation(conj(negation(std::move(l)), negation(std::move(r))));
}

Formula Formula::iff(Formula l, Formula r) { return conj(impl(l, r), impl(r, l)); }

Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Atom && node_->kind != Kind::Believes) {
    throw std::logic_error("name() on a formula without a name");
  }
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->kind != Kind::Not && node_->kind != Kind::Geq && node_->kind != Kind::Believes) {
    throw std::logic_error("child() on a non-unary formula");
  }
  return *node_->a;
}

const Formula& Formula::left() const {
  if (node_->kind != Kind::Conj && node_->kind != Kind::Impl && node_->kind != Kind::Announce) {
    throw std::logic_error("left() on a non-binary formula");
  }
  return *node_->a;
}

const Formula& Formula::right() const {
  if (node_->kind != Kind::Conj && node_->kind != Kind::Impl && node_->kind != Kind::Announce) {
    throw std::logic_error("right() on a non-binary formula");
  }
  return *node_->b;
}

const Threshold& Formula::threshold() const {
  if (!node_->g) throw std::logic_error("threshold() on a formula without threshold");
  return *node_->g;
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.name != b.name || a.g != b.g) return false;
  if (a.a.has_value() != b.a.has_value() || a.b.has_value() != b.b.has_value()) return false;
  if (a.a && !(*a.a == *b.a)) return false;
  if (a.b && !(*a.b == *b.b)) return false;
  return true;
}

namespace {

template <class Fn>
void visit_all(const Formula& f, Fn&& fn) {
  fn(f);
  switch (f.kind()) {
    case Kind::Bottom:
    case Kind::Atom:
      break;
    case Kind::Not:
    case Kind::Geq:
    case Kind::Believes:
      visit_all(f.child(), fn);
      break;
    case Kind::Conj:
    case Kind::Impl:
    case Kind::Announce:
      visit_all(f.left(), fn);
      visit_all(f.right(), fn);
      break;
  }
}

}  // namespace

FormulaMetrics metrics(const Formula& f) {
  FormulaMetrics m;
  visit_all(f, [&](const Formula& g) {
    ++m.node_count;
    if (g.kind() == Kind::Announce) ++m.announcement_count;
  });
  return m;
}

bool is_announcement_free(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bottom:
    case Kind::Atom:
      return true;
    case Kind::Not:
    case Kind::Geq:
    case Kind::Believes:
      return is_announcement_free(f.child());
    case Kind::Conj:
    case Kind::Impl:
      return is_announcement_free(f.left()) && is_announcement_free(f.right());
    case Kind::Announce:
      return false;
  }
  return false;
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bottom:
    case Kind::Atom:
      return 0;
    case Kind::Not:
    case Kind::Geq:
    case Kind::Believes:
      return 1 + depth(f.child());
    case Kind::Conj:
    case Kind::Impl:
    case Kind::Announce:
      return 1 + std::max(depth(f.left()), depth(f.right()));
  }
  return 0;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  visit_all(f, [&](const Formula& g) {
    if (g.kind() == Kind::Atom) out.insert(g.name());
  });
  return out;
}

std::set<std::string> agents_of(const Formula& f) {
  std::set<std::string> out;
  visit_all(f, [&](const Formula& g) {
    if (g.kind() == Kind::Believes) out.insert(g.name());
  });
  return out;
}

}  // namespace luka
