// Formula AST of dynamic doxastic Łukasiewicz logic.
#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "luka/core.hpp"

namespace luka {

enum class Kind { Bottom, Atom, Not, Geq, Conj, Impl, Believes, Announce };

/// Raised by the smart constructors when an invariant of the AST is violated.
class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable, structurally shared formula. Copying is cheap.
///
/// Accessors are kind-specific: `name()` for atoms and belief agents,
/// `child()` for unary nodes, `left()`/`right()` for `&` and `->`,
/// `content()`/`body()` for announcements and `threshold()` for `>=`
/// and announcements.
class Formula {
 public:
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula geq(Formula f, Threshold g);
  static Formula conj(Formula l, Formula r);
  static Formula impl(Formula l, Formula r);
  static Formula believes(std::string agent, Formula f);
  /// Rejects `content` containing an announcement.
  static Formula announce(Formula content, Threshold g, Formula body);

  // Derived connectives, desugared to primitives.
  static Formula disj(Formula l, Formula r);   // ((l -> r) -> r)
  static Formula wedge(Formula l, Formula r);  // ~(~l | ~r)
  static Formula sdisj(Formula l, Formula r);  // ~(~l & ~r)
  static Formula iff(Formula l, Formula r);    // (l -> r) & (r -> l)

  Kind kind() const;
  const std::string& name() const;
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& content() const { return left(); }
  const Formula& body() const { return right(); }
  const Threshold& threshold() const;

  /// Node identity, stable for the lifetime of any copy of this formula.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaMetrics {
  std::size_t node_count = 0;
  std::size_t announcement_count = 0;
};

FormulaMetrics metrics(const Formula& f);
bool is_announcement_free(const Formula& f);
std::size_t depth(const Formula& f);

std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> agents_of(const Formula& f);

bool is_identifier(std::string_view s);

}  // namespace luka
