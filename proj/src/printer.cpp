#include "luka/syntax.hpp"

namespace luka {

namespace {

// Binding levels, loosest first.
enum Level { kImplies = 0, kConj = 1, kUnary = 2 };

void print(const Formula& f, Level ctx, std::string& out) {
  switch (f.kind()) {
    case Kind::Bottom:
      out += "bot";
      return;
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Not:
      out += '~';
      print(f.child(), kUnary, out);
      return;
    case Kind::Believes:
      out += "B[" + f.name() + "] ";
      print(f.child(), kUnary, out);
      return;
    case Kind::Geq:
      out += '(';
      print(f.child(), kImplies, out);
      out += " >= " + rational_text(f.threshold().value()) + ")";
      return;
    case Kind::Announce:
      out += '[';
      print(f.content(), kImplies, out);
      out += " >= " + rational_text(f.threshold().value()) + "] ";
      print(f.body(), kUnary, out);
      return;
    case Kind::Conj: {
      const bool paren = ctx > kConj;
      if (paren) out += '(';
      print(f.left(), kConj, out);
      out += " & ";
      print(f.right(), kUnary, out);
      if (paren) out += ')';
      return;
    }
    case Kind::Impl: {
      const bool paren = ctx > kImplies;
      if (paren) out += '(';
      print(f.left(), kConj, out);
      out += " -> ";
      print(f.right(), kImplies, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print(f, kImplies, out);
  return out;
}

}  // namespace luka
