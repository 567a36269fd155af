#include <cctype>
#include <optional>
#include <vector>

#include "luka/syntax.hpp"

namespace luka {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  LParen, RParen, LBracket, RBracket, Tilde, Amp, Bar, Caret, OPlus,
  Arrow, Iff, Geq, Number, Ident, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Caret: return "'^'";
    case Tok::OPlus: return "'(+)'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Geq: return "'>='";
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view lit) { return src.substr(i, lit.size()) == lit; };

  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t{Tok::End, {}, line, col};
    std::size_t len = 1;
    if (starts("(+)")) {
      t.kind = Tok::OPlus;
      len = 3;
    } else if (starts("<->")) {
      t.kind = Tok::Iff;
      len = 3;
    } else if (starts("->")) {
      t.kind = Tok::Arrow;
      len = 2;
    } else if (starts(">=")) {
      t.kind = Tok::Geq;
      len = 2;
    } else if (c == '(') {
      t.kind = Tok::LParen;
    } else if (c == ')') {
      t.kind = Tok::RParen;
    } else if (c == '[') {
      t.kind = Tok::LBracket;
    } else if (c == ']') {
      t.kind = Tok::RBracket;
    } else if (c == '~') {
      t.kind = Tok::Tilde;
    } else if (c == '&') {
      t.kind = Tok::Amp;
    } else if (c == '|') {
      t.kind = Tok::Bar;
    } else if (c == '^') {
      t.kind = Tok::Caret;
    } else if (std::isdigit(c)) {
      t.kind = Tok::Number;
      len = 0;
      while (i + len < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[i + len])) || src[i + len] == '.' ||
              src[i + len] == '/')) {
        ++len;
      }
    } else if (std::isalpha(c) || c == '_') {
      t.kind = Tok::Ident;
      len = 0;
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_')) {
        ++len;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    t.text = std::string(src.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  out.push_back(Token{Tok::End, {}, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = parse_implies(true);
    if (peek().kind != Tok::End) fail("unexpected " + std::string(describe(peek().kind)));
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  void expect(Tok k) {
    if (peek().kind != k) {
      fail(std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    }
    next();
  }

  Formula parse_implies(bool allow_iff) {
    Formula lhs = parse_conj();
    if (peek().kind == Tok::Arrow) {
      next();
      Formula rhs = parse_implies(false);
      if (peek().kind == Tok::Iff) fail("mixing '->' and '<->' requires parentheses");
      return Formula::impl(std::move(lhs), std::move(rhs));
    }
    if (peek().kind == Tok::Iff) {
      if (!allow_iff) fail("mixing '->' and '<->' requires parentheses");
      next();
      Formula rhs = parse_conj();
      if (peek().kind == Tok::Arrow || peek().kind == Tok::Iff) {
        fail("chained '<->' requires parentheses");
      }
      return Formula::iff(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  static bool is_conj_op(Tok k) {
    return k == Tok::Amp || k == Tok::Bar || k == Tok::Caret || k == Tok::OPlus;
  }

  Formula parse_conj() {
    Formula acc = parse_unary();
    std::optional<Tok> op;
    while (is_conj_op(peek().kind)) {
      Tok k = peek().kind;
      if (op && *op != k) {
        fail(std::string("mixing ") + describe(*op) + " and " + describe(k) +
             " requires parentheses");
      }
      op = k;
      next();
      Formula rhs = parse_unary();
      switch (k) {
        case Tok::Amp: acc = Formula::conj(std::move(acc), std::move(rhs)); break;
        case Tok::Bar: acc = Formula::disj(std::move(acc), std::move(rhs)); break;
        case Tok::Caret: acc = Formula::wedge(std::move(acc), std::move(rhs)); break;
        default: acc = Formula::sdisj(std::move(acc), std::move(rhs)); break;
      }
    }
    return acc;
  }

  Threshold parse_threshold() {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail("expected rational threshold, found " + std::string(describe(t.kind)));
    Rational r;
    try {
      r = parse_rational(t.text);
    } catch (const NumberFormatError& e) {
      fail(e.what());
    }
    if (r > 1) fail("threshold " + t.text + " outside [0,1]");
    next();
    return Threshold(r);
  }

  Formula parse_unary() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      next();
      return Formula::negation(parse_unary());
    }
    if (t.kind == Tok::Ident && t.text == "B" && peek(1).kind == Tok::LBracket) {
      next();
      next();
      if (peek().kind != Tok::Ident) fail("expected agent name");
      std::string agent = next().text;
      expect(Tok::RBracket);
      return Formula::believes(std::move(agent), parse_unary());
    }
    if (t.kind == Tok::LBracket) {
      const int line = t.line;
      const int col = t.column;
      next();
      Formula content = parse_implies(true);
      expect(Tok::Geq);
      Threshold g = parse_threshold();
      expect(Tok::RBracket);
      if (!is_announcement_free(content)) {
        throw ParseError("announced content must be announcement-free", line, col);
      }
      return Formula::announce(std::move(content), std::move(g), parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      std::string name = next().text;
      if (name == "bot") return Formula::bottom();
      return Formula::atom(std::move(name));
    }
    if (t.kind == Tok::LParen) {
      next();
      Formula inner = parse_implies(true);
      if (peek().kind == Tok::Geq) {
        next();
        Threshold g = parse_threshold();
        expect(Tok::RParen);
        return Formula::geq(std::move(inner), std::move(g));
      }
      expect(Tok::RParen);
      return inner;
    }
    fail("expected formula, found " + std::string(describe(t.kind)));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace luka
