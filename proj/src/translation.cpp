#include "luka/translation.hpp"

#include <algorithm>
#include <stdexcept>

namespace luka {

namespace {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("complexity overflow");
  return r;
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("complexity overflow");
  return r;
}

}  // namespace

std::uint64_t complexity(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bottom:
    case Kind::Atom:
      return 1;
    case Kind::Not:
    case Kind::Geq:
    case Kind::Believes:
      return add(1, complexity(f.child()));
    case Kind::Conj:
      return add(1, std::max(complexity(f.left()), complexity(f.right())));
    case Kind::Impl:
      return add(3, std::max(complexity(f.left()), complexity(f.right())));
    case Kind::Announce:
      return mul(add(5, complexity(f.content())), complexity(f.body()));
  }
  return 1;
}

const char* rule_name(RewriteRule r) {
  switch (r) {
    case RewriteRule::AtomBody: return "announce-atom";
    case RewriteRule::BottomBody: return "announce-bot";
    case RewriteRule::NotBody: return "announce-not";
    case RewriteRule::ConjBody: return "announce-conj";
    case RewriteRule::ImplBody: return "announce-impl";
    case RewriteRule::BelievesBody: return "announce-belief";
    case RewriteRule::GeqBody: return "announce-geq";
    case RewriteRule::AnnounceBody: return "announce-announce";
  }
  return "?";
}

namespace {

class Translator {
 public:
  explicit Translator(const RewriteObserver& obs) : obs_(obs) {}

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case Kind::Bottom:
      case Kind::Atom:
        return f;
      case Kind::Not:
        return Formula::negation(run(f.child()));
      case Kind::Geq:
        return Formula::geq(run(f.child()), f.threshold());
      case Kind::Conj:
        return Formula::conj(run(f.left()), run(f.right()));
      case Kind::Impl:
        // t(φ -> ψ) = t(~(φ & ~ψ))
        return run(Formula::negation(Formula::conj(f.left(), Formula::negation(f.right()))));
      case Kind::Believes:
        return Formula::believes(f.name(), run(f.child()));
      case Kind::Announce:
        return announce(f);
    }
    return f;
  }

 private:
  Formula step(RewriteRule rule, const Formula& before, Formula after) {
    if (obs_) obs_(RewriteStep{rule, before, after});
    return run(after);
  }

  Formula announce(const Formula& f) {
    const Formula& phi = f.content();
    const Threshold& g = f.threshold();
    const Formula& body = f.body();
    auto pre = [&] { return Formula::geq(phi, g); };
    auto under = [&](Formula x) { return Formula::announce(phi, g, std::move(x)); };

    switch (body.kind()) {
      case Kind::Atom:
        return step(RewriteRule::AtomBody, f, Formula::impl(pre(), body));
      case Kind::Bottom:
        return step(RewriteRule::BottomBody, f, Formula::impl(pre(), body));
      case Kind::Not:
        return step(RewriteRule::NotBody, f,
                    Formula::impl(pre(), Formula::negation(under(body.child()))));
      case Kind::Conj:
        return step(RewriteRule::ConjBody, f,
                    Formula::conj(under(body.left()), under(body.right())));
      case Kind::Impl:
        return step(RewriteRule::ImplBody, f,
                    under(Formula::negation(
                        Formula::conj(body.left(), Formula::negation(body.right())))));
      case Kind::Believes:
        return step(RewriteRule::BelievesBody, f,
                    Formula::impl(pre(), Formula::believes(body.name(), under(body.child()))));
      case Kind::Geq:
        return step(RewriteRule::GeqBody, f,
                    Formula::impl(pre(), Formula::geq(under(body.child()), body.threshold())));
      case Kind::Announce:
        // Innermost announcement first; the result is announcement-free.
        return step(RewriteRule::AnnounceBody, f, under(run(body)));
    }
    return f;
  }

  const RewriteObserver& obs_;
};

void lemma_at(const Formula& f, std::vector<LemmaViolation>& out) {
  const std::uint64_t cf = complexity(f);
  auto item1 = [&](const Formula& sub) {
    const std::uint64_t cs = complexity(sub);
    if (!(cf >= cs)) out.push_back({1, f, cf, cs});
  };
  switch (f.kind()) {
    case Kind::Bottom:
    case Kind::Atom:
      return;
    case Kind::Not:
    case Kind::Geq:
    case Kind::Believes:
      item1(f.child());
      lemma_at(f.child(), out);
      return;
    case Kind::Conj:
    case Kind::Impl:
      item1(f.left());
      item1(f.right());
      lemma_at(f.left(), out);
      lemma_at(f.right(), out);
      return;
    case Kind::Announce:
      break;
  }

  item1(f.content());
  item1(f.body());
  const Formula& phi = f.content();
  const Threshold& g = f.threshold();
  const Formula& body = f.body();
  auto pre = Formula::geq(phi, g);
  auto under = [&](Formula x) { return Formula::announce(phi, g, std::move(x)); };
  auto strict = [&](int item, const Formula& rewritten) {
    const std::uint64_t rhs = complexity(rewritten);
    if (!(cf > rhs)) out.push_back({item, f, cf, rhs});
  };
  switch (body.kind()) {
    case Kind::Atom:
      strict(2, Formula::impl(pre, body));
      break;
    case Kind::Not:
      strict(3, Formula::impl(pre, Formula::negation(under(body.child()))));
      break;
    case Kind::Conj:
      strict(4, Formula::conj(under(body.left()), under(body.right())));
      break;
    case Kind::Impl:
      strict(5, under(Formula::negation(
                    Formula::conj(body.left(), Formula::negation(body.right())))));
      break;
    case Kind::Believes:
      strict(6, Formula::impl(pre, Formula::believes(body.name(), under(body.child()))));
      break;
    default:
      break;
  }
  lemma_at(phi, out);
  lemma_at(body, out);
}

}  // namespace

Formula translate(const Formula& f, const RewriteObserver& observer) {
  return Translator(observer).run(f);
}

std::vector<LemmaViolation> check_complexity_lemma(const Formula& f) {
  std::vector<LemmaViolation> out;
  lemma_at(f, out);
  return out;
}

}  // namespace luka
