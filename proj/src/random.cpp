#include "luka/random.hpp"

namespace luka {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Rational random_unit(Rng& rng, unsigned max_denominator) {
  switch (pick(rng, 6)) {
    case 0: return Rational(0);
    case 1: return Rational(1);
    default: break;
  }
  unsigned d = std::uniform_int_distribution<unsigned>(1, max_denominator)(rng);
  unsigned k = std::uniform_int_distribution<unsigned>(0, d)(rng);
  Rational r(k, d);
  r.canonicalize();
  return r;
}

Threshold random_threshold(Rng& rng, unsigned max_denominator) {
  return Threshold(random_unit(rng, max_denominator));
}

Model random_model(Rng& rng, const std::vector<std::string>& agents,
                   const std::vector<std::string>& atoms, const ModelShape& shape) {
  const std::size_t n = 1 + pick(rng, shape.max_states);
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i + 1));
  Model m(std::move(states), agents, atoms);
  for (std::size_t a = 0; a < agents.size(); ++a) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (shape.serial && s == t) {
          m.set_rel(a, s, t, Rational(1));
        } else {
          m.set_rel(a, s, t, random_unit(rng, shape.max_denominator));
        }
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t p = 0; p < atoms.size(); ++p) {
      m.set_val(s, p, random_unit(rng, shape.max_denominator));
    }
  }
  return m;
}

namespace {

Formula leaf(Rng& rng, const FormulaShape& shape) {
  if (shape.atoms.empty() || pick(rng, 8) == 0) return Formula::bottom();
  return Formula::atom(shape.atoms[pick(rng, shape.atoms.size())]);
}

Formula grow(Rng& rng, const FormulaShape& shape, std::size_t depth, bool announcements) {
  if (depth == 0 || pick(rng, 4) == 0) return leaf(rng, shape);
  switch (pick(rng, announcements ? 6 : 5)) {
    case 0:
      return Formula::negation(grow(rng, shape, depth - 1, announcements));
    case 1:
      return Formula::geq(grow(rng, shape, depth - 1, announcements),
                          random_threshold(rng, shape.max_denominator));
    case 2: {
      auto l = grow(rng, shape, depth - 1, announcements);
      return Formula::conj(std::move(l), grow(rng, shape, depth - 1, announcements));
    }
    case 3: {
      auto l = grow(rng, shape, depth - 1, announcements);
      return Formula::impl(std::move(l), grow(rng, shape, depth - 1, announcements));
    }
    case 4:
      if (shape.agents.empty()) return Formula::negation(grow(rng, shape, depth - 1, announcements));
      return Formula::believes(shape.agents[pick(rng, shape.agents.size())],
                               grow(rng, shape, depth - 1, announcements));
    default: {
      auto content = grow(rng, shape, depth - 1, false);
      auto g = random_threshold(rng, shape.max_denominator);
      return Formula::announce(std::move(content), std::move(g), grow(rng, shape, depth - 1, true));
    }
  }
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  return grow(rng, shape, shape.max_depth, shape.announcements);
}

}  // namespace luka
