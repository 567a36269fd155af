// Hand-rolled generators for property tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "luka/formula.hpp"
#include "luka/model.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int below(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

/// k/d with d <= 20, with 0 and 1 overrepresented.
inline luka::Rational unit(Rng& rng) {
  int pick = below(rng, 8);
  if (pick == 0) return 0;
  if (pick == 1) return 1;
  int d = 1 + below(rng, 20);
  luka::Rational r(below(rng, d + 1), d);
  r.canonicalize();
  return r;
}

inline luka::TruthValue value(Rng& rng) { return luka::TruthValue(unit(rng)); }
inline luka::Threshold threshold(Rng& rng) { return luka::Threshold(unit(rng)); }

struct Signature {
  std::vector<std::string> atoms{"p", "q", "r"};
  std::vector<std::string> agents{"a", "b", "c"};
};

inline luka::Model model(Rng& rng, const Signature& sig = {}, bool serial = false,
                         int max_states = 6) {
  int n = 1 + below(rng, max_states);
  std::vector<std::string> states;
  for (int i = 0; i < n; ++i) states.push_back("w" + std::to_string(i));
  luka::Model m(states, sig.agents, sig.atoms);
  for (std::size_t a = 0; a < sig.agents.size(); ++a) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        luka::Rational r = below(rng, 3) == 0 ? luka::Rational(0) : unit(rng);
        m.set_rel(a, s, t, serial && s == t ? luka::Rational(1) : r);
      }
    }
  }
  for (int s = 0; s < n; ++s) {
    for (std::size_t p = 0; p < sig.atoms.size(); ++p) m.set_val(s, p, unit(rng));
  }
  return m;
}

inline luka::Formula formula(Rng& rng, int depth, bool announcements = true,
                             const Signature& sig = {}) {
  using luka::Formula;
  if (depth <= 0 || below(rng, 5) == 0) {
    if (below(rng, 10) == 0) return Formula::bottom();
    return Formula::atom(sig.atoms[below(rng, static_cast<int>(sig.atoms.size()))]);
  }
  switch (below(rng, announcements ? 7 : 6)) {
    case 0:
      return Formula::negation(formula(rng, depth - 1, announcements, sig));
    case 1:
      return Formula::geq(formula(rng, depth - 1, announcements, sig), threshold(rng));
    case 2:
    case 3: {
      auto l = formula(rng, depth - 1, announcements, sig);
      auto r = formula(rng, depth - 1, announcements, sig);
      return below(rng, 2) ? Formula::conj(l, r) : Formula::impl(l, r);
    }
    case 4:
    case 5:
      return Formula::believes(sig.agents[below(rng, static_cast<int>(sig.agents.size()))],
                               formula(rng, depth - 1, announcements, sig));
    default: {
      auto c = formula(rng, depth - 1, false, sig);
      return Formula::announce(c, threshold(rng), formula(rng, depth - 1, true, sig));
    }
  }
}

}  // namespace gen
