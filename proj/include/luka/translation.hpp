// Announcement elimination and the complexity measure that bounds it.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "luka/formula.hpp"

namespace luka {

/// c(p)=c(bot)=1, c(~f)=c(f>=g)=c(B_a f)=1+c(f), c(f&h)=1+max,
/// c(f->h)=3+max, c([f>=g]h)=(5+c(f))*c(h).
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::uint64_t complexity(const Formula& f);

/// Which announcement-elimination clause fired.
enum class RewriteRule { AtomBody, BottomBody, NotBody, ConjBody, ImplBody, BelievesBody,
                         GeqBody, AnnounceBody };

const char* rule_name(RewriteRule r);

struct RewriteStep {
  RewriteRule rule;
  Formula before;
  Formula after;
};

using RewriteObserver = std::function<void(const RewriteStep&)>;

/// Maps any formula to an announcement-free one with the same value at every
/// state of every model. Implications are normalized to ~(f & ~h).
/// The observer, if given, sees every announcement-elimination step.
Formula translate(const Formula& f, const RewriteObserver& observer = {});

struct LemmaViolation {
  int item;  // 1..6
  Formula instance;
  std::uint64_t lhs;
  std::uint64_t rhs;
};

/// Checks the six complexity inequalities at every subformula of `f`:
///  1. c(f) >= c(g) for each immediate subformula g,
///  2-6. c([φ>=g]X) > c(rewrite) for bodies X = p, ~ψ, ψ&χ, ψ->χ, B_a ψ.
std::vector<LemmaViolation> check_complexity_lemma(const Formula& f);

}  // namespace luka
