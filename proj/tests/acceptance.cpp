// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "luka/proof.hpp"
#include "luka/schema.hpp"
#include "luka/semantics.hpp"
#include "luka/syntax.hpp"
#include "luka/translation.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"
#include "support/instances.hpp"

using namespace luka;

namespace {

constexpr double kQueryLimitSeconds = 1.0;
constexpr double kSuiteLimitSeconds = 60.0;
constexpr int kSchemaInstances = 1000;
constexpr int kTranslationFormulas = 500;
constexpr int kTranslationDepth = 5;
constexpr int kLemmaFormulas = 1000;
constexpr int kLemmaDepth = 5;
constexpr int kRoundTrips = 2000;
constexpr int kRoundTripDepth = 8;
constexpr int kMaxStates = 6;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(const char* id, double limit, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit) {
    out.pass = false;
    out.detail += "; over time limit";
  }
  if (!out.pass) ++failures;
  std::printf("%s %s  %s [%.3f s, limit %.0f s]\n", id, out.pass ? "PASS" : "FAIL",
              out.detail.c_str(), secs, limit);
  std::fflush(stdout);
}

Model panel(const char* which) {
  return load_model(data_path(std::string("models/muddy_") + which + ".dlm"));
}

const Rational one_fifth(1, 5);
const Rational nine_tenths(9, 10);

Formula someone_muddy() { return parse_formula("~(~ma & ~mb & ~mc)"); }
Threshold four_fifths() { return Threshold(Rational(4, 5)); }

std::string value_text(const TruthValue& v) { return rational_text(v.value()); }

Outcome ac1() {
  TruthValue v = evaluate(panel("I"), "s3", parse_formula("B[c] mc"));
  return {v.value() == one_fifth, "V(I, s3, B[c] mc) = " + value_text(v) + ", expected 1/5"};
}

Outcome ac2() {
  Model one = panel("I");
  TruthValue v =
      evaluate(one, "s3", parse_formula("[~(~ma & ~mb & ~mc) >= 4/5] B[c] mc"));
  UpdateResult u = update_model(one, someone_muddy(), four_fifths());
  bool removed_s1 = u.removed == std::vector<std::string>{"s1"};
  bool equals_two = u.model == panel("II");
  std::ostringstream d;
  d << "value " << value_text(v) << " (expected 1/5), removed {";
  for (std::size_t i = 0; i < u.removed.size(); ++i) d << (i ? "," : "") << u.removed[i];
  d << "} (expected {s1}), update " << (equals_two ? "equals" : "differs from") << " muddy_II";
  return {v.value() == one_fifth && removed_s1 && equals_two, d.str()};
}

Outcome ac3() {
  TruthValue v = evaluate(panel("III"), "s3", parse_formula("B[c] mc"));
  UpdateTrace t = run_announcements(panel("I"), {{someone_muddy(), four_fifths()},
                                                 {someone_muddy(), four_fifths()}});
  bool is_two = t.current() == panel("II");
  bool is_three = t.current() == panel("III");
  std::ostringstream d;
  d << "V(III, s3, B[c] mc) = " << value_text(v) << " (expected 9/10); twice-announced model has "
    << t.current().size() << " states, " << (is_two ? "equals" : "differs from") << " muddy_II, "
    << (is_three ? "equals" : "differs from") << " muddy_III";
  return {v.value() == nine_tenths && is_two && !is_three, d.str()};
}

Outcome ac4() {
  gen::Rng rng(2024);
  const SchemaId all_class[] = {SchemaId::LD1, SchemaId::LD2, SchemaId::LD3, SchemaId::LD4,
                                SchemaId::LD5, SchemaId::LG0, SchemaId::LG1, SchemaId::LB1};
  int checked = 0, bad = 0;
  std::string first;
  auto check = [&](SchemaId id, bool serial) {
    for (int i = 0; i < kSchemaInstances; ++i) {
      Formula f = instantiate_schema(id, instances::random_substitution(rng, id));
      Model m = gen::model(rng, {}, serial, kMaxStates);
      Evaluator ev(m);
      ++checked;
      for (const auto& s : m.states()) {
        if (!ev.evaluate(s, f).is_one()) {
          if (bad++ == 0) first = print_formula(f) + " at " + s;
          break;
        }
      }
    }
  };
  for (auto id : all_class) check(id, false);
  check(SchemaId::LB2, true);
  std::string d = std::to_string(checked) + " instances over 9 schemas, " + std::to_string(bad) +
                  " not valid";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

Outcome ac5() {
  gen::Rng rng(2025);
  int bad = 0, states = 0;
  std::string first;
  for (int i = 0; i < kTranslationFormulas; ++i) {
    Formula f = gen::formula(rng, kTranslationDepth);
    Formula t = translate(f);
    Model m = gen::model(rng, {}, false, kMaxStates);
    Evaluator ev(m);
    const auto lhs = ev.evaluate_all(f);
    const auto& rhs = ev.evaluate_all(t);
    bool ok = is_announcement_free(t) && lhs == rhs;
    states += static_cast<int>(m.size());
    if (!ok && bad++ == 0) first = print_formula(f);
  }
  std::string d = std::to_string(kTranslationFormulas) + " formulas at " + std::to_string(states) +
                  " states, " + std::to_string(bad) + " mismatches";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

Outcome ac6() {
  gen::Rng rng(2026);
  int lemma_bad = 0, step_bad = 0, steps = 0;
  int by_item[7] = {0};
  std::string first_lemma, first_step;
  for (int i = 0; i < kLemmaFormulas; ++i) {
    Formula f = gen::formula(rng, kLemmaDepth);
    auto violations = check_complexity_lemma(f);
    if (!violations.empty()) {
      if (lemma_bad++ == 0) {
        const auto& v = violations.front();
        first_lemma = "item " + std::to_string(v.item) + " at " + print_formula(v.instance) +
                      ": " + std::to_string(v.lhs) + " vs " + std::to_string(v.rhs);
      }
      for (const auto& v : violations) ++by_item[v.item];
    }
    bool decreasing = true;
    translate(f, [&](const RewriteStep& s) {
      ++steps;
      std::uint64_t before = complexity(s.before), after = complexity(s.after);
      if (after >= before) {
        if (decreasing && step_bad == 0) {
          first_step = std::string(rule_name(s.rule)) + " at " + print_formula(s.before) + ": " +
                       std::to_string(before) + " -> " + std::to_string(after);
        }
        decreasing = false;
      }
    });
    if (!decreasing) ++step_bad;
  }
  std::ostringstream d;
  d << kLemmaFormulas << " formulas; " << lemma_bad << " with a failing inequality (per item:";
  for (int k = 1; k <= 6; ++k) d << ' ' << k << '=' << by_item[k];
  d << "); " << step_bad << " with a non-decreasing step among " << steps << " steps";
  if (lemma_bad) d << "; first: " << first_lemma;
  if (step_bad) d << "; first step: " << first_step;
  return {lemma_bad == 0 && step_bad == 0, d.str()};
}

Outcome ac7() {
  int scripts_ok = 0, mutants = 0, accepted = 0;
  for (const char* name : {"gamma_geq.dlp", "neg_case.dlp"}) {
    std::string text = instances::read_file(data_path(std::string("proofs/") + name));
    if (verify_proof(parse_proof(text)).ok()) ++scripts_ok;
    for (const auto& m : instances::mutants(text)) {
      ++mutants;
      try {
        if (verify_proof(parse_proof(m)).ok()) ++accepted;
      } catch (const ProofParseError&) {
      }
    }
  }
  std::ostringstream d;
  d << scripts_ok << "/2 bundled scripts verify; " << mutants - accepted << "/" << mutants
    << " single-line mutants rejected";
  return {scripts_ok == 2 && mutants > 0 && accepted == 0, d.str()};
}

Outcome ac8() {
  gen::Rng rng(2027);
  int bad = 0;
  std::string first;
  for (int i = 0; i < kRoundTrips; ++i) {
    Formula f = gen::formula(rng, kRoundTripDepth);
    std::string text = print_formula(f);
    if (!(parse_formula(text) == f) && bad++ == 0) first = text;
  }
  std::string d = std::to_string(kRoundTrips) + " formulas, " + std::to_string(bad) + " failures";
  if (bad) d += "; first: " + first;
  return {bad == 0, d};
}

}  // namespace

int main() {
  run("AC1", kQueryLimitSeconds, ac1);
  run("AC2", kQueryLimitSeconds, ac2);
  run("AC3", kQueryLimitSeconds, ac3);
  run("AC4", kSuiteLimitSeconds, ac4);
  run("AC5", kSuiteLimitSeconds, ac5);
  run("AC6", kSuiteLimitSeconds, ac6);
  run("AC7", kSuiteLimitSeconds, ac7);
  run("AC8", kSuiteLimitSeconds, ac8);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
