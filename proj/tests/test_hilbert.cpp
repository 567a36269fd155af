#include <doctest.h>

#include "luka/falsify.hpp"
#include "luka/proof.hpp"
#include "luka/schema.hpp"
#include "luka/semantics.hpp"
#include "luka/syntax.hpp"
#include "luka/translation.hpp"
#include "support/data.hpp"
#include "support/gen.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace luka;

namespace {

Formula P(const char* s) { return parse_formula(s); }
Threshold th(long n, long d) { return Threshold(oracle::frac(n, d)); }

std::string bundled(const char* name) {
  return instances::read_file(data_path(std::string("proofs/") + name));
}

}  // namespace

TEST_CASE("schema instantiation examples") {
  Substitution lb2;
  lb2.agents["a"] = "c";
  CHECK(instantiate_schema(SchemaId::LB2, lb2) == P("~B[c] bot"));

  Substitution lg1;
  lg1.formulas = {{"phi", P("p")}, {"psi", P("q")}};
  lg1.thresholds = {{"g", th(1, 2)}, {"g'", th(1, 2)}, {"g''", th(3, 4)}};
  CHECK_THROWS_AS(instantiate_schema(SchemaId::LG1, lg1), SchemaError);

  Substitution ld1;
  ld1.formulas = {{"phi", P("ma")}, {"p", P("mb")}};
  ld1.thresholds = {{"g", th(4, 5)}};
  CHECK(instantiate_schema(SchemaId::LD1, ld1) == P("[ma >= 4/5] mb <-> ((ma >= 4/5) -> mb)"));
}

TEST_CASE("instantiation errors") {
  Substitution missing;
  missing.formulas = {{"phi", P("p")}};
  CHECK_THROWS_AS(instantiate_schema(SchemaId::A1, missing), SchemaError);

  Substitution extra;
  extra.formulas = {{"phi", P("p")}, {"psi", P("q")}, {"chi", P("r")}};
  CHECK_THROWS_AS(instantiate_schema(SchemaId::A1, extra), SchemaError);

  Substitution not_atom;
  not_atom.formulas = {{"phi", P("p")}, {"p", P("~q")}};
  not_atom.thresholds = {{"g", th(1, 2)}};
  CHECK_THROWS_AS(instantiate_schema(SchemaId::LD1, not_atom), SchemaError);

  Substitution dynamic_content;
  dynamic_content.formulas = {{"phi", P("[p >= 1] q")}, {"psi", P("q")}};
  dynamic_content.thresholds = {{"g", th(1, 2)}};
  CHECK_THROWS_AS(instantiate_schema(SchemaId::LD2, dynamic_content), SchemaError);

  Substitution bad_agent;
  bad_agent.agents["a"] = "1x";
  CHECK_THROWS_AS(instantiate_schema(SchemaId::LB2, bad_agent), SchemaError);

  CHECK_THROWS_AS(instantiate_theorem("no_such_theorem", {}), SchemaError);
}

TEST_CASE("schema names") {
  for (auto id : all_schema_ids()) CHECK(schema_from_name(schema_name(id)) == id);
  CHECK_FALSE(schema_from_name("LD6").has_value());
}

TEST_CASE("axiom and theorem instances are valid on serial models") {
  gen::Rng rng(83);
  for (auto id : all_schema_ids()) {
    for (int i = 0; i < 150; ++i) {
      Formula f = instantiate_schema(id, instances::random_substitution(rng, id));
      Model m = gen::model(rng, {}, true, 4);
      auto ref = oracle::RefModel::of(m);
      CAPTURE(print_formula(f));
      for (const auto& s : m.states()) CHECK(oracle::eval(ref, s, f) == 1);
    }
  }
  for (const auto& [name, schema] : theorem_registry()) {
    for (int i = 0; i < 150; ++i) {
      Substitution sub;
      for (const auto& v : schema.formula_vars) sub.formulas.emplace(v, gen::formula(rng, 3));
      Formula f = instantiate(schema, sub);
      Model m = gen::model(rng, {}, false, 4);
      CAPTURE(print_formula(f));
      for (const auto& s : m.states()) CHECK(evaluate(m, s, f).is_one());
    }
  }
}

TEST_CASE("bundled proof scripts verify") {
  ProofReport g = verify_proof(parse_proof(bundled("gamma_geq.dlp")));
  CHECK(g.ok());
  REQUIRE(g.conclusion);
  CHECK(*g.conclusion == P("(p >= 1/2) & (q >= 4/5)"));

  ProofReport n = verify_proof(parse_proof(bundled("neg_case.dlp")));
  CHECK(n.ok());
  REQUIRE(n.conclusion);
  Formula phi = P("[p >= 1/2] q");
  Formula psi = translate(phi);
  CHECK(*n.conclusion == Formula::conj(Formula::impl(Formula::negation(psi), Formula::negation(phi)),
                                       Formula::impl(Formula::negation(phi), Formula::negation(psi))));
}

TEST_CASE("single premise script") {
  auto r = verify_proof(parse_proof("proof id\npremise \"p\"\n1: premise \"p\"\nqed 1 \"p\"\n"));
  CHECK(r.ok());
}

TEST_CASE("rule-shape violations name the offending line") {
  const char* swapped =
      "proof swapped\n"
      "premise \"p\"\n"
      "1: premise \"p\"\n"
      "2: axiom A1 phi=\"p\" psi=\"p\"\n"
      "3: mp 2 1\n"
      "qed 3\n";
  auto r = verify_proof(parse_proof(swapped));
  REQUIRE_FALSE(r.ok());
  CHECK(r.issues.front().line == 3);

  const char* forward =
      "proof forward\n"
      "premise \"p\"\n"
      "1: premise \"p\"\n"
      "2: mp 1 3\n"
      "3: axiom A1 phi=\"p\" psi=\"p\"\n"
      "qed 3\n";
  auto f = verify_proof(parse_proof(forward));
  REQUIRE_FALSE(f.ok());
  CHECK(f.issues.front().line == 2);

  auto undeclared = verify_proof(parse_proof("proof u\n1: premise \"p\"\nqed 1\n"));
  CHECK_FALSE(undeclared.ok());

  auto wrong_claim = verify_proof(parse_proof(
      "proof w\n1: axiom A1 phi=\"p\" psi=\"q\" => \"p & q -> q\"\nqed 1\n"));
  REQUIRE_FALSE(wrong_claim.ok());
  CHECK(wrong_claim.issues.front().line == 1);

  auto wrong_qed = verify_proof(parse_proof("proof w\n1: axiom A1 phi=\"p\" psi=\"q\"\nqed 1 \"p\"\n"));
  CHECK_FALSE(wrong_qed.ok());

  auto order = verify_proof(parse_proof(
      "proof o\n2: axiom A1 phi=\"p\" psi=\"q\"\n1: axiom A1 phi=\"p\" psi=\"q\"\nqed 2\n"));
  CHECK_FALSE(order.ok());
}

TEST_CASE("malformed scripts") {
  const char* bad[] = {
      "1: premise \"p\"\nqed 1\n",
      "proof x\n1: premise \"p\"\n",
      "proof x\n1: frobnicate 1\nqed 1\n",
      "proof x\n1: axiom ZZ phi=\"p\"\nqed 1\n",
      "proof x\n1: axiom A1 phi=p psi=\"q\"\nqed 1\n",
      "proof x\n1: premise \"p &\"\nqed 1\n",
      "proof x\n1: mp 0 1\nqed 1\n",
      "proof x\n1: rg 1 g=3/2\nqed 1\n",
      "proof x\n1: premise \"p\nqed 1\n",
      "proof x\n1: premise \"p\"\nqed 1\n2: premise \"p\"\n",
      "proof x\n1: axiom A1 phi=\"p\" phi=\"q\"\nqed 1\n",
  };
  for (std::string text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_proof(text), ProofParseError);
  }
}

TEST_CASE("every single-line mutant of a bundled script is rejected") {
  for (const char* name : {"gamma_geq.dlp", "neg_case.dlp"}) {
    auto ms = instances::mutants(bundled(name));
    CHECK(ms.size() >= 10);
    for (const auto& text : ms) {
      CAPTURE(text);
      bool rejected = false;
      try {
        rejected = !verify_proof(parse_proof(text)).ok();
      } catch (const ProofParseError&) {
        rejected = true;
      }
      CHECK(rejected);
    }
  }
}

TEST_CASE("checker is deterministic") {
  auto script = parse_proof(bundled("neg_case.dlp"));
  auto a = verify_proof(script), b = verify_proof(script);
  CHECK(a.ok() == b.ok());
  CHECK(a.derived.size() == b.derived.size());
  for (const auto& [k, f] : a.derived) CHECK(b.derived.at(k) == f);
}

TEST_CASE("premise-free lines of bundled scripts are valid on serial models") {
  gen::Rng rng(89);
  for (const char* name : {"gamma_geq.dlp", "neg_case.dlp"}) {
    auto script = parse_proof(bundled(name));
    auto report = verify_proof(script);
    REQUIRE(report.ok());
    std::set<int> dependent;
    for (const auto& line : script.lines) {
      bool dep = std::visit(
          [&](const auto& j) -> bool {
            using J = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<J, PremiseRef>) return true;
            if constexpr (std::is_same_v<J, ModusPonens>) {
              return dependent.count(j.minor) || dependent.count(j.major);
            }
            if constexpr (std::is_same_v<J, ConjIntro>) {
              return dependent.count(j.left) || dependent.count(j.right);
            }
            if constexpr (std::is_same_v<J, NecB> || std::is_same_v<J, NecG>) {
              return dependent.count(j.line) > 0;
            }
            return false;
          },
          line.why);
      if (dep) dependent.insert(line.index);
    }
    gen::Signature sig{{"p", "q"}, {"a"}};
    for (int i = 0; i < 200; ++i) {
      Model m = gen::model(rng, sig, true, 4);
      Evaluator ev(m);
      for (const auto& [index, f] : report.derived) {
        if (dependent.count(index)) continue;
        for (const auto& s : m.states()) CHECK(ev.evaluate(s, f).is_one());
      }
    }
  }
}

TEST_CASE("falsify examples") {
  Substitution ld5;
  ld5.formulas = {{"phi", P("p & q")}, {"psi", P("B[b] r -> q")}};
  ld5.agents = {{"a", "a"}};
  ld5.thresholds = {{"g", th(1, 3)}};
  CHECK_FALSE(falsify(instantiate_schema(SchemaId::LD5, ld5), 500, ModelClass::All, 3));

  auto atom = falsify(P("p"), 100, ModelClass::All);
  REQUIRE(atom);
  CHECK(atom->model.val(atom->state, "p") < 1);
  CHECK(atom->value.value() == atom->model.val(atom->state, "p"));

  auto lb2 = falsify(P("~B[a] bot"), 1000, ModelClass::All, 1);
  REQUIRE(lb2);
  CHECK(lb2->value.is_zero());
  // ~B[a] bot is the largest degree r_a(s, t), so the refuting state sees nothing.
  for (const auto& t : lb2->model.states()) CHECK(lb2->model.rel("a", lb2->state, t) == 0);
  CHECK_FALSE(falsify(P("~B[a] bot"), 500, ModelClass::Serial, 1));
  CHECK_FALSE(falsify(P("(p >= 0)"), 100, ModelClass::All));

  auto again = falsify(P("~B[a] bot"), 1000, ModelClass::All, 1);
  REQUIRE(again);
  CHECK(again->model == lb2->model);
  CHECK(again->state == lb2->state);
}
