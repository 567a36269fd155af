#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>

#include "luka/falsify.hpp"
#include "luka/proof.hpp"
#include "luka/query.hpp"
#include "luka/semantics.hpp"
#include "luka/syntax.hpp"
#include "luka/translation.hpp"
#include "repl.hpp"

namespace {

using namespace luka;

int cmd_check(const std::string& model_path, const std::string& state, const std::string& text) {
  Model m = load_model(model_path);
  TruthValue v = evaluate(m, state, parse_formula(text));
  std::cout << make_query_result(v).format() << '\n';
  return v.is_one() ? 0 : 1;
}

int cmd_translate(const std::string& text, const std::string& model_path, bool trace) {
  Formula f = parse_formula(text);
  RewriteObserver obs;
  if (trace) {
    obs = [](const RewriteStep& s) {
      std::cerr << rule_name(s.rule) << ": " << print_formula(s.before) << "  ==>  "
                << print_formula(s.after) << '\n';
    };
  }
  Formula t = translate(f, obs);
  std::cout << print_formula(t) << '\n';
  if (model_path.empty()) return 0;
  Model m = load_model(model_path);
  Evaluator ev(m);
  const auto lhs = ev.evaluate_all(f);
  const auto& rhs = ev.evaluate_all(t);
  int mismatches = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (lhs[i] != rhs[i]) {
      std::cout << "mismatch at " << m.states()[i] << ": " << rational_fraction(lhs[i].value())
                << " vs " << rational_fraction(rhs[i].value()) << '\n';
      ++mismatches;
    }
  }
  if (mismatches == 0) std::cout << "verified at " << m.size() << " states\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_complexity(const std::string& text) {
  Formula f = parse_formula(text);
  std::cout << complexity(f) << '\n';
  auto violations = check_complexity_lemma(f);
  for (const auto& v : violations) {
    std::cout << "inequality " << v.item << " fails at " << print_formula(v.instance) << ": "
              << v.lhs << " <= " << v.rhs << '\n';
  }
  return 0;
}

int cmd_proof_verify(const std::string& path) {
  ProofScript script = load_proof(path);
  ProofReport report = verify_proof(script);
  if (report.ok()) {
    std::cout << "OK " << script.name << ": " << print_formula(*report.conclusion) << '\n';
    return 0;
  }
  for (const auto& issue : report.issues) {
    if (issue.line > 0) {
      std::cout << "line " << issue.line << ": " << issue.reason << '\n';
    } else {
      std::cout << issue.reason << '\n';
    }
  }
  return 1;
}

int cmd_falsify(const std::string& text, std::size_t budget, const std::string& cls,
                std::uint64_t seed) {
  Formula f = parse_formula(text);
  auto cex = falsify(f, budget, cls == "serial" ? ModelClass::Serial : ModelClass::All, seed);
  if (!cex) {
    std::cout << "no counterexample in " << budget << " models\n";
    return 0;
  }
  std::cout << "counterexample at " << cex->state << ": "
            << make_query_result(cex->value).format() << '\n'
            << serialize_model(cex->model);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker and proof checker for dynamic doxastic Lukasiewicz logic"};
  app.require_subcommand(1);
  int code = 0;

  std::string model_path, state, formula, proof_path, cls = "all";
  bool trace = false;
  std::size_t budget = 1000;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Value of a formula at a state");
  check->add_option("-m,--model", model_path, "model file")->required()->check(CLI::ExistingFile);
  check->add_option("-s,--state", state, "state name")->required();
  check->add_option("-f,--formula", formula, "formula")->required();

  auto* tr = app.add_subcommand("translate", "Announcement-free equivalent of a formula");
  tr->add_option("-f,--formula", formula, "formula")->required();
  tr->add_option("-m,--verify", model_path, "compare values of both formulas on this model")
      ->check(CLI::ExistingFile);
  tr->add_flag("--trace", trace, "print each rewrite step to stderr");

  auto* cx = app.add_subcommand("complexity", "Complexity of a formula");
  cx->add_option("-f,--formula", formula, "formula")->required();

  auto* proof = app.add_subcommand("proof", "Proof scripts");
  proof->require_subcommand(1);
  auto* verify = proof->add_subcommand("verify", "Check a proof script");
  verify->add_option("file", proof_path, "proof script")->required()->check(CLI::ExistingFile);

  auto* fal = app.add_subcommand("falsify", "Search random models for a counterexample");
  fal->add_option("-f,--formula", formula, "formula")->required();
  fal->add_option("--budget", budget, "number of models")->capture_default_str();
  fal->add_option("--seed", seed, "random seed")->capture_default_str();
  fal->add_option("--class", cls, "model class")
      ->check(CLI::IsMember({"all", "serial"}))
      ->capture_default_str();

  auto* repl = app.add_subcommand("repl", "Interactive announcement session");
  repl->add_option("-m,--model", model_path, "model file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      code = cmd_check(model_path, state, formula);
    } else if (*tr) {
      code = cmd_translate(formula, model_path, trace);
    } else if (*cx) {
      code = cmd_complexity(formula);
    } else if (*verify) {
      code = cmd_proof_verify(proof_path);
    } else if (*fal) {
      code = cmd_falsify(formula, budget, cls, seed);
    } else if (*repl) {
      code = luka::cli::run_repl(load_model(model_path), std::cin, std::cout, isatty(0) != 0);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
