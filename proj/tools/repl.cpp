#include "repl.hpp"

#include <iostream>
#include <sstream>
#include <string>

#include "luka/query.hpp"
#include "luka/semantics.hpp"
#include "luka/syntax.hpp"

namespace luka::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits "<formula> >= <g>" at the last top-level ">=".
std::pair<Formula, Threshold> parse_announcement(const std::string& text) {
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == '>' && text[i + 1] == '=') split = i;
  }
  if (split == std::string::npos) throw std::invalid_argument("usage: announce <formula> >= <g>");
  Formula content = parse_formula(text.substr(0, split));
  Rational g = parse_rational(trim(text.substr(split + 2)));
  if (!is_announcement_free(content)) {
    throw std::invalid_argument("announced content must be announcement-free");
  }
  return {content, Threshold(g)};
}

std::string join_or_none(const std::vector<std::string>& v) {
  if (v.empty()) return "(none)";
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

}  // namespace

int run_repl(const Model& m, std::istream& in, std::ostream& out, bool prompt) {
  UpdateTrace trace = run_announcements(m, {});
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream words(line);
    std::string cmd;
    words >> cmd;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    try {
      if (cmd == "quit" || cmd == "exit") {
        break;
      } else if (cmd == "help") {
        out << "announce <formula> >= <g> | eval <state> <formula> | states | undo | trace | quit\n";
      } else if (cmd == "announce") {
        auto [content, g] = parse_announcement(rest);
        extend_trace(trace, content, g);
        out << "removed: " << join_or_none(trace.steps.back().removed) << '\n';
      } else if (cmd == "eval") {
        std::istringstream args(rest);
        std::string state;
        args >> state;
        std::string formula;
        std::getline(args, formula);
        if (state.empty() || trim(formula).empty()) {
          throw std::invalid_argument("usage: eval <state> <formula>");
        }
        TruthValue v = evaluate(trace.current(), state, parse_formula(formula));
        out << make_query_result(v).format() << '\n';
      } else if (cmd == "states") {
        out << join_or_none(trace.current().states()) << '\n';
      } else if (cmd == "undo") {
        if (trace.steps.empty()) {
          out << "nothing to undo\n";
        } else {
          trace.steps.pop_back();
          out << "undone; " << trace.current().size() << " states\n";
        }
      } else if (cmd == "trace") {
        out << "0: initial, " << trace.initial.size() << " states\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          const auto& s = trace.steps[i];
          out << i + 1 << ": [" << print_formula(s.content) << " >= "
              << rational_text(s.threshold.value()) << "] removed: " << join_or_none(s.removed)
              << ", " << s.surviving.size() << " states\n";
        }
      } else {
        out << "error: unknown command '" << cmd << "' (try help)\n";
      }
    } catch (const EmptyUpdateError& e) {
      out << "error: " << e.what() << "; trace unchanged\n";
    } catch (const std::exception& e) {
      out << "error: " << e.what() << '\n';
    }
  }
  return 0;
}

}  // namespace luka::cli
