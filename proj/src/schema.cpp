#include "luka/schema.hpp"

#include <algorithm>
#include <array>

#include "luka/core.hpp"

namespace luka {

namespace {

using F = Formula;

struct View {
  const Substitution& s;
  F f(const char* k) const { return s.formulas.at(k); }
  std::string a() const { return s.agents.at("a"); }
  Threshold g(const char* k = "g") const { return s.thresholds.at(k); }
};

F neg(F x) { return F::negation(std::move(x)); }
F conj(F x, F y) { return F::conj(std::move(x), std::move(y)); }
F imp(F x, F y) { return F::impl(std::move(x), std::move(y)); }
F iff(F x, F y) { return F::iff(std::move(x), std::move(y)); }
F geq(F x, Threshold g) { return F::geq(std::move(x), std::move(g)); }
F ann(F c, Threshold g, F b) { return F::announce(std::move(c), std::move(g), std::move(b)); }

std::optional<std::string> no_condition(const Substitution&) { return std::nullopt; }

std::optional<std::string> p_is_atom(const Substitution& s) {
  if (s.formulas.at("p").kind() != Kind::Atom) return "metavariable p must be bound to an atom";
  return std::nullopt;
}

Schema make(std::string name, std::vector<std::string> fv, std::vector<std::string> av,
            std::vector<std::string> tv, std::function<F(const View&)> body,
            std::function<std::optional<std::string>(const Substitution&)> side = no_condition) {
  return Schema{std::move(name), std::move(fv), std::move(av), std::move(tv),
                [body = std::move(body)](const Substitution& s) { return body(View{s}); },
                std::move(side)};
}

const std::array<Schema, 14>& axiom_table() {
  static const std::array<Schema, 14> table = {
      // (φ & ψ) -> φ
      make("A1", {"phi", "psi"}, {}, {},
           [](const View& v) { return imp(conj(v.f("phi"), v.f("psi")), v.f("phi")); }),
      // (φ & ψ) -> (ψ & φ)
      make("A2", {"phi", "psi"}, {}, {},
           [](const View& v) {
             return imp(conj(v.f("phi"), v.f("psi")), conj(v.f("psi"), v.f("phi")));
           }),
      // ~~φ <-> φ
      make("L0", {"phi"}, {}, {}, [](const View& v) { return iff(neg(neg(v.f("phi"))), v.f("phi")); }),
      // (~φ -> ~ψ) -> (ψ -> φ)
      make("L1", {"phi", "psi"}, {}, {},
           [](const View& v) {
             return imp(imp(neg(v.f("phi")), neg(v.f("psi"))), imp(v.f("psi"), v.f("phi")));
           }),
      // ((φ1 -> ψ1) & (φ2 -> ψ2)) -> ((φ1 & φ2) -> (ψ1 & ψ2))
      make("L2", {"phi1", "psi1", "phi2", "psi2"}, {}, {},
           [](const View& v) {
             return imp(conj(imp(v.f("phi1"), v.f("psi1")), imp(v.f("phi2"), v.f("psi2"))),
                        imp(conj(v.f("phi1"), v.f("phi2")), conj(v.f("psi1"), v.f("psi2"))));
           }),
      // (B φ & B (φ -> ψ)) -> B ψ
      make("LB1", {"phi", "psi"}, {"a"}, {},
           [](const View& v) {
             return imp(conj(F::believes(v.a(), v.f("phi")),
                             F::believes(v.a(), imp(v.f("phi"), v.f("psi")))),
                        F::believes(v.a(), v.f("psi")));
           }),
      // ~B bot
      make("LB2", {}, {"a"}, {}, [](const View& v) { return neg(F::believes(v.a(), F::bottom())); }),
      // (φ & ψ)>=g -> (φ>=g & ψ>=g)
      make("LG0", {"phi", "psi"}, {}, {"g"},
           [](const View& v) {
             return imp(geq(conj(v.f("phi"), v.f("psi")), v.g()),
                        conj(geq(v.f("phi"), v.g()), geq(v.f("psi"), v.g())));
           }),
      // (φ>=g & ψ>=g') -> (φ>=g'' & ψ>=g'), provided g >= g''
      make("LG1", {"phi", "psi"}, {}, {"g", "g'", "g''"},
           [](const View& v) {
             return imp(conj(geq(v.f("phi"), v.g()), geq(v.f("psi"), v.g("g'"))),
                        conj(geq(v.f("phi"), v.g("g''")), geq(v.f("psi"), v.g("g'"))));
           },
           [](const Substitution& s) -> std::optional<std::string> {
             const auto& g = s.thresholds.at("g");
             const auto& g2 = s.thresholds.at("g''");
             if (g < g2) {
               return "side condition g >= g'' violated (" + rational_text(g.value()) + " < " +
                      rational_text(g2.value()) + ")";
             }
             return std::nullopt;
           }),
      // [φ>=g]p <-> ((φ>=g) -> p)
      make("LD1", {"phi", "p"}, {}, {"g"},
           [](const View& v) {
             return iff(ann(v.f("phi"), v.g(), v.f("p")), imp(geq(v.f("phi"), v.g()), v.f("p")));
           },
           p_is_atom),
      // [φ>=g]~ψ <-> ((φ>=g) -> ~[φ>=g]ψ)
      make("LD2", {"phi", "psi"}, {}, {"g"},
           [](const View& v) {
             return iff(ann(v.f("phi"), v.g(), neg(v.f("psi"))),
                        imp(geq(v.f("phi"), v.g()), neg(ann(v.f("phi"), v.g(), v.f("psi")))));
           }),
      // [φ>=g](ψ & χ) <-> ([φ>=g]ψ & [φ>=g]χ)
      make("LD3", {"phi", "psi", "chi"}, {}, {"g"},
           [](const View& v) {
             return iff(ann(v.f("phi"), v.g(), conj(v.f("psi"), v.f("chi"))),
                        conj(ann(v.f("phi"), v.g(), v.f("psi")), ann(v.f("phi"), v.g(), v.f("chi"))));
           }),
      // [φ>=g](ψ -> χ) <-> [φ>=g]~(ψ & ~χ)
      make("LD4", {"phi", "psi", "chi"}, {}, {"g"},
           [](const View& v) {
             return iff(ann(v.f("phi"), v.g(), imp(v.f("psi"), v.f("chi"))),
                        ann(v.f("phi"), v.g(), neg(conj(v.f("psi"), neg(v.f("chi"))))));
           }),
      // [φ>=g]B_a ψ <-> ((φ>=g) -> B_a [φ>=g]ψ)
      make("LD5", {"phi", "psi"}, {"a"}, {"g"},
           [](const View& v) {
             return iff(ann(v.f("phi"), v.g(), F::believes(v.a(), v.f("psi"))),
                        imp(geq(v.f("phi"), v.g()),
                            F::believes(v.a(), ann(v.f("phi"), v.g(), v.f("psi")))));
           }),
  };
  return table;
}

}  // namespace

const std::vector<SchemaId>& all_schema_ids() {
  static const std::vector<SchemaId> ids = {
      SchemaId::A1,  SchemaId::A2,  SchemaId::L0,  SchemaId::L1,  SchemaId::L2,
      SchemaId::LB1, SchemaId::LB2, SchemaId::LG0, SchemaId::LG1, SchemaId::LD1,
      SchemaId::LD2, SchemaId::LD3, SchemaId::LD4, SchemaId::LD5};
  return ids;
}

const Schema& axiom_schema(SchemaId id) { return axiom_table()[static_cast<std::size_t>(id)]; }

std::string_view schema_name(SchemaId id) { return axiom_schema(id).name; }

std::optional<SchemaId> schema_from_name(std::string_view name) {
  for (auto id : all_schema_ids()) {
    if (schema_name(id) == name) return id;
  }
  return std::nullopt;
}

const std::map<std::string, Schema, std::less<>>& theorem_registry() {
  static const auto registry = [] {
    std::map<std::string, Schema, std::less<>> r;
    auto add = [&](Schema s) { r.emplace(s.name, std::move(s)); };
    // φ -> (ψ -> (φ & ψ))
    add(make("conj_intro", {"phi", "psi"}, {}, {}, [](const View& v) {
      return imp(v.f("phi"), imp(v.f("psi"), conj(v.f("phi"), v.f("psi"))));
    }));
    // (φ -> ψ) -> (~ψ -> ~φ)
    add(make("contraposition", {"phi", "psi"}, {}, {}, [](const View& v) {
      return imp(imp(v.f("phi"), v.f("psi")), imp(neg(v.f("psi")), neg(v.f("phi"))));
    }));
    // (φ -> ψ) -> ((ψ -> χ) -> (φ -> χ))
    add(make("transitivity", {"phi", "psi", "chi"}, {}, {}, [](const View& v) {
      return imp(imp(v.f("phi"), v.f("psi")),
                 imp(imp(v.f("psi"), v.f("chi")), imp(v.f("phi"), v.f("chi"))));
    }));
    // (φ -> ψ) <-> ~(φ & ~ψ)
    add(make("impl_neg_conj", {"phi", "psi"}, {}, {}, [](const View& v) {
      return iff(imp(v.f("phi"), v.f("psi")), neg(conj(v.f("phi"), neg(v.f("psi")))));
    }));
    return r;
  }();
  return registry;
}

Formula instantiate(const Schema& schema, const Substitution& subst) {
  auto check = [&](const auto& bound, const std::vector<std::string>& vars, const char* what) {
    for (const auto& v : vars) {
      if (!bound.contains(v)) {
        throw SchemaError(schema.name + ": missing binding for " + what + " '" + v + "'");
      }
    }
    for (const auto& [k, _] : bound) {
      if (std::find(vars.begin(), vars.end(), k) == vars.end()) {
        throw SchemaError(schema.name + ": unknown " + what + " '" + k + "'");
      }
    }
  };
  check(subst.formulas, schema.formula_vars, "formula metavariable");
  check(subst.agents, schema.agent_vars, "agent metavariable");
  check(subst.thresholds, schema.threshold_vars, "threshold metavariable");
  for (const auto& [_, agent] : subst.agents) {
    if (!is_identifier(agent)) throw SchemaError(schema.name + ": invalid agent '" + agent + "'");
  }
  if (auto err = schema.side_condition(subst)) throw SchemaError(schema.name + ": " + *err);
  try {
    return schema.build(subst);
  } catch (const FormulaError& e) {
    throw SchemaError(schema.name + ": " + e.what());
  }
}

Formula instantiate_schema(SchemaId id, const Substitution& subst) {
  return instantiate(axiom_schema(id), subst);
}

Formula instantiate_theorem(std::string_view name, const Substitution& subst) {
  const auto& reg = theorem_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw SchemaError("unknown theorem '" + std::string(name) + "'");
  return instantiate(it->second, subst);
}

}  // namespace luka
