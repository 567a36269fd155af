#include "luka/falsify.hpp"

#include "luka/random.hpp"
#include "luka/semantics.hpp"

namespace luka {

std::optional<Counterexample> falsify(const Formula& f, std::size_t budget, ModelClass cls,
                                      std::uint64_t seed) {
  const auto atom_set = atoms_of(f);
  const auto agent_set = agents_of(f);
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  const std::vector<std::string> agents(agent_set.begin(), agent_set.end());
  ModelShape shape;
  shape.serial = cls == ModelClass::Serial;

  Rng rng(seed);
  for (std::size_t i = 0; i < budget; ++i) {
    Model m = random_model(rng, agents, atoms, shape);
    Evaluator ev(m);
    const auto& vals = ev.evaluate_all(f);
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (!vals[s].is_one()) return Counterexample{m, m.states()[s], vals[s]};
    }
  }
  return std::nullopt;
}

}  // namespace luka
