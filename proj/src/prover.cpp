#include "six/prover.hpp"

namespace six {

namespace {

ProofTree fit(ProofTree t, const Sequent& target) {
  if (t.conclusion == target) return t;
  return build::weaken_to(std::move(t), target);
}

ProofTree prove_valid(const Sequent& s, const ProverOptions& options) {
  for (const auto& f : s.antecedent()) {
    if (is_lattice_of_blocks(f)) continue;
    const Formula g = to_conjunctive_form(f, options.normal_form).as_formula();
    ProofTree rest = prove_valid(s.remove_left(f).add_left(g), options);
    ProofTree step = build::macro("conjunctive-form", Sequent({f}, {g}));
    return fit(build::cut(std::move(step), std::move(rest), g), s);
  }
  for (const auto& f : s.succedent()) {
    if (is_lattice_of_blocks(f)) continue;
    const Formula g = to_conjunctive_form(f, options.normal_form).as_formula();
    ProofTree rest = prove_valid(s.remove_right(f).add_right(g), options);
    ProofTree step = build::macro("conjunctive-form", Sequent({g}, {f}));
    return fit(build::cut(std::move(rest), std::move(step), g), s);
  }
  return prove_block_lattice(s, options.limits);
}

}  // namespace

ProofResult prove(const Sequent& s, ProverOptions options) {
  Validity v = valid(s, options.limits);
  if (!v.valid) return {std::nullopt, std::move(v.countermodel)};
  return {prove_valid(s, options), std::nullopt};
}

}  // namespace six
