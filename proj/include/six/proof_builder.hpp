#pragma once

#include <string>
#include <vector>

#include "six/sequent.hpp"

/// Constructors for single inference steps.  Each helper computes the
/// conclusion from its premises; active formulas missing from a premise are
/// added by weakening first.  Misuse throws std::logic_error.
namespace six::build {

ProofTree axiom(const Formula& a);
ProofTree bottom_axiom();
ProofTree top_axiom();
ProofTree first_modal(const Formula& a);
ProofTree second_modal(const Formula& a);

ProofTree weaken_left(ProofTree t, const Formula& f);
ProofTree weaken_right(ProofTree t, const Formula& f);
/// Requires the conclusion of t to be contained in `target`.
ProofTree weaken_to(ProofTree t, const Sequent& target);

/// From G1 => D1, a and a, G2 => D2 derive G1, G2 => D1, D2.
ProofTree cut(ProofTree left, ProofTree right, const Formula& a);

ProofTree and_left(ProofTree t, const Formula& conj);
ProofTree and_right(ProofTree a, ProofTree b, const Formula& conj);
ProofTree or_left(ProofTree a, ProofTree b, const Formula& disj);
ProofTree or_right(ProofTree t, const Formula& disj);
/// From a => b derive ~b => ~a.
ProofTree neg(ProofTree t);
ProofTree negneg_left(ProofTree t, const Formula& negneg);
ProofTree negneg_right(ProofTree t, const Formula& negneg);
ProofTree nabla_left(ProofTree t, const Formula& nabla);
ProofTree negnabla_left(ProofTree t, const Formula& nabla_neg_nabla);

ProofTree macro(std::string name, Sequent conclusion, std::vector<ProofTree> premises = {});

}  // namespace six::build
