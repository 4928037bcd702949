// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.
//
// Deterministic random generators shared by the unit and acceptance
// suites.  Everything is seeded explicitly so failures reproduce.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "sigforget/formula.hpp"
#include "sigforget/sat.hpp"

namespace testsupport {

inline const std::vector<std::string>& atom_pool() {
  static const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
  return pool;
}

inline sigforget::Signature pool_signature() {
  return sigforget::Signature(atom_pool().begin(), atom_pool().end());
}

inline sigforget::Formula random_formula(std::mt19937& rng,
                                         const std::vector<std::string>& atoms,
                                         int depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  const int r = pick(rng);
  if (depth <= 0 || r < 32) {
    const int c = pick(rng);
    if (c < 3) return sigforget::Formula::top();
    if (c < 6) return sigforget::Formula::bottom();
    std::uniform_int_distribution<std::size_t> ai(0, atoms.size() - 1);
    return sigforget::Formula::atom(atoms[ai(rng)]);
  }
  if (r < 47)
    return sigforget::Formula::negation(random_formula(rng, atoms, depth - 1));
  sigforget::Formula lhs = random_formula(rng, atoms, depth - 1);
  sigforget::Formula rhs = random_formula(rng, atoms, depth - 1);
  if (r < 70) return sigforget::Formula::conjunction(lhs, rhs);
  if (r < 93) return sigforget::Formula::disjunction(lhs, rhs);
  return sigforget::Formula::implication(lhs, rhs);
}

/// A random formula that is satisfiable on its own.
inline sigforget::Formula random_satisfiable_formula(
    std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  for (;;) {
    sigforget::Formula f = random_formula(rng, atoms, depth);
    if (sigforget::is_satisfiable(f).sat()) return f;
  }
}

/// Random knowledge base over a random prefix of the atom pool, at most
/// max_atoms atoms and max_formulas members, each member individually
/// satisfiable.  May or may not be consistent as a whole.
inline sigforget::KnowledgeBase random_kb(std::mt19937& rng,
                                          std::size_t max_atoms,
                                          std::size_t max_formulas,
                                          int depth = 3) {
  std::uniform_int_distribution<std::size_t> natoms(1, max_atoms);
  std::uniform_int_distribution<std::size_t> nformulas(1, max_formulas);
  const std::size_t k = natoms(rng);
  std::vector<std::string> atoms(atom_pool().begin(),
                                 atom_pool().begin() + k);
  sigforget::KnowledgeBase kb;
  const std::size_t target = nformulas(rng);
  while (kb.size() < target)
    kb.add(random_satisfiable_formula(rng, atoms, depth));
  return kb;
}

/// Random subset of a signature.
inline sigforget::Signature random_subset(std::mt19937& rng,
                                          const sigforget::Signature& sig) {
  std::uniform_int_distribution<int> coin(0, 1);
  sigforget::Signature out;
  for (const auto& a : sig)
    if (coin(rng)) out.insert(a);
  return out;
}

}  // namespace testsupport
