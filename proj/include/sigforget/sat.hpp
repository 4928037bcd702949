// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/formula.hpp"
#include "sigforget/transform.hpp"

namespace sigforget {

enum class SatStatus { Satisfiable, Unsatisfiable };

struct SatResult {
  SatStatus status = SatStatus::Unsatisfiable;
  /// Present iff satisfiable; its domain is exactly the atoms of the
  /// input (unconstrained atoms default to false).
  std::optional<Assignment> witness;

  bool sat() const { return status == SatStatus::Satisfiable; }
};

/// Satisfiability of the conjunction of the given formulas, decided by a
/// DPLL search over a definitional clause encoding.  The empty collection
/// is satisfiable with an empty witness.  Raises CapError when the search
/// exceeds caps.solver_decisions branching decisions.
SatResult is_satisfiable(const std::vector<Formula>& fs,
                         const Caps& caps = {});
SatResult is_satisfiable(const KnowledgeBase& kb, const Caps& caps = {});
SatResult is_satisfiable(const Formula& f, const Caps& caps = {});

/// Classical entailment: premises ∧ ¬goal unsatisfiable.
bool entails(const std::vector<Formula>& premises, const Formula& goal,
             const Caps& caps = {});
bool entails(const KnowledgeBase& kb, const Formula& goal,
             const Caps& caps = {});

/// Classical equivalence of two formulas.
bool equivalent(const Formula& f, const Formula& g, const Caps& caps = {});

/// Equivalence of two knowledge bases read as conjunctions.
bool kb_equivalent(const KnowledgeBase& a, const KnowledgeBase& b,
                   const Caps& caps = {});

/// Elementwise equivalence: every member of `a` is equivalent to some
/// member of `b` and vice versa.
bool elementwise_equivalent(const KnowledgeBase& a, const KnowledgeBase& b,
                            const Caps& caps = {});

/// All models of the conjunction over exactly the atoms in `sig`, in
/// lexicographic order (atoms sorted by name, false before true).  `sig`
/// must cover the atoms of the input; |sig| is capped by
/// caps.enum_model_atoms.  Intended as a small, independent oracle.
std::vector<Assignment> enumerate_models(const std::vector<Formula>& fs,
                                         const Signature& sig,
                                         const Caps& caps = {});

/// Indexes of members that are unsatisfiable on their own.
std::vector<std::size_t> unsatisfiable_members(const KnowledgeBase& kb,
                                               const Caps& caps = {});

}  // namespace sigforget
