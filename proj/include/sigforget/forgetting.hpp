// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/formula.hpp"
#include "sigforget/sat.hpp"

namespace sigforget {

/// The two forgetting operators.
///
/// Ve eliminates a variable by the classical expansion
///   f [a -> true]  |  f [a -> false]
/// applied atom by atom (in lexicographic order; the result is
/// order-independent up to equivalence).
///
/// Na treats each syntactic occurrence independently: the result is the
/// disjunction of f with every combination of true/false plugged into
/// the occurrences of the forgotten atoms.  Na keeps more models than Ve
/// on inconsistent inputs, which is the point of the whole exercise.
enum class ForgetOp { Ve, Na };

std::string to_string(ForgetOp op);

/// Forgets S in a single formula.  Atoms of S not occurring in f are
/// ignored; forgetting the empty (effective) set returns f unchanged.
/// Results are constant-simplified.  Raises CapError when the expansion
/// would exceed the relevant budget (caps.forget_atoms for Ve,
/// caps.forget_occurrences for Na, counted per formula).
Formula forget_formula(const Formula& f, const Signature& S, ForgetOp op,
                       const Caps& caps = {});

/// Formula-wise forgetting over a knowledge base; structural duplicates
/// collapse because knowledge bases are sets.
KnowledgeBase forget_kb(const KnowledgeBase& kb, const Signature& S,
                        ForgetOp op, const Caps& caps = {});

/// Occurrence-wise forgetting specialized to CNF inputs: a clause that
/// contains a literal over an atom of S is replaced by true (dropped),
/// everything else is kept verbatim.  Equivalent to forget_formula with
/// Na on the same input, but linear instead of exponential.  Raises
/// DomainError when f is not in conjunctive normal form.
Formula forget_na_cnf_fast(const Formula& f, const Signature& S,
                           const Caps& caps = {});

/// Projection onto a subsignature: forgets atoms_of(kb) minus keep.
/// Raises DomainError when keep is not a subset of atoms_of(kb).
KnowledgeBase project(const KnowledgeBase& kb, const Signature& keep,
                      ForgetOp op, const Caps& caps = {});

/// Polynomial-size satisfiability encoding of formula-wise forgetting:
/// instead of expanding disjunctions, forgotten atoms are renamed apart,
/// per formula for Ve and per occurrence for Na.  The conjunction of the
/// renamed formulas is satisfiable over kept + fresh atoms exactly when
/// the expanded forgetting result is satisfiable over the kept atoms.
struct RenamedEncoding {
  std::vector<Formula> formulas;
  Signature kept_atoms;
  Signature fresh_atoms;
  /// (member index, original atom, occurrence index) -> fresh atom.
  std::map<std::tuple<std::size_t, std::string, std::size_t>, std::string>
      renames;
};

RenamedEncoding build_renamed_encoding(const KnowledgeBase& kb,
                                       const Signature& forget, ForgetOp op);

/// Whether the projection of kb onto S is consistent, decided on the
/// renamed encoding without expanding any disjunction.  Requires
/// S ⊆ atoms_of(kb).
bool is_consistent_subsignature(const KnowledgeBase& kb, const Signature& S,
                                ForgetOp op, const Caps& caps = {});

/// Same decision, but also returns a witness over S when consistent.
std::optional<Assignment> consistent_subsignature_witness(
    const KnowledgeBase& kb, const Signature& S, ForgetOp op,
    const Caps& caps = {});

/// Whether forget_kb(kb, forget, op) entails goal, decided on the
/// renamed encoding.  The goal may mention forgotten atoms (or atoms
/// outside kb altogether); they do not occur in the forgetting result,
/// so they are unconstrained on the premise side.
bool forgotten_entails(const KnowledgeBase& kb, const Signature& forget,
                       ForgetOp op, const Formula& goal,
                       const Caps& caps = {});

}  // namespace sigforget
