// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/errors.hpp"
#include "sigforget/formula.hpp"

namespace sigforget {

/// Two-valued interpretation; std::map keeps domains ordered.
using Assignment = std::map<std::string, bool>;

/// Replaces every occurrence of `atom` by `replacement`.
Formula substitute_uniform(const Formula& f, const std::string& atom,
                           const Formula& replacement);

/// Replaces the i-th occurrence (left-to-right) of `atom` by
/// replacements[i].  Raises DomainError when the replacement count does
/// not match the occurrence count.
Formula substitute_per_occurrence(const Formula& f, const std::string& atom,
                                  const std::vector<Formula>& replacements);

/// Propagates constants until fixpoint (true & phi => phi, phi -> false
/// => !phi, double negations dropped, ...).  The result is equivalent to
/// the input, also under the three-valued semantics, and never larger.
Formula simplify_constants(const Formula& f);

/// Negation normal form: implications expanded, negation pushed to atoms.
Formula to_nnf(const Formula& f);

/// A literal is an atom or its negation.
struct Literal {
  std::string atom;
  bool negated = false;

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.atom == b.atom && a.negated == b.negated;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    return a.atom < b.atom || (a.atom == b.atom && a.negated < b.negated);
  }
};

/// Clause view of a CNF: a conjunction of disjunctions of literals.  No
/// clauses means true; an empty clause means false.
using Clause = std::vector<Literal>;
using ClauseList = std::vector<Clause>;

/// Distributive CNF of `f` as a clause list.  Literals within a clause
/// and clauses within the list are sorted and exact duplicates dropped;
/// tautological clauses are kept so that the result stays equivalent to
/// the input under the three-valued semantics as well.  Raises CapError
/// ("cnf blowup") when the result would exceed caps.cnf_nodes nodes.
ClauseList to_cnf_clauses(const Formula& f, const Caps& caps = {});

/// The same CNF as a formula.
Formula to_cnf(const Formula& f, const Caps& caps = {});

/// Rebuilds a formula from a clause list.
Formula clauses_to_formula(const ClauseList& clauses);

/// Classical evaluation.  Raises DomainError when an atom of the formula
/// is missing from the assignment.
bool evaluate2(const Assignment& v, const Formula& f);
bool evaluate2(const Assignment& v, const KnowledgeBase& kb);

}  // namespace sigforget
