// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/formula.hpp"
#include "sigforget/subsignature.hpp"
#include "sigforget/transform.hpp"

namespace sigforget {

/// Truth values of the three-valued logic, ordered F < B < T.  B reads
/// "both true and false" and is designated alongside T.
enum class TruthValue3 : unsigned char { F = 0, B = 1, T = 2 };

char to_char(TruthValue3 v);

TruthValue3 neg3(TruthValue3 v);
TruthValue3 and3(TruthValue3 a, TruthValue3 b);
TruthValue3 or3(TruthValue3 a, TruthValue3 b);

/// Total three-valued interpretation over its key set.
using Interpretation3 = std::map<std::string, TruthValue3>;

/// Evaluates under the three-valued tables: conjunction is min,
/// disjunction is max, negation swaps T and F and fixes B; implication
/// is read as !L | R.  Raises DomainError on unassigned atoms.
TruthValue3 evaluate3(const Interpretation3& v, const Formula& f);

/// Designated-value satisfaction: the value is T or B.
bool satisfies3(const Interpretation3& v, const Formula& f);
bool satisfies3(const Interpretation3& v, const KnowledgeBase& kb);

/// Atoms mapped to B.
Signature b_set(const Interpretation3& v);

/// The classical part of v: the atoms with value T or F, mapped to
/// true/false.  Atoms valued B are absent.
Assignment classical_projection(const Interpretation3& v);

/// All three-valued models of kb over sig whose B-set is inclusion-
/// minimal among the models, in canonical order (B-set size, B-set lex,
/// then pointwise values).  sig must cover atoms_of(kb); |sig| is capped
/// by caps.lp_atoms.  Up to caps.lp_scan_atoms the 3^n scan is used;
/// beyond that, candidate B-sets are searched layer by layer, deciding
/// realizability of each candidate on the renamed consistency encoding.
std::vector<Interpretation3> minimal_models3(const KnowledgeBase& kb,
                                             const Signature& sig,
                                             const Caps& caps = {});
std::vector<Interpretation3> minimal_models3(const KnowledgeBase& kb,
                                             const Caps& caps = {});

/// Three-valued consequence: every minimal model of kb satisfies goal.
/// Models are taken over atoms_of(kb) plus the atoms of the goal.
bool infer_lp(const KnowledgeBase& kb, const Formula& goal,
              const Caps& caps = {});

/// Checks one instance of the bridge between the three-valued semantics
/// and occurrence-wise forgetting: satisfies3(v, f) must coincide with
/// the classical satisfaction of f with the B-valued atoms forgotten
/// occurrence-wise, evaluated under the classical projection of v.
/// Returns whether the two sides agree (they always should).
bool crosscheck_satisfaction_bridge(const Interpretation3& v, const Formula& f,
                       const Caps& caps = {});

/// The B-sets of the minimal models of kb, compared against the two
/// candidate characterizations: the minimal inconsistent subsignatures
/// themselves (the literal reading, which fails in general) and the
/// complements of the maximal consistent subsignatures (which holds).
struct BsetReport {
  std::vector<Signature> minimal_b_sets;
  std::vector<Signature> misig;
  std::vector<Signature> mcsig_complements;
  bool matches_misig = false;
  bool matches_mcsig_complements = false;
  /// kBsetDiscrepancyNote when matches_misig is false, else empty.
  std::string note;
};

/// Emitted verbatim whenever the minimal B-sets differ from MISig.
inline constexpr const char* kBsetDiscrepancyNote =
    "minimal B-sets differ from MISig: the literal reading \"v^-1(B) in "
    "MISig\" fails on this input; the minimal B-sets instead equal the "
    "MCSig complements, i.e. the minimal hitting sets of MISig";

BsetReport minimal_b_sets_report(const KnowledgeBase& kb,
                                 const Caps& caps = {});

/// Just the family of minimal B-sets, canonical order.
std::vector<Signature> minimal_b_sets(const KnowledgeBase& kb,
                                      const Caps& caps = {});

}  // namespace sigforget
