// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/forgetting.hpp"
#include "sigforget/formula.hpp"

namespace sigforget {

/// Canonical order on signature families: by size, then lexicographic.
bool signature_less(const Signature& a, const Signature& b);

enum class EnumStrategy {
  /// Duality-guided search seeded from a map solver (the default).
  Duality,
  /// Exhaustive scan of the subset lattice; an independent oracle.
  Brute,
};

std::string to_string(EnumStrategy strategy);

/// Complete subsignature analysis of a knowledge base under one
/// forgetting operator.
struct SubsigAnalysis {
  /// Minimal inconsistent subsignatures, sorted (size, then lex).
  std::vector<Signature> misig;
  /// Maximal consistent subsignatures, sorted (size, then lex).
  std::vector<Signature> mcsig;
  /// Self-contradictory subsignatures: the singleton MISig members.
  std::vector<Signature> scsig;
  /// Atoms in no MISig member (equivalently in every MCSig member).
  Signature free_atoms;
  /// One witness per MCSig member showing its projection consistent.
  std::vector<Assignment> mcsig_witnesses;
  EnumStrategy strategy = EnumStrategy::Duality;
};

/// Runs the analysis.  Duality alternates between a map solver proposing
/// unexplored subsignatures and grow/shrink calls on the renamed
/// consistency encoding, blocking each maximal consistent set downward
/// and each minimal inconsistent set upward.  Brute classifies every
/// subset of atoms_of(kb).  Raises CapError when the signature exceeds
/// caps.subsig_atoms (Duality) or caps.brute_subsig_atoms (Brute).
SubsigAnalysis analyze_subsignatures(const KnowledgeBase& kb, ForgetOp op,
                                     EnumStrategy strategy = EnumStrategy::Duality,
                                     const Caps& caps = {});

std::vector<Signature> enumerate_misig(const KnowledgeBase& kb, ForgetOp op,
                                       EnumStrategy strategy = EnumStrategy::Duality,
                                       const Caps& caps = {});
std::vector<Signature> enumerate_mcsig(const KnowledgeBase& kb, ForgetOp op,
                                       EnumStrategy strategy = EnumStrategy::Duality,
                                       const Caps& caps = {});
Signature free_atoms(const KnowledgeBase& kb, ForgetOp op,
                     EnumStrategy strategy = EnumStrategy::Duality,
                     const Caps& caps = {});

/// All minimal hitting sets of a family of signatures, drawn from the
/// union of the family, sorted (size, then lex).  The empty family has
/// the empty set as its only (vacuous) minimal hitting set; a family
/// containing the empty set has none.
std::vector<Signature> minimal_hitting_sets(
    const std::vector<Signature>& family);

/// The family of projections of kb onto its maximal consistent
/// subsignatures.  Members that forgetting reduced to tautologies are
/// dropped, matching how the projections read as repaired knowledge
/// bases; structural duplicates collapse.  Empty exactly when MCSig is
/// empty (possible under Ve only).
std::vector<KnowledgeBase> mckb(const KnowledgeBase& kb, ForgetOp op,
                                const Caps& caps = {});

/// Minimal inconsistent subsets of kb (formula-level), sorted by size
/// then memberwise.  Exhaustive over the subset lattice; |kb| is capped
/// by caps.subset_formulas.
std::vector<KnowledgeBase> enumerate_mis(const KnowledgeBase& kb,
                                         const Caps& caps = {});

/// Maximal consistent subsets of kb, same conventions.
std::vector<KnowledgeBase> enumerate_mcs(const KnowledgeBase& kb,
                                         const Caps& caps = {});

}  // namespace sigforget
