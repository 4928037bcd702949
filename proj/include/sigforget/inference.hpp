// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigforget/caps.hpp"
#include "sigforget/forgetting.hpp"
#include "sigforget/formula.hpp"
#include "sigforget/subsignature.hpp"

namespace sigforget {

/// Inevitable consequences hold in every repair candidate, weak ones in
/// at least one.
enum class InferenceMode { Inevitable, Weak };

/// What counts as a repair candidate: the projections onto maximal
/// consistent subsignatures, or the maximal consistent subsets.
enum class RepairKind { Signature, Subset };

std::string to_string(InferenceMode mode);
std::string to_string(RepairKind kind);

struct InferenceResult {
  bool entailed = false;
  /// True when the signature family was empty (possible under Ve with an
  /// individually unsatisfiable member): Inevitable then holds
  /// vacuously and Weak fails for lack of candidates.
  bool vacuous = false;
};

/// Signature-based inference: quantifies goal entailment over the
/// projections of kb onto its maximal consistent subsignatures.  The
/// entailment checks run on the renamed encoding, so no forgetting
/// expansion takes place.  The goal may mention atoms outside the
/// knowledge base.
InferenceResult infer_signature(const KnowledgeBase& kb, const Formula& goal,
                                InferenceMode mode, ForgetOp op,
                                const Caps& caps = {});

/// Subset-based inference: quantifies classical entailment over the
/// maximal consistent subsets of kb.  The family always contains at
/// least the empty subset, so the result is never vacuous.
InferenceResult infer_subset(const KnowledgeBase& kb, const Formula& goal,
                             InferenceMode mode, const Caps& caps = {});

/// Uniform entry point.  `op` is required for RepairKind::Signature and
/// ignored for RepairKind::Subset.
InferenceResult infer(const KnowledgeBase& kb, const Formula& goal,
                      RepairKind kind, InferenceMode mode,
                      std::optional<ForgetOp> op, const Caps& caps = {});

enum class Postulate {
  Reflexivity,
  LeftLogicalEquivalence,
  RightWeakening,
  Cut,
  CautiousMonotonicity,
};

std::string to_string(Postulate p);

/// One test instance: a knowledge base plus two formulas.  The checker
/// derives everything else (the equivalent K' for left logical
/// equivalence, the weakening alpha | beta for right weakening).
struct PostulateInstance {
  KnowledgeBase kb;
  Formula alpha;
  Formula beta;
};

struct PostulateViolation {
  Postulate postulate;
  std::size_t instance = 0;
  std::string detail;
};

struct PostulateCounts {
  std::size_t checked = 0;
  /// Instances whose premises held, so the conclusion was actually
  /// exercised.
  std::size_t applicable = 0;
  std::size_t violated = 0;
};

struct PostulateReport {
  std::map<Postulate, PostulateCounts> counts;
  std::vector<PostulateViolation> violations;

  bool clean() const { return violations.empty(); }
};

/// Checks the KLM-style postulates against a sample of instances for the
/// signature-based relation given by (mode, op).  Reflexivity and left
/// logical equivalence are checked under the consistency preconditions
/// they carry.
PostulateReport check_postulates(const std::vector<PostulateInstance>& sample,
                                 InferenceMode mode, ForgetOp op,
                                 const Caps& caps = {});

}  // namespace sigforget
