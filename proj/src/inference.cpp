// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/inference.hpp"

#include <utility>

#include "sigforget/sat.hpp"

namespace sigforget {

std::string to_string(InferenceMode mode) {
  return mode == InferenceMode::Inevitable ? "inevitable" : "weak";
}

std::string to_string(RepairKind kind) {
  return kind == RepairKind::Signature ? "signature" : "subset";
}

InferenceResult infer_signature(const KnowledgeBase& kb, const Formula& goal,
                                InferenceMode mode, ForgetOp op,
                                const Caps& caps) {
  SubsigAnalysis analysis =
      analyze_subsignatures(kb, op, EnumStrategy::Duality, caps);
  if (analysis.mcsig.empty()) {
    // No repair candidates at all: the universal reading holds vacuously,
    // the existential one has nothing to offer.
    return {mode == InferenceMode::Inevitable, true};
  }
  const Signature at = atoms_of(kb);
  for (const auto& S : analysis.mcsig) {
    bool holds = forgotten_entails(kb, set_difference(at, S), op, goal, caps);
    if (mode == InferenceMode::Inevitable && !holds) return {false, false};
    if (mode == InferenceMode::Weak && holds) return {true, false};
  }
  return {mode == InferenceMode::Inevitable, false};
}

InferenceResult infer_subset(const KnowledgeBase& kb, const Formula& goal,
                             InferenceMode mode, const Caps& caps) {
  std::vector<KnowledgeBase> mcs = enumerate_mcs(kb, caps);
  for (const auto& subset : mcs) {
    bool holds = entails(subset, goal, caps);
    if (mode == InferenceMode::Inevitable && !holds) return {false, false};
    if (mode == InferenceMode::Weak && holds) return {true, false};
  }
  return {mode == InferenceMode::Inevitable, false};
}

InferenceResult infer(const KnowledgeBase& kb, const Formula& goal,
                      RepairKind kind, InferenceMode mode,
                      std::optional<ForgetOp> op, const Caps& caps) {
  if (kind == RepairKind::Signature) {
    if (!op)
      throw DomainError("signature-based inference requires a forgetting "
                        "operator");
    return infer_signature(kb, goal, mode, *op, caps);
  }
  return infer_subset(kb, goal, mode, caps);
}

std::string to_string(Postulate p) {
  switch (p) {
    case Postulate::Reflexivity:
      return "reflexivity";
    case Postulate::LeftLogicalEquivalence:
      return "left-logical-equivalence";
    case Postulate::RightWeakening:
      return "right-weakening";
    case Postulate::Cut:
      return "cut";
    case Postulate::CautiousMonotonicity:
      return "cautious-monotonicity";
  }
  return "?";
}

namespace {

// An equivalent syntactic variant of kb, used to exercise left logical
// equivalence: every member is double-negated.
KnowledgeBase double_negate(const KnowledgeBase& kb) {
  KnowledgeBase out;
  for (const auto& f : kb)
    out.add(Formula::negation(Formula::negation(f)));
  return out;
}

}  // namespace

PostulateReport check_postulates(const std::vector<PostulateInstance>& sample,
                                 InferenceMode mode, ForgetOp op,
                                 const Caps& caps) {
  PostulateReport report;
  for (Postulate p :
       {Postulate::Reflexivity, Postulate::LeftLogicalEquivalence,
        Postulate::RightWeakening, Postulate::Cut,
        Postulate::CautiousMonotonicity})
    report.counts[p] = {};

  auto derives = [&](const KnowledgeBase& kb, const Formula& goal) {
    return infer_signature(kb, goal, mode, op, caps).entailed;
  };
  auto fail = [&](Postulate p, std::size_t i, const std::string& detail) {
    ++report.counts[p].violated;
    report.violations.push_back({p, i, detail});
  };

  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& [kb, alpha, beta] = sample[i];

    {
      auto& c = report.counts[Postulate::Reflexivity];
      ++c.checked;
      if (is_satisfiable(alpha, caps).sat()) {
        ++c.applicable;
        if (!derives(KnowledgeBase{alpha}, alpha))
          fail(Postulate::Reflexivity, i,
               "consistent alpha " + to_string(alpha) +
                   " does not derive itself");
      }
    }

    {
      auto& c = report.counts[Postulate::LeftLogicalEquivalence];
      ++c.checked;
      if (is_satisfiable(kb, caps).sat() && derives(kb, alpha)) {
        ++c.applicable;
        KnowledgeBase other = double_negate(kb);
        if (!derives(other, alpha))
          fail(Postulate::LeftLogicalEquivalence, i,
               "K = " + to_string(kb) + " derives " + to_string(alpha) +
                   " but the double-negated variant does not");
      }
    }

    {
      auto& c = report.counts[Postulate::RightWeakening];
      ++c.checked;
      if (derives(kb, alpha)) {
        ++c.applicable;
        Formula weaker = Formula::disjunction(alpha, beta);
        if (!derives(kb, weaker))
          fail(Postulate::RightWeakening, i,
               "K = " + to_string(kb) + " derives " + to_string(alpha) +
                   " but not the weaker " + to_string(weaker));
      }
    }

    {
      auto& c = report.counts[Postulate::Cut];
      ++c.checked;
      KnowledgeBase extended = kb;
      extended.add(alpha);
      if (derives(extended, beta) && derives(kb, alpha)) {
        ++c.applicable;
        if (!derives(kb, beta))
          fail(Postulate::Cut, i,
               "K = " + to_string(kb) + ", alpha = " + to_string(alpha) +
                   ", beta = " + to_string(beta));
      }
    }

    {
      auto& c = report.counts[Postulate::CautiousMonotonicity];
      ++c.checked;
      if (derives(kb, alpha) && derives(kb, beta)) {
        ++c.applicable;
        KnowledgeBase extended = kb;
        extended.add(alpha);
        if (!derives(extended, beta))
          fail(Postulate::CautiousMonotonicity, i,
               "K = " + to_string(kb) + ", alpha = " + to_string(alpha) +
                   ", beta = " + to_string(beta));
      }
    }
  }
  return report;
}

}  // namespace sigforget
