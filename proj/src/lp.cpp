// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

#include "sigforget/forgetting.hpp"

namespace sigforget {

char to_char(TruthValue3 v) {
  switch (v) {
    case TruthValue3::F:
      return 'F';
    case TruthValue3::B:
      return 'B';
    case TruthValue3::T:
      return 'T';
  }
  return '?';
}

TruthValue3 neg3(TruthValue3 v) {
  switch (v) {
    case TruthValue3::F:
      return TruthValue3::T;
    case TruthValue3::T:
      return TruthValue3::F;
    case TruthValue3::B:
      return TruthValue3::B;
  }
  return TruthValue3::B;
}

TruthValue3 and3(TruthValue3 a, TruthValue3 b) { return a < b ? a : b; }

TruthValue3 or3(TruthValue3 a, TruthValue3 b) { return a < b ? b : a; }

TruthValue3 evaluate3(const Interpretation3& v, const Formula& f) {
  switch (f.kind()) {
    case Connective::True:
      return TruthValue3::T;
    case Connective::False:
      return TruthValue3::F;
    case Connective::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end())
        throw DomainError("atom '" + f.atom_name() +
                          "' is not assigned a three-valued value");
      return it->second;
    }
    case Connective::Not:
      return neg3(evaluate3(v, f.operand()));
    case Connective::And:
      return and3(evaluate3(v, f.lhs()), evaluate3(v, f.rhs()));
    case Connective::Or:
      return or3(evaluate3(v, f.lhs()), evaluate3(v, f.rhs()));
    case Connective::Implies:
      return or3(neg3(evaluate3(v, f.lhs())), evaluate3(v, f.rhs()));
  }
  return TruthValue3::F;
}

bool satisfies3(const Interpretation3& v, const Formula& f) {
  return evaluate3(v, f) != TruthValue3::F;
}

bool satisfies3(const Interpretation3& v, const KnowledgeBase& kb) {
  for (const auto& f : kb)
    if (!satisfies3(v, f)) return false;
  return true;
}

Signature b_set(const Interpretation3& v) {
  Signature out;
  for (const auto& [atom, value] : v)
    if (value == TruthValue3::B) out.insert(atom);
  return out;
}

Assignment classical_projection(const Interpretation3& v) {
  Assignment out;
  for (const auto& [atom, value] : v) {
    if (value == TruthValue3::T) out[atom] = true;
    if (value == TruthValue3::F) out[atom] = false;
  }
  return out;
}

namespace {

bool interpretation_less(const Interpretation3& a, const Interpretation3& b) {
  Signature ba = b_set(a);
  Signature bb = b_set(b);
  if (signature_less(ba, bb)) return true;
  if (signature_less(bb, ba)) return false;
  // Same B-set: compare pointwise (domains are equal by construction).
  return a < b;
}

void sort_models(std::vector<Interpretation3>& models) {
  std::sort(models.begin(), models.end(), interpretation_less);
}

std::vector<Interpretation3> scan_minimal_models(const KnowledgeBase& kb,
                                                 const std::vector<std::string>& atoms) {
  const std::size_t n = atoms.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  std::vector<Interpretation3> models;
  std::vector<Signature> bsets;
  Interpretation3 v;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[atoms[i]] = static_cast<TruthValue3>(rest % 3);
      rest /= 3;
    }
    if (satisfies3(v, kb)) {
      models.push_back(v);
      bsets.push_back(b_set(v));
    }
  }

  std::vector<Interpretation3> minimal;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool is_minimal = true;
    for (std::size_t j = 0; j < models.size() && is_minimal; ++j) {
      if (i == j) continue;
      if (bsets[j] != bsets[i] && is_subset(bsets[j], bsets[i]))
        is_minimal = false;
    }
    if (is_minimal) minimal.push_back(models[i]);
  }
  sort_models(minimal);
  return minimal;
}

std::vector<Interpretation3> layered_minimal_models(
    const KnowledgeBase& kb, const std::vector<std::string>& atoms,
    const Caps& caps) {
  const Signature at = atoms_of(kb);
  const std::vector<std::string> kb_atoms(at.begin(), at.end());
  const std::size_t n = kb_atoms.size();

  // An unconstrained atom in a minimal model is never valued B, so
  // candidate B-sets range over the knowledge base atoms only.
  // Realizability of a candidate B is classical satisfiability of the
  // knowledge base with B forgotten occurrence-wise, decided on the
  // renamed encoding; realizable B-sets are closed upward.
  auto realizable = [&](const Signature& B) {
    return is_consistent_subsignature(kb, set_difference(at, B), ForgetOp::Na,
                                      caps);
  };

  std::vector<Signature> minimal_bsets;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::size_t size = 0; size <= n; ++size) {
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      Signature B;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint32_t{1} << i)) B.insert(kb_atoms[i]);
      bool covered = false;
      for (const auto& seen : minimal_bsets)
        if (is_subset(seen, B)) {
          covered = true;
          break;
        }
      if (!covered && realizable(B)) minimal_bsets.push_back(std::move(B));
    }
  }

  // Expand each minimal B-set into the concrete models carrying it: the
  // remaining atoms range over classical values.
  std::vector<Interpretation3> out;
  for (const auto& B : minimal_bsets) {
    std::vector<std::string> classical;
    for (const auto& a : atoms)
      if (B.count(a) == 0) classical.push_back(a);
    const std::size_t m = classical.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      Interpretation3 v;
      for (const auto& a : B) v[a] = TruthValue3::B;
      for (std::size_t i = 0; i < m; ++i)
        v[classical[i]] = ((bits >> (m - 1 - i)) & 1) ? TruthValue3::T
                                                      : TruthValue3::F;
      if (satisfies3(v, kb)) out.push_back(std::move(v));
    }
  }
  sort_models(out);
  return out;
}

}  // namespace

std::vector<Interpretation3> minimal_models3(const KnowledgeBase& kb,
                                             const Signature& sig,
                                             const Caps& caps) {
  if (!is_subset(atoms_of(kb), sig))
    throw DomainError("model signature must cover the atoms of the "
                      "knowledge base");
  if (sig.size() > caps.lp_atoms)
    throw CapError("three-valued model search over " +
                   std::to_string(sig.size()) + " atoms exceeds the cap of " +
                   std::to_string(caps.lp_atoms));
  const std::vector<std::string> atoms(sig.begin(), sig.end());
  if (sig.size() <= caps.lp_scan_atoms)
    return scan_minimal_models(kb, atoms);
  return layered_minimal_models(kb, atoms, caps);
}

std::vector<Interpretation3> minimal_models3(const KnowledgeBase& kb,
                                             const Caps& caps) {
  return minimal_models3(kb, atoms_of(kb), caps);
}

bool infer_lp(const KnowledgeBase& kb, const Formula& goal, const Caps& caps) {
  Signature sig = set_union(atoms_of(kb), atoms_of(goal));
  for (const auto& v : minimal_models3(kb, sig, caps))
    if (!satisfies3(v, goal)) return false;
  return true;
}

bool crosscheck_satisfaction_bridge(const Interpretation3& v, const Formula& f,
                       const Caps& caps) {
  const bool three_valued = satisfies3(v, f);
  Formula forgotten = forget_formula(f, b_set(v), ForgetOp::Na, caps);
  Assignment omega = classical_projection(v);
  // The forgotten formula may still be a constant; evaluate2 handles it.
  const bool classical = evaluate2(omega, forgotten);
  return three_valued == classical;
}

BsetReport minimal_b_sets_report(const KnowledgeBase& kb, const Caps& caps) {
  BsetReport report;
  std::vector<Signature> bsets;
  for (const auto& v : minimal_models3(kb, caps)) bsets.push_back(b_set(v));
  std::sort(bsets.begin(), bsets.end(), signature_less);
  bsets.erase(std::unique(bsets.begin(), bsets.end()), bsets.end());
  report.minimal_b_sets = std::move(bsets);

  SubsigAnalysis analysis =
      analyze_subsignatures(kb, ForgetOp::Na, EnumStrategy::Duality, caps);
  report.misig = analysis.misig;
  const Signature at = atoms_of(kb);
  for (const auto& S : analysis.mcsig)
    report.mcsig_complements.push_back(set_difference(at, S));
  std::sort(report.mcsig_complements.begin(), report.mcsig_complements.end(),
            signature_less);

  report.matches_misig = report.minimal_b_sets == report.misig;
  report.matches_mcsig_complements =
      report.minimal_b_sets == report.mcsig_complements;
  if (!report.matches_misig) report.note = kBsetDiscrepancyNote;
  return report;
}

std::vector<Signature> minimal_b_sets(const KnowledgeBase& kb,
                                      const Caps& caps) {
  return minimal_b_sets_report(kb, caps).minimal_b_sets;
}

}  // namespace sigforget
