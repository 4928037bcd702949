// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/forgetting.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "sigforget/transform.hpp"

namespace sigforget {

std::string to_string(ForgetOp op) {
  return op == ForgetOp::Ve ? "ve" : "na";
}

namespace {

Formula forget_ve(const Formula& f, const Signature& relevant,
                  const Caps& caps) {
  if (relevant.size() > caps.forget_atoms)
    throw CapError("forgetting budget exceeded: " +
                   std::to_string(relevant.size()) +
                   " atoms to eliminate in one formula, cap is " +
                   std::to_string(caps.forget_atoms));
  Formula out = f;
  for (const auto& atom : relevant) {
    if (atoms_of(out).count(atom) == 0) continue;
    Formula pos = substitute_uniform(out, atom, Formula::top());
    Formula neg = substitute_uniform(out, atom, Formula::bottom());
    out = simplify_constants(
        Formula::disjunction(std::move(pos), std::move(neg)));
  }
  return out;
}

Formula forget_na(const Formula& f, const Signature& relevant,
                  const Caps& caps) {
  std::vector<std::pair<std::string, std::size_t>> occurrences;
  std::size_t total = 0;
  for (const auto& atom : relevant) {
    std::size_t k = count_occurrences(f, atom);
    occurrences.emplace_back(atom, k);
    total += k;
  }
  if (total > caps.forget_occurrences || total >= 63)
    throw CapError("forgetting budget exceeded: " + std::to_string(total) +
                   " occurrences to eliminate in one formula, cap is " +
                   std::to_string(caps.forget_occurrences));
  std::vector<Formula> disjuncts;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
    Formula g = f;
    std::size_t slot = 0;
    for (const auto& [atom, k] : occurrences) {
      std::vector<Formula> replacements;
      replacements.reserve(k);
      for (std::size_t j = 0; j < k; ++j) {
        // Earlier occurrence slots take the higher-order bits.
        bool value = (bits >> (total - 1 - (slot + j))) & 1;
        replacements.push_back(value ? Formula::top() : Formula::bottom());
      }
      g = substitute_per_occurrence(g, atom, replacements);
      slot += k;
    }
    g = simplify_constants(g);
    if (g.kind() == Connective::True) return Formula::top();
    if (g.kind() == Connective::False) continue;
    disjuncts.push_back(std::move(g));
  }
  if (disjuncts.empty()) return Formula::bottom();
  return Formula::disjoin(disjuncts);
}

}  // namespace

Formula forget_formula(const Formula& f, const Signature& S, ForgetOp op,
                       const Caps& caps) {
  Signature relevant = set_intersection(S, atoms_of(f));
  if (relevant.empty()) return f;
  return op == ForgetOp::Ve ? forget_ve(f, relevant, caps)
                            : forget_na(f, relevant, caps);
}

KnowledgeBase forget_kb(const KnowledgeBase& kb, const Signature& S,
                        ForgetOp op, const Caps& caps) {
  KnowledgeBase out;
  for (const auto& f : kb) out.add(forget_formula(f, S, op, caps));
  return out;
}

namespace {

void flatten(const Formula& f, Connective kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.lhs(), kind, out);
    flatten(f.rhs(), kind, out);
  } else {
    out.push_back(f);
  }
}

bool is_literal(const Formula& f) {
  if (f.is_atom()) return true;
  return f.kind() == Connective::Not && f.operand().is_atom();
}

const std::string& literal_atom(const Formula& lit) {
  return lit.is_atom() ? lit.atom_name() : lit.operand().atom_name();
}

}  // namespace

Formula forget_na_cnf_fast(const Formula& f, const Signature& S,
                           const Caps& /*caps*/) {
  if (f.is_constant()) return f;
  std::vector<Formula> conjuncts;
  flatten(f, Connective::And, conjuncts);
  std::vector<Formula> kept;
  for (const auto& clause : conjuncts) {
    std::vector<Formula> literals;
    flatten(clause, Connective::Or, literals);
    bool touched = false;
    for (const auto& lit : literals) {
      if (!is_literal(lit))
        throw DomainError(
            "forget_na_cnf_fast requires a formula in conjunctive normal "
            "form");
      if (S.count(literal_atom(lit)) != 0) touched = true;
    }
    if (!touched) kept.push_back(clause);
  }
  if (kept.size() == conjuncts.size()) return f;
  return Formula::conjoin(kept);
}

KnowledgeBase project(const KnowledgeBase& kb, const Signature& keep,
                      ForgetOp op, const Caps& caps) {
  Signature at = atoms_of(kb);
  if (!is_subset(keep, at))
    throw DomainError("projection target " + to_string(keep) +
                      " is not a subsignature of " + to_string(at));
  return forget_kb(kb, set_difference(at, keep), op, caps);
}

RenamedEncoding build_renamed_encoding(const KnowledgeBase& kb,
                                       const Signature& forget, ForgetOp op) {
  Signature at = atoms_of(kb);
  for (const auto& a : at)
    if (a.rfind(kReservedAtomPrefix, 0) == 0)
      throw DomainError("knowledge base already uses the reserved '__' atom "
                        "prefix: '" + a + "'");
  RenamedEncoding enc;
  enc.kept_atoms = set_difference(at, forget);
  for (std::size_t i = 0; i < kb.size(); ++i) {
    Formula g = kb[i];
    Signature relevant = set_intersection(forget, atoms_of(g));
    for (const auto& atom : relevant) {
      const std::size_t k = count_occurrences(kb[i], atom);
      if (op == ForgetOp::Ve) {
        std::string fresh =
            "__f" + std::to_string(i) + "_" + atom;
        g = substitute_uniform(g, atom, Formula::atom(fresh));
        enc.fresh_atoms.insert(fresh);
        for (std::size_t j = 0; j < k; ++j)
          enc.renames[{i, atom, j}] = fresh;
      } else {
        std::vector<Formula> replacements;
        replacements.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
          std::string fresh = "__o" + std::to_string(i) + "_" +
                              std::to_string(j) + "_" + atom;
          enc.fresh_atoms.insert(fresh);
          enc.renames[{i, atom, j}] = fresh;
          replacements.push_back(Formula::atom(fresh));
        }
        g = substitute_per_occurrence(g, atom, replacements);
      }
    }
    enc.formulas.push_back(std::move(g));
  }
  return enc;
}

bool is_consistent_subsignature(const KnowledgeBase& kb, const Signature& S,
                                ForgetOp op, const Caps& caps) {
  return consistent_subsignature_witness(kb, S, op, caps).has_value();
}

std::optional<Assignment> consistent_subsignature_witness(
    const KnowledgeBase& kb, const Signature& S, ForgetOp op,
    const Caps& caps) {
  Signature at = atoms_of(kb);
  if (!is_subset(S, at))
    throw DomainError("subsignature " + to_string(S) +
                      " is not a subset of the knowledge base signature " +
                      to_string(at));
  RenamedEncoding enc = build_renamed_encoding(kb, set_difference(at, S), op);
  SatResult res = is_satisfiable(enc.formulas, caps);
  if (!res.sat()) return std::nullopt;
  Assignment witness;
  for (const auto& a : S) {
    auto it = res.witness->find(a);
    witness[a] = it != res.witness->end() && it->second;
  }
  return witness;
}

bool forgotten_entails(const KnowledgeBase& kb, const Signature& forget,
                       ForgetOp op, const Formula& goal, const Caps& caps) {
  for (const auto& a : atoms_of(goal))
    if (a.rfind(kReservedAtomPrefix, 0) == 0)
      throw DomainError("goal uses the reserved '__' atom prefix: '" + a +
                        "'");
  RenamedEncoding enc = build_renamed_encoding(kb, forget, op);
  std::vector<Formula> fs = enc.formulas;
  fs.push_back(Formula::negation(goal));
  return !is_satisfiable(fs, caps).sat();
}

}  // namespace sigforget
