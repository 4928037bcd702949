// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/transform.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace sigforget {

Formula substitute_uniform(const Formula& f, const std::string& atom,
                           const Formula& replacement) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Atom:
      return f.atom_name() == atom ? replacement : f;
    case Connective::Not: {
      Formula sub = substitute_uniform(f.operand(), atom, replacement);
      if (sub.same_node(f.operand())) return f;
      return Formula::negation(std::move(sub));
    }
    case Connective::And:
    case Connective::Or:
    case Connective::Implies: {
      Formula l = substitute_uniform(f.lhs(), atom, replacement);
      Formula r = substitute_uniform(f.rhs(), atom, replacement);
      if (l.same_node(f.lhs()) && r.same_node(f.rhs())) return f;
      switch (f.kind()) {
        case Connective::And:
          return Formula::conjunction(std::move(l), std::move(r));
        case Connective::Or:
          return Formula::disjunction(std::move(l), std::move(r));
        default:
          return Formula::implication(std::move(l), std::move(r));
      }
    }
  }
  return f;
}

namespace {

Formula substitute_nth(const Formula& f, const std::string& atom,
                       const std::vector<Formula>& replacements,
                       std::size_t& next) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Atom:
      if (f.atom_name() == atom) return replacements[next++];
      return f;
    case Connective::Not:
      return Formula::negation(
          substitute_nth(f.operand(), atom, replacements, next));
    case Connective::And: {
      Formula l = substitute_nth(f.lhs(), atom, replacements, next);
      Formula r = substitute_nth(f.rhs(), atom, replacements, next);
      return Formula::conjunction(std::move(l), std::move(r));
    }
    case Connective::Or: {
      Formula l = substitute_nth(f.lhs(), atom, replacements, next);
      Formula r = substitute_nth(f.rhs(), atom, replacements, next);
      return Formula::disjunction(std::move(l), std::move(r));
    }
    case Connective::Implies: {
      Formula l = substitute_nth(f.lhs(), atom, replacements, next);
      Formula r = substitute_nth(f.rhs(), atom, replacements, next);
      return Formula::implication(std::move(l), std::move(r));
    }
  }
  return f;
}

}  // namespace

Formula substitute_per_occurrence(const Formula& f, const std::string& atom,
                                  const std::vector<Formula>& replacements) {
  const std::size_t occurrences = count_occurrences(f, atom);
  if (occurrences != replacements.size())
    throw DomainError("occurrence-count mismatch: formula has " +
                      std::to_string(occurrences) + " occurrence(s) of '" +
                      atom + "' but " + std::to_string(replacements.size()) +
                      " replacement(s) were given");
  std::size_t next = 0;
  return substitute_nth(f, atom, replacements, next);
}

namespace {

Formula simp_not(const Formula& f) {
  switch (f.kind()) {
    case Connective::True:
      return Formula::bottom();
    case Connective::False:
      return Formula::top();
    case Connective::Not:
      return f.operand();
    default:
      return Formula::negation(f);
  }
}

Formula simp_and(const Formula& l, const Formula& r) {
  if (l.kind() == Connective::False || r.kind() == Connective::False)
    return Formula::bottom();
  if (l.kind() == Connective::True) return r;
  if (r.kind() == Connective::True) return l;
  return Formula::conjunction(l, r);
}

Formula simp_or(const Formula& l, const Formula& r) {
  if (l.kind() == Connective::True || r.kind() == Connective::True)
    return Formula::top();
  if (l.kind() == Connective::False) return r;
  if (r.kind() == Connective::False) return l;
  return Formula::disjunction(l, r);
}

Formula simp_implies(const Formula& l, const Formula& r) {
  if (l.kind() == Connective::False) return Formula::top();
  if (r.kind() == Connective::True) return Formula::top();
  if (l.kind() == Connective::True) return r;
  if (r.kind() == Connective::False) return simp_not(l);
  return Formula::implication(l, r);
}

}  // namespace

Formula simplify_constants(const Formula& f) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
    case Connective::Atom:
      return f;
    case Connective::Not: {
      Formula c = simplify_constants(f.operand());
      if (c.same_node(f.operand()) && !c.is_constant() &&
          c.kind() != Connective::Not)
        return f;
      return simp_not(c);
    }
    case Connective::And: {
      Formula l = simplify_constants(f.lhs());
      Formula r = simplify_constants(f.rhs());
      if (l.same_node(f.lhs()) && r.same_node(f.rhs()) && !l.is_constant() &&
          !r.is_constant())
        return f;
      return simp_and(l, r);
    }
    case Connective::Or: {
      Formula l = simplify_constants(f.lhs());
      Formula r = simplify_constants(f.rhs());
      if (l.same_node(f.lhs()) && r.same_node(f.rhs()) && !l.is_constant() &&
          !r.is_constant())
        return f;
      return simp_or(l, r);
    }
    case Connective::Implies: {
      Formula l = simplify_constants(f.lhs());
      Formula r = simplify_constants(f.rhs());
      if (l.same_node(f.lhs()) && r.same_node(f.rhs()) && !l.is_constant() &&
          !r.is_constant())
        return f;
      return simp_implies(l, r);
    }
  }
  return f;
}

namespace {

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Connective::True:
      return positive ? Formula::top() : Formula::bottom();
    case Connective::False:
      return positive ? Formula::bottom() : Formula::top();
    case Connective::Atom:
      return positive ? f : Formula::negation(f);
    case Connective::Not:
      return nnf(f.operand(), !positive);
    case Connective::And:
      if (positive)
        return Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), true));
      return Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Connective::Or:
      if (positive)
        return Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true));
      return Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Connective::Implies:
      if (positive)
        return Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), true));
      return Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), false));
  }
  return f;
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, true); }

namespace {

struct CnfBuilder {
  const Caps& caps;
  std::size_t budget_used = 0;

  void charge(std::size_t amount) {
    budget_used += amount;
    if (budget_used > caps.cnf_nodes)
      throw CapError("cnf blowup: result exceeds " +
                     std::to_string(caps.cnf_nodes) + " nodes");
  }

  // f must be in NNF.
  ClauseList build(const Formula& f) {
    switch (f.kind()) {
      case Connective::True:
        return {};
      case Connective::False:
        return {{}};
      case Connective::Atom:
        charge(1);
        return {{Literal{f.atom_name(), false}}};
      case Connective::Not:
        charge(1);
        return {{Literal{f.operand().atom_name(), true}}};
      case Connective::And: {
        ClauseList l = build(f.lhs());
        ClauseList r = build(f.rhs());
        for (auto& c : r) l.push_back(std::move(c));
        return l;
      }
      case Connective::Or: {
        ClauseList l = build(f.lhs());
        ClauseList r = build(f.rhs());
        ClauseList out;
        for (const auto& cl : l) {
          for (const auto& cr : r) {
            Clause merged = cl;
            merged.insert(merged.end(), cr.begin(), cr.end());
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()),
                         merged.end());
            charge(merged.size() + 1);
            out.push_back(std::move(merged));
          }
        }
        return out;
      }
      case Connective::Implies:
        break;
    }
    throw DomainError("to_cnf: input not in negation normal form");
  }
};

}  // namespace

ClauseList to_cnf_clauses(const Formula& f, const Caps& caps) {
  CnfBuilder builder{caps};
  ClauseList clauses = builder.build(to_nnf(f));
  // A single empty clause subsumes everything, including in the
  // three-valued reading (min(F, x) = F).
  for (const auto& c : clauses)
    if (c.empty()) return {{}};
  for (auto& c : clauses) std::sort(c.begin(), c.end());
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  return clauses;
}

Formula clauses_to_formula(const ClauseList& clauses) {
  std::vector<Formula> conjuncts;
  conjuncts.reserve(clauses.size());
  for (const auto& clause : clauses) {
    std::vector<Formula> lits;
    lits.reserve(clause.size());
    for (const auto& lit : clause) {
      Formula a = Formula::atom(lit.atom);
      lits.push_back(lit.negated ? Formula::negation(std::move(a))
                                 : std::move(a));
    }
    conjuncts.push_back(Formula::disjoin(lits));
  }
  return Formula::conjoin(conjuncts);
}

Formula to_cnf(const Formula& f, const Caps& caps) {
  return clauses_to_formula(to_cnf_clauses(f, caps));
}

bool evaluate2(const Assignment& v, const Formula& f) {
  switch (f.kind()) {
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end())
        throw DomainError("atom '" + f.atom_name() +
                          "' is not assigned a value");
      return it->second;
    }
    case Connective::Not:
      return !evaluate2(v, f.operand());
    case Connective::And:
      return evaluate2(v, f.lhs()) && evaluate2(v, f.rhs());
    case Connective::Or:
      return evaluate2(v, f.lhs()) || evaluate2(v, f.rhs());
    case Connective::Implies:
      return !evaluate2(v, f.lhs()) || evaluate2(v, f.rhs());
  }
  return false;
}

bool evaluate2(const Assignment& v, const KnowledgeBase& kb) {
  for (const auto& f : kb)
    if (!evaluate2(v, f)) return false;
  return true;
}

}  // namespace sigforget
