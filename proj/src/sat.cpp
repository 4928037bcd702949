// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

namespace sigforget {

namespace {

// Literals are nonzero ints: +v / -v for variable v (1-based).
using IntClause = std::vector<int>;

class Dpll {
 public:
  Dpll(int nvars, std::vector<IntClause> clauses, std::uint64_t max_decisions)
      : nvars_(nvars),
        clauses_(std::move(clauses)),
        max_decisions_(max_decisions),
        value_(static_cast<std::size_t>(nvars) + 1, 0) {}

  // Returns the satisfying values indexed by variable, or nullopt.
  std::optional<std::vector<bool>> solve() {
    for (const auto& c : clauses_)
      if (c.empty()) return std::nullopt;
    if (!propagate()) return std::nullopt;
    for (;;) {
      int var = first_unassigned();
      if (var == 0) return model();
      if (++decisions_ > max_decisions_)
        throw CapError("solver decision budget exceeded (" +
                       std::to_string(max_decisions_) + " decisions)");
      frames_.push_back({var, trail_.size(), false});
      assign(var);
      while (!propagate()) {
        // Chronological backtracking: undo to the most recent decision
        // whose second branch is still open, then take it.
        while (!frames_.empty() && frames_.back().flipped) {
          undo_to(frames_.back().trail_size);
          frames_.pop_back();
        }
        if (frames_.empty()) return std::nullopt;
        Frame& f = frames_.back();
        undo_to(f.trail_size);
        f.flipped = true;
        assign(-f.var);
      }
    }
  }

 private:
  struct Frame {
    int var;
    std::size_t trail_size;
    bool flipped;
  };

  void assign(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
  }

  void undo_to(std::size_t size) {
    while (trail_.size() > size) {
      value_[static_cast<std::size_t>(std::abs(trail_.back()))] = 0;
      trail_.pop_back();
    }
  }

  int lit_value(int lit) const {
    int v = value_[static_cast<std::size_t>(std::abs(lit))];
    return lit > 0 ? v : -v;
  }

  // Unit propagation to fixpoint; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int unassigned_lit = 0;
        int unassigned_count = 0;
        bool satisfied = false;
        for (int lit : clause) {
          int v = lit_value(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++unassigned_count;
            unassigned_lit = lit;
            if (unassigned_count > 1) break;
          }
        }
        if (satisfied || unassigned_count > 1) continue;
        if (unassigned_count == 0) return false;
        assign(unassigned_lit);
        changed = true;
      }
    }
    return true;
  }

  int first_unassigned() const {
    for (int v = 1; v <= nvars_; ++v)
      if (value_[static_cast<std::size_t>(v)] == 0) return v;
    return 0;
  }

  std::vector<bool> model() const {
    std::vector<bool> out(static_cast<std::size_t>(nvars_) + 1, false);
    for (int v = 1; v <= nvars_; ++v)
      out[static_cast<std::size_t>(v)] = value_[static_cast<std::size_t>(v)] > 0;
    return out;
  }

  int nvars_;
  std::vector<IntClause> clauses_;
  std::uint64_t max_decisions_;
  std::uint64_t decisions_ = 0;
  std::vector<signed char> value_;
  std::vector<int> trail_;
  std::vector<Frame> frames_;
};

// Definitional (Tseitin-style) clause encoding.  Input atoms get the
// lowest variable numbers in lexicographic order so that witnesses and
// branching are deterministic; each non-literal subformula gets a fresh
// variable constrained to match its connective.
class Encoder {
 public:
  int var_of_atom(const std::string& atom) {
    auto it = atom_vars_.find(atom);
    if (it != atom_vars_.end()) return it->second;
    int v = ++nvars_;
    atom_vars_.emplace(atom, v);
    return v;
  }

  void reserve_atoms(const Signature& sig) {
    for (const auto& a : sig) var_of_atom(a);
  }

  // Adds clauses asserting f; f must be constant-free or constant.
  // Returns false when f is the constant false.
  bool assert_formula(const Formula& f) {
    Formula g = simplify_constants(f);
    if (g.kind() == Connective::True) return true;
    if (g.kind() == Connective::False) return false;
    // cache_ keys on node addresses, so every encoded root has to stay
    // alive as long as the encoder; a freed node's address could be
    // reused by a later root and alias its gates.
    roots_.push_back(g);
    clauses_.push_back({encode(g)});
    return true;
  }

  const std::vector<IntClause>& clauses() const { return clauses_; }
  int nvars() const { return nvars_; }
  const std::map<std::string, int>& atom_vars() const { return atom_vars_; }

 private:
  int encode(const Formula& f) {
    switch (f.kind()) {
      case Connective::Atom:
        return var_of_atom(f.atom_name());
      case Connective::Not:
        return -encode(f.operand());
      default:
        break;
    }
    auto it = cache_.find(f.id());
    if (it != cache_.end()) return it->second;
    int l = encode(f.lhs());
    int r = encode(f.rhs());
    int x = ++nvars_;
    switch (f.kind()) {
      case Connective::And:
        clauses_.push_back({-x, l});
        clauses_.push_back({-x, r});
        clauses_.push_back({x, -l, -r});
        break;
      case Connective::Or:
        clauses_.push_back({-x, l, r});
        clauses_.push_back({x, -l});
        clauses_.push_back({x, -r});
        break;
      case Connective::Implies:
        clauses_.push_back({-x, -l, r});
        clauses_.push_back({x, l});
        clauses_.push_back({x, -r});
        break;
      default:
        throw DomainError("cannot encode constant subformula");
    }
    cache_.emplace(f.id(), x);
    return x;
  }

  int nvars_ = 0;
  std::map<std::string, int> atom_vars_;
  std::map<const void*, int> cache_;
  std::vector<Formula> roots_;
  std::vector<IntClause> clauses_;
};

SatResult solve_formulas(const std::vector<Formula>& fs, const Caps& caps) {
  Signature sig;
  for (const auto& f : fs) sig = set_union(sig, atoms_of(f));
  Encoder enc;
  enc.reserve_atoms(sig);
  for (const auto& f : fs) {
    if (!enc.assert_formula(f))
      return {SatStatus::Unsatisfiable, std::nullopt};
  }
  Dpll solver(enc.nvars(), enc.clauses(), caps.solver_decisions);
  auto model = solver.solve();
  if (!model) return {SatStatus::Unsatisfiable, std::nullopt};
  Assignment witness;
  for (const auto& [atom, var] : enc.atom_vars())
    witness[atom] = (*model)[static_cast<std::size_t>(var)];
  return {SatStatus::Satisfiable, std::move(witness)};
}

}  // namespace

SatResult is_satisfiable(const std::vector<Formula>& fs, const Caps& caps) {
  return solve_formulas(fs, caps);
}

SatResult is_satisfiable(const KnowledgeBase& kb, const Caps& caps) {
  return solve_formulas(kb.formulas(), caps);
}

SatResult is_satisfiable(const Formula& f, const Caps& caps) {
  return solve_formulas({f}, caps);
}

bool entails(const std::vector<Formula>& premises, const Formula& goal,
             const Caps& caps) {
  std::vector<Formula> fs = premises;
  fs.push_back(Formula::negation(goal));
  return !solve_formulas(fs, caps).sat();
}

bool entails(const KnowledgeBase& kb, const Formula& goal, const Caps& caps) {
  return entails(kb.formulas(), goal, caps);
}

bool equivalent(const Formula& f, const Formula& g, const Caps& caps) {
  return entails(std::vector<Formula>{f}, g, caps) &&
         entails(std::vector<Formula>{g}, f, caps);
}

bool kb_equivalent(const KnowledgeBase& a, const KnowledgeBase& b,
                   const Caps& caps) {
  for (const auto& g : b)
    if (!entails(a, g, caps)) return false;
  for (const auto& f : a)
    if (!entails(b, f, caps)) return false;
  return true;
}

bool elementwise_equivalent(const KnowledgeBase& a, const KnowledgeBase& b,
                            const Caps& caps) {
  auto covered = [&caps](const KnowledgeBase& from, const KnowledgeBase& to) {
    for (const auto& f : from) {
      bool found = false;
      for (const auto& g : to) {
        if (equivalent(f, g, caps)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

std::vector<Assignment> enumerate_models(const std::vector<Formula>& fs,
                                         const Signature& sig,
                                         const Caps& caps) {
  Signature used;
  for (const auto& f : fs) used = set_union(used, atoms_of(f));
  if (!is_subset(used, sig))
    throw DomainError("model enumeration signature must cover the atoms of "
                      "the input");
  if (sig.size() > caps.enum_model_atoms)
    throw CapError("model enumeration over " + std::to_string(sig.size()) +
                   " atoms exceeds the cap of " +
                   std::to_string(caps.enum_model_atoms));
  std::vector<std::string> atoms(sig.begin(), sig.end());
  const std::size_t n = atoms.size();
  std::vector<Assignment> models;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment v;
    for (std::size_t i = 0; i < n; ++i) {
      // Earlier atoms take the higher-order bits: lexicographic order
      // with false before true.
      bool val = (bits >> (n - 1 - i)) & 1;
      v[atoms[i]] = val;
    }
    bool ok = true;
    for (const auto& f : fs) {
      if (!evaluate2(v, f)) {
        ok = false;
        break;
      }
    }
    if (ok) models.push_back(std::move(v));
  }
  return models;
}

std::vector<std::size_t> unsatisfiable_members(const KnowledgeBase& kb,
                                               const Caps& caps) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kb.size(); ++i)
    if (!is_satisfiable(kb[i], caps).sat()) out.push_back(i);
  return out;
}

}  // namespace sigforget
