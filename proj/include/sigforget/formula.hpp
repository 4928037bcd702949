// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace sigforget {

/// A signature is a set of atom names; std::set keeps every traversal in
/// lexicographic order, which the deterministic-output contract relies on.
using Signature = std::set<std::string>;

enum class Connective : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
};

/// Immutable propositional formula with structural sharing.  Handles are
/// cheap to copy; all construction goes through the named factories.
class Formula {
 public:
  /// Default-constructed formulas are the constant true.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  /// Left-folded conjunction / disjunction of a list; the empty list maps
  /// to the neutral constant (true resp. false).
  static Formula conjoin(const std::vector<Formula>& fs);
  static Formula disjoin(const std::vector<Formula>& fs);

  Connective kind() const;
  bool is_constant() const;
  bool is_atom() const;

  /// Atom name; only valid when kind() == Connective::Atom.
  const std::string& atom_name() const;

  /// Operand of a negation; only valid when kind() == Connective::Not.
  Formula operand() const;

  /// Operands of a binary connective.
  Formula lhs() const;
  Formula rhs() const;

  /// Number of nodes in the syntax tree.
  std::size_t size() const;

  std::size_t hash() const;

  /// Structural (syntactic) equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b);

  /// Total structural order; used wherever families of formulas must be
  /// emitted deterministically.  Returns <0, 0, >0.
  static int compare(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

  /// True when the two handles share the identical node.
  bool same_node(const Formula& other) const;

  /// Stable identity of the shared node; useful as a memoization key.
  const void* id() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula binary(Connective kind, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

/// Renders a formula in the concrete syntax accepted by the parser, with
/// the minimal parenthesization that round-trips structurally.
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Atoms occurring in a formula.
Signature atoms_of(const Formula& f);

/// Number of occurrences of `atom` in `f` (left-to-right leaf count).
std::size_t count_occurrences(const Formula& f, const std::string& atom);

/// Set helpers over signatures.
Signature set_union(const Signature& a, const Signature& b);
Signature set_intersection(const Signature& a, const Signature& b);
Signature set_difference(const Signature& a, const Signature& b);
bool is_subset(const Signature& a, const Signature& b);
std::string to_string(const Signature& sig);

/// A knowledge base is a finite set of formulas.  Insertion order is
/// preserved for display; duplicates (structural) are dropped.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<Formula> formulas);
  KnowledgeBase(std::initializer_list<Formula> formulas);

  /// Adds a formula; returns false when a structurally equal member is
  /// already present.
  bool add(Formula f);

  bool contains(const Formula& f) const;
  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }

  const std::vector<Formula>& formulas() const { return formulas_; }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }

  std::vector<Formula>::const_iterator begin() const {
    return formulas_.begin();
  }
  std::vector<Formula>::const_iterator end() const { return formulas_.end(); }

  /// Set equality: same members up to order.
  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);
  friend bool operator!=(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  std::vector<Formula> formulas_;
};

/// Atoms occurring in any member.
Signature atoms_of(const KnowledgeBase& kb);

std::string to_string(const KnowledgeBase& kb);
std::ostream& operator<<(std::ostream& os, const KnowledgeBase& kb);

/// Total order on knowledge bases: by size, then memberwise structural
/// comparison of the canonically sorted member lists.
int compare(const KnowledgeBase& a, const KnowledgeBase& b);

/// Atom names starting with this prefix are reserved for the renamed
/// satisfiability encodings and rejected by the parser.
inline constexpr const char* kReservedAtomPrefix = "__";

}  // namespace sigforget
