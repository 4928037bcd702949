// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>
#include <utility>

namespace sigforget {

struct Formula::Node {
  Connective kind = Connective::True;
  std::string name;  // atoms only
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(Connective kind, const std::string& name,
                      std::size_t lhs_hash, std::size_t rhs_hash) {
  std::size_t h = hash_mix(0x51f04e57u, static_cast<std::size_t>(kind));
  h = hash_mix(h, std::hash<std::string>{}(name));
  h = hash_mix(h, lhs_hash);
  h = hash_mix(h, rhs_hash);
  return h;
}

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::True;
    n->hash = node_hash(Connective::True, "", 0, 0);
    return n;
  }();
  return Formula(node);
}

Formula Formula::bottom() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::False;
    n->hash = node_hash(Connective::False, "", 0, 0);
    return n;
  }();
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Atom;
  n->name = std::move(name);
  n->hash = node_hash(Connective::Atom, n->name, 0, 0);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Not;
  n->size = 1 + f.size();
  n->hash = node_hash(Connective::Not, "", f.hash(), 0);
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::binary(Connective kind, Formula lhs, Formula rhs) {
  assert(kind == Connective::And || kind == Connective::Or ||
         kind == Connective::Implies);
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = 1 + lhs.size() + rhs.size();
  n->hash = node_hash(kind, "", lhs.hash(), rhs.hash());
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Connective::And, std::move(lhs), std::move(rhs));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Connective::Or, std::move(lhs), std::move(rhs));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Connective::Implies, std::move(lhs), std::move(rhs));
}

Formula Formula::conjoin(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

Formula Formula::disjoin(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_constant() const {
  return node_->kind == Connective::True || node_->kind == Connective::False;
}

bool Formula::is_atom() const { return node_->kind == Connective::Atom; }

const std::string& Formula::atom_name() const {
  assert(node_->kind == Connective::Atom);
  return node_->name;
}

Formula Formula::operand() const {
  assert(node_->kind == Connective::Not);
  return Formula(node_->lhs);
}

Formula Formula::lhs() const {
  assert(node_->kind == Connective::And || node_->kind == Connective::Or ||
         node_->kind == Connective::Implies);
  return Formula(node_->lhs);
}

Formula Formula::rhs() const {
  assert(node_->kind == Connective::And || node_->kind == Connective::Or ||
         node_->kind == Connective::Implies);
  return Formula(node_->rhs);
}

std::size_t Formula::size() const { return node_->size; }

std::size_t Formula::hash() const { return node_->hash; }

bool Formula::same_node(const Formula& other) const {
  return node_ == other.node_;
}

const void* Formula::id() const { return node_.get(); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Connective::True:
    case Connective::False:
      return true;
    case Connective::Atom:
      return a.node_->name == b.node_->name;
    case Connective::Not:
      return a.operand() == b.operand();
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->kind != b.node_->kind)
    return static_cast<int>(a.node_->kind) < static_cast<int>(b.node_->kind)
               ? -1
               : 1;
  switch (a.node_->kind) {
    case Connective::True:
    case Connective::False:
      return 0;
    case Connective::Atom: {
      int c = a.node_->name.compare(b.node_->name);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Connective::Not:
      return compare(a.operand(), b.operand());
    case Connective::And:
    case Connective::Or:
    case Connective::Implies: {
      int c = compare(a.lhs(), b.lhs());
      if (c != 0) return c;
      return compare(a.rhs(), b.rhs());
    }
  }
  return 0;
}

bool operator<(const Formula& a, const Formula& b) {
  return Formula::compare(a, b) < 0;
}

namespace {

// Precedence levels shared with the parser: implication binds loosest,
// then disjunction, conjunction, negation.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecNot = 4;
constexpr int kPrecLeaf = 5;

int precedence_of(const Formula& f) {
  switch (f.kind()) {
    case Connective::Implies:
      return kPrecImplies;
    case Connective::Or:
      return kPrecOr;
    case Connective::And:
      return kPrecAnd;
    case Connective::Not:
      return kPrecNot;
    default:
      return kPrecLeaf;
  }
}

void render(std::ostream& os, const Formula& f, int min_prec) {
  const int prec = precedence_of(f);
  const bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (f.kind()) {
    case Connective::True:
      os << "true";
      break;
    case Connective::False:
      os << "false";
      break;
    case Connective::Atom:
      os << f.atom_name();
      break;
    case Connective::Not:
      os << '!';
      render(os, f.operand(), kPrecNot);
      break;
    case Connective::And:
      // Left-associative: the right child needs strictly higher binding.
      render(os, f.lhs(), kPrecAnd);
      os << " & ";
      render(os, f.rhs(), kPrecAnd + 1);
      break;
    case Connective::Or:
      render(os, f.lhs(), kPrecOr);
      os << " | ";
      render(os, f.rhs(), kPrecOr + 1);
      break;
    case Connective::Implies:
      // Right-associative.
      render(os, f.lhs(), kPrecImplies + 1);
      os << " -> ";
      render(os, f.rhs(), kPrecImplies);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  render(os, f, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  render(os, f, 0);
  return os;
}

namespace {

void collect_atoms(const Formula& f, Signature& out) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Atom:
      out.insert(f.atom_name());
      return;
    case Connective::Not:
      collect_atoms(f.operand(), out);
      return;
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

}  // namespace

Signature atoms_of(const Formula& f) {
  Signature out;
  collect_atoms(f, out);
  return out;
}

std::size_t count_occurrences(const Formula& f, const std::string& atom) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
      return 0;
    case Connective::Atom:
      return f.atom_name() == atom ? 1 : 0;
    case Connective::Not:
      return count_occurrences(f.operand(), atom);
    case Connective::And:
    case Connective::Or:
    case Connective::Implies:
      return count_occurrences(f.lhs(), atom) + count_occurrences(f.rhs(), atom);
  }
  return 0;
}

Signature set_union(const Signature& a, const Signature& b) {
  Signature out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::inserter(out, out.end()));
  return out;
}

Signature set_intersection(const Signature& a, const Signature& b) {
  Signature out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

Signature set_difference(const Signature& a, const Signature& b) {
  Signature out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const Signature& a, const Signature& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : sig) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  out += "}";
  return out;
}

KnowledgeBase::KnowledgeBase(std::vector<Formula> formulas) {
  for (auto& f : formulas) add(std::move(f));
}

KnowledgeBase::KnowledgeBase(std::initializer_list<Formula> formulas) {
  for (const auto& f : formulas) add(f);
}

bool KnowledgeBase::add(Formula f) {
  if (contains(f)) return false;
  formulas_.push_back(std::move(f));
  return true;
}

bool KnowledgeBase::contains(const Formula& f) const {
  for (const auto& g : formulas_)
    if (g == f) return true;
  return false;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a)
    if (!b.contains(f)) return false;
  return true;
}

bool operator!=(const KnowledgeBase& a, const KnowledgeBase& b) {
  return !(a == b);
}

Signature atoms_of(const KnowledgeBase& kb) {
  Signature out;
  for (const auto& f : kb) collect_atoms(f, out);
  return out;
}

std::string to_string(const KnowledgeBase& kb) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : kb) {
    if (!first) out += ", ";
    out += to_string(f);
    first = false;
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& os, const KnowledgeBase& kb) {
  return os << to_string(kb);
}

int compare(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  std::vector<Formula> fa = a.formulas();
  std::vector<Formula> fb = b.formulas();
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    int c = Formula::compare(fa[i], fb[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace sigforget
