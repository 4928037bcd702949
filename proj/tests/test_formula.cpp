// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "sigforget/formula.hpp"
#include "sigforget/parser.hpp"
#include "support.hpp"

using namespace sigforget;

TEST_CASE("factories and accessors") {
  Formula a = Formula::atom("a");
  Formula f = Formula::conjunction(Formula::disjunction(a, Formula::atom("b")),
                                   Formula::negation(a));
  CHECK(f.kind() == Connective::And);
  CHECK(f.lhs().kind() == Connective::Or);
  CHECK(f.rhs().kind() == Connective::Not);
  CHECK(f.rhs().operand().atom_name() == "a");
  CHECK(f.size() == 6);
  CHECK(Formula::top().is_constant());
  CHECK(Formula::bottom().is_constant());
  CHECK(Formula{} == Formula::top());
}

TEST_CASE("structural equality is syntactic") {
  Formula ab = parse_formula("a & b");
  Formula ba = parse_formula("b & a");
  CHECK(ab == parse_formula("a & b"));
  CHECK(ab != ba);
  CHECK(parse_formula("!!a") != parse_formula("a"));
}

TEST_CASE("total order is consistent") {
  std::mt19937 rng(7101);
  for (int i = 0; i < 300; ++i) {
    Formula f = testsupport::random_formula(rng, testsupport::atom_pool(), 3);
    Formula g = testsupport::random_formula(rng, testsupport::atom_pool(), 3);
    int fg = Formula::compare(f, g);
    int gf = Formula::compare(g, f);
    CHECK(fg == -gf);
    CHECK((fg == 0) == (f == g));
    CHECK(Formula::compare(f, f) == 0);
  }
}

TEST_CASE("parser follows the documented precedence") {
  Formula f = parse_formula("(c | !b) & d");
  REQUIRE(f.kind() == Connective::And);
  CHECK(f.lhs().kind() == Connective::Or);
  CHECK(f.lhs().rhs().kind() == Connective::Not);
  CHECK(f.rhs() == Formula::atom("d"));

  CHECK(parse_formula("a | b & c") ==
        Formula::disjunction(Formula::atom("a"),
                             Formula::conjunction(Formula::atom("b"),
                                                  Formula::atom("c"))));
  CHECK(parse_formula("!a & b") ==
        Formula::conjunction(Formula::negation(Formula::atom("a")),
                             Formula::atom("b")));
  // Implication is right-associative and binds loosest.
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implication(
            Formula::atom("a"),
            Formula::implication(Formula::atom("b"), Formula::atom("c"))));
  CHECK(parse_formula("a & b -> c") ==
        Formula::implication(
            Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
            Formula::atom("c")));
  // Conjunction and disjunction are left-associative.
  CHECK(parse_formula("a & b & c") ==
        Formula::conjunction(
            Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
            Formula::atom("c")));
  CHECK(parse_formula("true") == Formula::top());
  CHECK(parse_formula("false") == Formula::bottom());
  CHECK(parse_formula("truth") == Formula::atom("truth"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("a &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a"), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a - b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a $ b"), ParseError);
  CHECK_THROWS_AS(parse_formula("__x"), ParseError);
  CHECK_THROWS_AS(parse_formula("a & __f0_a"), ParseError);

  try {
    parse_formula("a &  $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("knowledge base text format") {
  KnowledgeBase kb = parse_kb(
      "# leading comment\n"
      "a & b   # trailing comment\n"
      "\n"
      "   \t\n"
      "!a | c\r\n"
      "a & b\n");
  REQUIRE(kb.size() == 2);
  CHECK(kb[0] == parse_formula("a & b"));
  CHECK(kb[1] == parse_formula("!a | c"));

  try {
    parse_kb("a\nb &\nc");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("rendering round-trips structurally") {
  std::mt19937 rng(7102);
  for (int i = 0; i < 500; ++i) {
    Formula f = testsupport::random_formula(rng, testsupport::atom_pool(), 4);
    CAPTURE(to_string(f));
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("rendering uses minimal parentheses") {
  CHECK(to_string(parse_formula("(a & b) | c")) == "a & b | c");
  CHECK(to_string(parse_formula("a & (b | c)")) == "a & (b | c)");
  CHECK(to_string(parse_formula("!(a | b)")) == "!(a | b)");
  CHECK(to_string(parse_formula("!!a")) == "!!a");
  CHECK(to_string(parse_formula("a -> (b -> c)")) == "a -> b -> c");
  CHECK(to_string(parse_formula("(a -> b) -> c")) == "(a -> b) -> c");
}

TEST_CASE("atoms and occurrence counting") {
  CHECK(atoms_of(Formula::top()).empty());
  CHECK(atoms_of(parse_formula("!a & c")) == Signature{"a", "c"});

  Formula f = parse_formula("a & (b | a) & !a");
  CHECK(count_occurrences(f, "a") == 3);
  CHECK(count_occurrences(f, "b") == 1);
  CHECK(count_occurrences(f, "z") == 0);
  CHECK(count_occurrences(parse_formula("a & !a"), "a") == 2);
}

TEST_CASE("signature helpers") {
  Signature ab{"a", "b"};
  Signature bc{"b", "c"};
  CHECK(set_union(ab, bc) == Signature{"a", "b", "c"});
  CHECK(set_intersection(ab, bc) == Signature{"b"});
  CHECK(set_difference(ab, bc) == Signature{"a"});
  CHECK(is_subset(Signature{"b"}, ab));
  CHECK(!is_subset(ab, bc));
  CHECK(is_subset(Signature{}, Signature{}));
  CHECK(to_string(ab) == "{a, b}");
  CHECK(to_string(Signature{}) == "{}");
}

TEST_CASE("knowledge bases are ordered sets") {
  KnowledgeBase kb{parse_formula("a"), parse_formula("b"), parse_formula("a")};
  REQUIRE(kb.size() == 2);
  CHECK(kb[0] == parse_formula("a"));
  CHECK(!kb.add(parse_formula("b")));
  CHECK(kb.add(parse_formula("c")));
  CHECK(kb.contains(parse_formula("c")));

  KnowledgeBase other{parse_formula("c"), parse_formula("a"),
                      parse_formula("b")};
  CHECK(kb == other);
  CHECK(kb != KnowledgeBase{parse_formula("a")});

  CHECK(atoms_of(kb) == Signature{"a", "b", "c"});
  CHECK(to_string(kb) == "{a, b, c}");

  std::ostringstream os;
  os << parse_formula("a -> b");
  CHECK(os.str() == "a -> b");
}
