// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <string>
#include <string_view>

#include "sigforget/errors.hpp"
#include "sigforget/formula.hpp"

namespace sigforget {

/// Parses a single formula.
///
/// Grammar (loosest to tightest binding):
///   formula := or ("->" formula)?          implication, right-associative
///   or      := and ("|" and)*              left-associative
///   and     := unary ("&" unary)*          left-associative
///   unary   := "!" unary | primary
///   primary := "true" | "false" | ATOM | "(" formula ")"
///   ATOM    := [A-Za-z_][A-Za-z0-9_]*
///
/// "true" and "false" are reserved words, and atom names starting with
/// "__" are reserved for internal renamings; both raise ParseError.
Formula parse_formula(std::string_view text);

/// Parses knowledge-base text: one formula per line, '#' starts a comment
/// that runs to the end of the line, blank lines are ignored.  Duplicate
/// formulas are dropped (a knowledge base is a set).
KnowledgeBase parse_kb(std::string_view text);

/// Reads and parses a knowledge-base file; raises Error when the file
/// cannot be read.
KnowledgeBase load_kb_file(const std::string& path);

}  // namespace sigforget
