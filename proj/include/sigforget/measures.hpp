// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstdint>
#include <string>

#include "sigforget/caps.hpp"
#include "sigforget/forgetting.hpp"
#include "sigforget/formula.hpp"
#include "sigforget/subsignature.hpp"

namespace sigforget {

/// Exact rational arithmetic for the weighted measures; always kept in
/// lowest terms with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d = 1);
  Rational operator+(const Rational& other) const;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / den; }
  /// "3" for integers, "3/2" otherwise.
  std::string str() const;
};

/// Signature-based inconsistency measures.
enum class SigMeasure {
  /// Number of minimal inconsistent subsignatures.
  MisigCount,
  /// Sum of 1/|M| over the minimal inconsistent subsignatures.
  MisigWeighted,
  /// |MCSig| + |SCSig| - 1.
  McsigCount,
  /// Number of atoms in some minimal inconsistent subsignature.
  ProblematicAtoms,
};

/// Formula-subset analogues, mirrored over MIS / MCS.
enum class SubsetMeasure {
  MisCount,
  MisWeighted,
  McsCount,
  ProblematicFormulas,
};

/// Command-line identifiers: "misig", "misig-c", "mcsig", "p".
std::string measure_id(SigMeasure m);
/// Command-line identifiers: "mi", "mi-c", "mc", "p".
std::string measure_id(SubsetMeasure m);

/// Computes a signature measure.  Raises UndefinedMeasureError for
/// McsigCount when MCSig is empty (possible under Ve) and for
/// MisigWeighted when MISig contains the empty signature (same cause:
/// an individually unsatisfiable member).
Rational measure(const KnowledgeBase& kb, SigMeasure which, ForgetOp op,
                 const Caps& caps = {});

/// Computes a subset-based baseline measure.
Rational measure_subset(const KnowledgeBase& kb, SubsetMeasure which,
                        const Caps& caps = {});

}  // namespace sigforget
