// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#pragma once

#include <cstddef>
#include <cstdint>

namespace sigforget {

/// Resource budgets guarding the exponential constructions.  Every limit
/// can be raised by the caller; the defaults keep interactive use snappy.
struct Caps {
  /// Variable-elimination forgetting doubles a formula per forgotten atom
  /// that actually occurs in it; at most this many atoms per formula.
  std::size_t forget_atoms = 12;

  /// Occurrence-wise forgetting expands one disjunct per 0/1 vector over
  /// the forgotten occurrences; at most this many occurrences per formula.
  std::size_t forget_occurrences = 12;

  /// Upper bound on the node count of a distributive CNF result.
  std::size_t cnf_nodes = 200000;

  /// Model enumeration scans 2^n assignments; bound on n.
  std::size_t enum_model_atoms = 16;

  /// Subset-lattice scan for subsignature analysis visits 2^n signatures.
  std::size_t brute_subsig_atoms = 12;

  /// Duality-guided subsignature enumeration tolerates larger signatures.
  std::size_t subsig_atoms = 20;

  /// Formula-subset enumeration (MIS / MCS) visits 2^|K| subsets.
  std::size_t subset_formulas = 16;

  /// Three-valued model search; a 3^n scan or a B-set-layered search.
  std::size_t lp_atoms = 12;

  /// Signature size up to which the 3^n scan is used; above it the
  /// layered search over candidate B-sets takes over.
  std::size_t lp_scan_atoms = 12;

  /// Branching decisions the SAT engine may spend on a single query.
  std::uint64_t solver_decisions = 50000000;
};

}  // namespace sigforget
