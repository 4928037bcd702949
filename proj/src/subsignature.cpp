// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/subsignature.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "sigforget/sat.hpp"

namespace sigforget {

bool signature_less(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(EnumStrategy strategy) {
  return strategy == EnumStrategy::Duality ? "duality" : "brute";
}

namespace {

struct RawFamilies {
  std::vector<Signature> misig;
  std::vector<Signature> mcsig;
};

RawFamilies duality_families(const KnowledgeBase& kb, ForgetOp op,
                             const Caps& caps) {
  const Signature at = atoms_of(kb);
  if (at.size() > caps.subsig_atoms)
    throw CapError("subsignature analysis over " + std::to_string(at.size()) +
                   " atoms exceeds the cap of " +
                   std::to_string(caps.subsig_atoms));
  const std::vector<std::string> atoms(at.begin(), at.end());

  auto consistent = [&](const Signature& S) {
    return is_consistent_subsignature(kb, S, op, caps);
  };

  // Map solver state: one selector atom per signature atom.  The seed
  // tautologies put every selector into the witness; the solver branches
  // on true first, so unexplored seeds start near the top of the lattice.
  std::vector<Formula> map;
  for (const auto& a : atoms) {
    Formula sel = Formula::atom(a);
    map.push_back(Formula::disjunction(sel, Formula::negation(sel)));
  }

  RawFamilies out;
  for (;;) {
    SatResult seed = is_satisfiable(map, caps);
    if (!seed.sat()) break;
    Signature S;
    for (const auto& a : atoms)
      if (seed.witness->at(a)) S.insert(a);
    if (consistent(S)) {
      // Grow to a maximal consistent subsignature; consistency is
      // downward closed, so greedy growth is sound.
      for (const auto& a : atoms) {
        if (S.count(a)) continue;
        Signature candidate = S;
        candidate.insert(a);
        if (consistent(candidate)) S = std::move(candidate);
      }
      // Block every subset of S: require an atom outside it.
      std::vector<Formula> outside;
      for (const auto& a : atoms)
        if (S.count(a) == 0) outside.push_back(Formula::atom(a));
      map.push_back(Formula::disjoin(outside));
      out.mcsig.push_back(std::move(S));
    } else {
      // Shrink to a minimal inconsistent subsignature.
      Signature M = S;
      for (const auto& a : S) {
        Signature candidate = M;
        candidate.erase(a);
        if (M.count(a) && !consistent(candidate)) M = std::move(candidate);
      }
      // Block every superset of M: require an atom of M to be missing.
      std::vector<Formula> missing;
      for (const auto& a : M)
        missing.push_back(Formula::negation(Formula::atom(a)));
      map.push_back(Formula::disjoin(missing));
      out.misig.push_back(std::move(M));
    }
  }
  return out;
}

RawFamilies brute_families(const KnowledgeBase& kb, ForgetOp op,
                           const Caps& caps) {
  const Signature at = atoms_of(kb);
  if (at.size() > caps.brute_subsig_atoms || at.size() >= 31)
    throw CapError("brute-force subsignature analysis over " +
                   std::to_string(at.size()) + " atoms exceeds the cap of " +
                   std::to_string(caps.brute_subsig_atoms));
  const std::vector<std::string> atoms(at.begin(), at.end());
  const std::size_t n = atoms.size();
  const std::uint32_t total = std::uint32_t{1} << n;

  auto to_signature = [&](std::uint32_t mask) {
    Signature S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) S.insert(atoms[i]);
    return S;
  };

  std::vector<char> consistent(total);
  for (std::uint32_t mask = 0; mask < total; ++mask)
    consistent[mask] =
        is_consistent_subsignature(kb, to_signature(mask), op, caps);

  RawFamilies out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!consistent[mask]) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if ((mask & (std::uint32_t{1} << i)) &&
            !consistent[mask & ~(std::uint32_t{1} << i)])
          minimal = false;
      if (minimal) out.misig.push_back(to_signature(mask));
    } else {
      bool maximal = true;
      for (std::size_t i = 0; i < n && maximal; ++i)
        if (!(mask & (std::uint32_t{1} << i)) &&
            consistent[mask | (std::uint32_t{1} << i)])
          maximal = false;
      if (maximal) out.mcsig.push_back(to_signature(mask));
    }
  }
  return out;
}

void sort_family(std::vector<Signature>& family) {
  std::sort(family.begin(), family.end(), signature_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

SubsigAnalysis analyze_subsignatures(const KnowledgeBase& kb, ForgetOp op,
                                     EnumStrategy strategy, const Caps& caps) {
  RawFamilies raw = strategy == EnumStrategy::Duality
                        ? duality_families(kb, op, caps)
                        : brute_families(kb, op, caps);
  SubsigAnalysis out;
  out.strategy = strategy;
  out.misig = std::move(raw.misig);
  out.mcsig = std::move(raw.mcsig);
  sort_family(out.misig);
  sort_family(out.mcsig);

  for (const auto& M : out.misig)
    if (M.size() == 1) out.scsig.push_back(M);

  const Signature at = atoms_of(kb);
  Signature touched;
  for (const auto& M : out.misig) touched = set_union(touched, M);
  out.free_atoms = set_difference(at, touched);

  // The same set must fall out as the intersection of MCSig (with the
  // empty-family intersection read as the full signature).
  Signature meet = at;
  for (const auto& S : out.mcsig) meet = set_intersection(meet, S);
  if (meet != out.free_atoms)
    throw Error("internal invariant violation: free atoms disagree between "
                "the MISig union and the MCSig intersection");

  out.mcsig_witnesses.reserve(out.mcsig.size());
  for (const auto& S : out.mcsig) {
    auto witness = consistent_subsignature_witness(kb, S, op, caps);
    if (!witness)
      throw Error("internal invariant violation: MCSig member without a "
                  "consistency witness");
    out.mcsig_witnesses.push_back(std::move(*witness));
  }
  return out;
}

std::vector<Signature> enumerate_misig(const KnowledgeBase& kb, ForgetOp op,
                                       EnumStrategy strategy,
                                       const Caps& caps) {
  return analyze_subsignatures(kb, op, strategy, caps).misig;
}

std::vector<Signature> enumerate_mcsig(const KnowledgeBase& kb, ForgetOp op,
                                       EnumStrategy strategy,
                                       const Caps& caps) {
  return analyze_subsignatures(kb, op, strategy, caps).mcsig;
}

Signature free_atoms(const KnowledgeBase& kb, ForgetOp op,
                     EnumStrategy strategy, const Caps& caps) {
  return analyze_subsignatures(kb, op, strategy, caps).free_atoms;
}

std::vector<Signature> minimal_hitting_sets(
    const std::vector<Signature>& family) {
  if (family.empty()) return {Signature{}};
  for (const auto& member : family)
    if (member.empty()) return {};

  Signature universe;
  for (const auto& member : family) universe = set_union(universe, member);
  const std::vector<std::string> atoms(universe.begin(), universe.end());
  const std::size_t n = atoms.size();
  if (n > 22)
    throw CapError("hitting set universe of " + std::to_string(n) +
                   " atoms is too large");

  std::vector<std::uint32_t> member_masks;
  member_masks.reserve(family.size());
  for (const auto& member : family) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (member.count(atoms[i])) mask |= std::uint32_t{1} << i;
    member_masks.push_back(mask);
  }

  auto hits = [&](std::uint32_t mask) {
    for (std::uint32_t m : member_masks)
      if ((m & mask) == 0) return false;
    return true;
  };

  std::vector<Signature> out;
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!hits(mask)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask & (std::uint32_t{1} << i)) &&
          hits(mask & ~(std::uint32_t{1} << i)))
        minimal = false;
    if (!minimal) continue;
    Signature S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) S.insert(atoms[i]);
    out.push_back(std::move(S));
  }
  std::sort(out.begin(), out.end(), signature_less);
  return out;
}

std::vector<KnowledgeBase> mckb(const KnowledgeBase& kb, ForgetOp op,
                                const Caps& caps) {
  SubsigAnalysis analysis = analyze_subsignatures(kb, op,
                                                  EnumStrategy::Duality, caps);
  const Signature at = atoms_of(kb);
  std::vector<KnowledgeBase> out;
  for (const auto& S : analysis.mcsig) {
    const Signature forget = set_difference(at, S);
    KnowledgeBase proj;
    for (const auto& f : kb) {
      if (set_intersection(atoms_of(f), forget).empty()) {
        proj.add(f);
        continue;
      }
      Formula g = forget_formula(f, forget, op, caps);
      // Members that forgetting collapsed to tautologies carry no
      // information about the kept atoms.
      if (is_satisfiable(Formula::negation(g), caps).sat()) proj.add(g);
    }
    bool duplicate = false;
    for (const auto& seen : out)
      if (seen == proj) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.push_back(std::move(proj));
  }
  return out;
}

namespace {

std::vector<KnowledgeBase> subset_family(const KnowledgeBase& kb,
                                         const Caps& caps, bool want_mis) {
  if (kb.size() > caps.subset_formulas || kb.size() >= 31)
    throw CapError("subset enumeration over " + std::to_string(kb.size()) +
                   " formulas exceeds the cap of " +
                   std::to_string(caps.subset_formulas));
  const std::size_t n = kb.size();
  const std::uint32_t total = std::uint32_t{1} << n;

  std::vector<char> sat(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Formula> fs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) fs.push_back(kb[i]);
    sat[mask] = is_satisfiable(fs, caps).sat();
  }

  std::vector<KnowledgeBase> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool keep;
    if (want_mis) {
      keep = !sat[mask];
      for (std::size_t i = 0; i < n && keep; ++i)
        if ((mask & (std::uint32_t{1} << i)) &&
            !sat[mask & ~(std::uint32_t{1} << i)])
          keep = false;
    } else {
      keep = sat[mask];
      for (std::size_t i = 0; i < n && keep; ++i)
        if (!(mask & (std::uint32_t{1} << i)) &&
            sat[mask | (std::uint32_t{1} << i)])
          keep = false;
    }
    if (!keep) continue;
    KnowledgeBase subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) subset.add(kb[i]);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(),
            [](const KnowledgeBase& a, const KnowledgeBase& b) {
              return compare(a, b) < 0;
            });
  return out;
}

}  // namespace

std::vector<KnowledgeBase> enumerate_mis(const KnowledgeBase& kb,
                                         const Caps& caps) {
  return subset_family(kb, caps, true);
}

std::vector<KnowledgeBase> enumerate_mcs(const KnowledgeBase& kb,
                                         const Caps& caps) {
  return subset_family(kb, caps, false);
}

}  // namespace sigforget
