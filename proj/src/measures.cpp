// Copyright (c) 2026 the sigforget authors
// Distributed under the MIT license; see LICENSE for details.

#include "sigforget/measures.hpp"

#include <numeric>
#include <vector>

namespace sigforget {

Rational Rational::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return Rational{n / g, d / g};
}

Rational Rational::operator+(const Rational& other) const {
  return of(num * other.den + other.num * den, den * other.den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string measure_id(SigMeasure m) {
  switch (m) {
    case SigMeasure::MisigCount:
      return "misig";
    case SigMeasure::MisigWeighted:
      return "misig-c";
    case SigMeasure::McsigCount:
      return "mcsig";
    case SigMeasure::ProblematicAtoms:
      return "p";
  }
  return "?";
}

std::string measure_id(SubsetMeasure m) {
  switch (m) {
    case SubsetMeasure::MisCount:
      return "mi";
    case SubsetMeasure::MisWeighted:
      return "mi-c";
    case SubsetMeasure::McsCount:
      return "mc";
    case SubsetMeasure::ProblematicFormulas:
      return "p";
  }
  return "?";
}

Rational measure(const KnowledgeBase& kb, SigMeasure which, ForgetOp op,
                 const Caps& caps) {
  SubsigAnalysis a =
      analyze_subsignatures(kb, op, EnumStrategy::Duality, caps);
  switch (which) {
    case SigMeasure::MisigCount:
      return Rational::of(static_cast<std::int64_t>(a.misig.size()));
    case SigMeasure::MisigWeighted: {
      Rational sum;
      for (const auto& M : a.misig) {
        if (M.empty())
          throw UndefinedMeasureError(
              "weighted MISig measure undefined: MISig contains the empty "
              "subsignature");
        sum = sum + Rational::of(1, static_cast<std::int64_t>(M.size()));
      }
      return sum;
    }
    case SigMeasure::McsigCount:
      if (a.mcsig.empty())
        throw UndefinedMeasureError(
            "MCSig measure undefined: no maximal consistent subsignature "
            "exists");
      return Rational::of(static_cast<std::int64_t>(a.mcsig.size()) +
                          static_cast<std::int64_t>(a.scsig.size()) - 1);
    case SigMeasure::ProblematicAtoms: {
      Signature touched;
      for (const auto& M : a.misig) touched = set_union(touched, M);
      return Rational::of(static_cast<std::int64_t>(touched.size()));
    }
  }
  throw DomainError("unknown measure");
}

Rational measure_subset(const KnowledgeBase& kb, SubsetMeasure which,
                        const Caps& caps) {
  switch (which) {
    case SubsetMeasure::MisCount:
      return Rational::of(
          static_cast<std::int64_t>(enumerate_mis(kb, caps).size()));
    case SubsetMeasure::MisWeighted: {
      Rational sum;
      for (const auto& M : enumerate_mis(kb, caps))
        sum = sum + Rational::of(1, static_cast<std::int64_t>(M.size()));
      return sum;
    }
    case SubsetMeasure::McsCount: {
      std::vector<KnowledgeBase> mis = enumerate_mis(kb, caps);
      std::int64_t selfcontradictory = 0;
      for (const auto& M : mis)
        if (M.size() == 1) ++selfcontradictory;
      std::int64_t mcs =
          static_cast<std::int64_t>(enumerate_mcs(kb, caps).size());
      return Rational::of(mcs + selfcontradictory - 1);
    }
    case SubsetMeasure::ProblematicFormulas: {
      KnowledgeBase touched;
      for (const auto& M : enumerate_mis(kb, caps))
        for (const auto& f : M) touched.add(f);
      return Rational::of(static_cast<std::int64_t>(touched.size()));
    }
  }
  throw DomainError("unknown measure");
}

}  // namespace sigforget
