#pragma once

#include <span>
#include <string>
#include <vector>

#include "atomized/model.hpp"

namespace atomized {

/// Brute-force checks that never run the crossing engine.
namespace oracle {

/// Least relation on terms that contains the containment order and the given
/// positives and is closed under transitivity and join-monotonicity
/// (s <= t implies s+u <= t+u). Iterates to an actual fixed point.
TermRelation closure(const Signature& sig, std::span<const Duple> positives,
                     std::size_t cap = kDefaultEnumerationCap);

inline constexpr std::size_t kCongruenceCap = 3;

/// s <= t iff it holds in every quotient of F_C(empty) by a semilattice
/// congruence that satisfies all positives. Enumerates every partition of the
/// (at most seven) free terms.
TermRelation congruence(const Signature& sig, std::span<const Duple> positives);

enum class AxiomStatus { Pass, Fail, Structural };

struct AxiomResult {
  std::string axiom;
  AxiomStatus status;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;  // AS1..AS6 in order

  bool passed() const;
};

/// Checks AS1-AS6 directly on the atom set. AS2 holds by construction (atoms
/// are never above regular elements) and is reported as structural.
AxiomReport axiom_check(const Model& m, std::size_t cap = kDefaultEnumerationCap);

}  // namespace oracle

const char* to_string(oracle::AxiomStatus s) noexcept;

}  // namespace atomized
