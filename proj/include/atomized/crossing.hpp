#pragma once

#include <span>
#include <vector>

#include "atomized/model.hpp"

namespace atomized {

/// When freest_model drops redundant atoms.
enum class ReducePolicy { AfterEach, AtEnd, Never };

/// Enforces r.left <= r.right: the discriminant H of r is replaced by every
/// union of an atom of H with an atom below r.right. Returns m unchanged when
/// r already holds. The result is the freest model of Th+(m) plus r.
Model full_crossing(const Model& m, const Duple& r);

/// F_C(positives), crossing the duples in the order given, starting from the
/// singleton-atom model.
Model freest_model(const Signature& sig, std::span<const Duple> positives,
                   ReducePolicy policy = ReducePolicy::AfterEach);

/// Crosses `positives` into an existing model, in order.
Model cross_all(Model m, std::span<const Duple> positives, ReducePolicy policy = ReducePolicy::AfterEach);

enum class Verdict { Satisfiable, EntailedPositive };

struct NegativeVerdict {
  Duple duple;
  Verdict verdict;
};

struct ConsistencyReport {
  Model freest;
  std::vector<NegativeVerdict> negatives;

  bool consistent() const;
};

/// Builds the freest model of `positives` and classifies each negative duple.
ConsistencyReport check_consistency(const Signature& sig, std::span<const Duple> positives,
                                    std::span<const Duple> negatives,
                                    ReducePolicy policy = ReducePolicy::AfterEach);

}  // namespace atomized
