#include "atomized/crossing.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace atomized {

Model full_crossing(const Model& m, const Duple& r) {
  if (r.left.universe() != m.constants() || r.right.universe() != m.constants())
    throw Error(ErrorKind::SignatureMismatch, "duple does not belong to the model's signature");

  std::vector<const Atom*> discriminant;
  std::vector<const Atom*> below_right;
  std::vector<Atom> atoms;
  for (const auto& phi : m.atoms()) {
    const bool right = phi.below(r.right);
    if (right) below_right.push_back(&phi);
    if (!right && phi.below(r.left))
      discriminant.push_back(&phi);
    else
      atoms.push_back(phi);
  }
  if (discriminant.empty()) return m;

  // below_right is never empty: the model covers every constant of r.right.
  if (m.constants() <= IndexSet::kWordBits) {
    // Unions as raw words, deduplicated before any atom is built.
    std::unordered_set<std::uint64_t> unions;
    std::vector<std::uint64_t> right;
    for (const Atom* rho : below_right) right.push_back(rho->upper().to_mask());
    for (const Atom* lambda : discriminant) {
      const std::uint64_t l = lambda->upper().to_mask();
      for (std::uint64_t r : right) unions.insert(l | r);
    }
    std::vector<std::uint64_t> masks(unions.begin(), unions.end());
    for (const auto& phi : atoms) masks.push_back(phi.upper().to_mask());
    atoms.clear();
    atoms.reserve(masks.size());
    for (std::uint64_t mask : masks) atoms.emplace_back(IndexSet::from_mask(m.constants(), mask));
    return Model::make(m.signature(), std::move(atoms));
  }

  std::unordered_set<IndexSet, IndexSetHash> unions;
  for (const Atom* lambda : discriminant)
    for (const Atom* rho : below_right) unions.insert(lambda->upper() | rho->upper());
  for (const auto& u : unions) atoms.emplace_back(u);
  return Model::make(m.signature(), std::move(atoms));
}

Model cross_all(Model m, std::span<const Duple> positives, ReducePolicy policy) {
  for (const auto& r : positives) {
    m = full_crossing(m, r);
    if (policy == ReducePolicy::AfterEach) m = reduce(m);
  }
  if (policy == ReducePolicy::AtEnd) m = reduce(m);
  return m;
}

Model freest_model(const Signature& sig, std::span<const Duple> positives, ReducePolicy policy) {
  return cross_all(free_model(sig), positives, policy);
}

bool ConsistencyReport::consistent() const {
  return std::none_of(negatives.begin(), negatives.end(),
                      [](const NegativeVerdict& v) { return v.verdict == Verdict::EntailedPositive; });
}

ConsistencyReport check_consistency(const Signature& sig, std::span<const Duple> positives,
                                    std::span<const Duple> negatives, ReducePolicy policy) {
  ConsistencyReport report{freest_model(sig, positives, policy), {}};
  for (const auto& d : negatives) {
    const bool forced = entails(report.freest, d.left, d.right);
    report.negatives.push_back({d, forced ? Verdict::EntailedPositive : Verdict::Satisfiable});
  }
  return report;
}

}  // namespace atomized
