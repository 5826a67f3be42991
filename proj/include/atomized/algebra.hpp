#pragma once

#include <map>
#include <string>
#include <vector>

#include "atomized/crossing.hpp"
#include "atomized/model.hpp"

namespace atomized {

// ---------------------------------------------------------------------------
// Restriction
// ---------------------------------------------------------------------------

/// Subalgebra generated by the constants `keep`: every atom's upper segment is
/// intersected with `keep` (atoms left empty disappear). The result lives over
/// the kept constants in their original order.
Model restrict(const Model& m, const IndexSet& keep);
Model restrict(const Model& m, const std::vector<std::string>& keep);

/// Whether terms over C map onto M restricted to Q by dropping constants
/// outside Q, i.e. whether some q in Q lies below every element of the restriction.
bool restriction_homomorphism_exists(const Model& m, const std::vector<std::string>& q);

// ---------------------------------------------------------------------------
// Renaming
// ---------------------------------------------------------------------------

/// Maps each source constant to a (possibly empty) set of target constants.
/// An empty image deletes the constant from every upper segment.
class RenameMap {
 public:
  explicit RenameMap(Signature targets) : targets_(std::move(targets)) {}

  /// Throws UnknownTargetConstant when a target is not in the target signature.
  RenameMap& map(const std::string& source, const std::vector<std::string>& targets);

  const Signature& targets() const noexcept { return targets_; }
  const std::map<std::string, std::vector<std::string>>& entries() const noexcept { return entries_; }

  /// Image of `source`; sources without an entry map to themselves when that
  /// name is a target, otherwise RenameMapIncomplete.
  IndexSet image(const std::string& source) const;

  friend bool operator==(const RenameMap&, const RenameMap&) = default;

 private:
  Signature targets_;
  std::map<std::string, std::vector<std::string>> entries_;
};

/// Each atom's upper segment becomes the union of its constants' images. Atoms
/// with an empty image are annihilated; coverage is repaired with the zero atom.
Model rename(const Model& m, const RenameMap& map);

// ---------------------------------------------------------------------------
// Congruences, joins, subalgebras, products
// ---------------------------------------------------------------------------

/// M / Theta(a, b): crosses b <= a, then a <= b.
Model quotient(const Model& m, const Term& a, const Term& b);

/// Fresh name for `base` not present in `taken`, built by appending primes.
std::string fresh_prime(const std::string& base, const Signature& taken);

/// Freest model over C_M u C_N satisfying both positive theories. Shared
/// constants of N are renamed apart, the union is crossed to re-identify them
/// and the primes are restricted away. Constants of M come first.
Model join(const Model& m, const Model& n);

/// Subalgebra generated by `generators`, named by `names` (rename route).
Model subalgebra(const Model& m, const std::vector<Term>& generators, const std::vector<std::string>& names);

/// The same subalgebra computed by crossing t_i <= g_i and g_i <= t_i into
/// M + F_G and restricting to G.
Model subalgebra_by_crossing(const Model& m, const std::vector<Term>& generators,
                             const std::vector<std::string>& names);

struct ProductOptions {
  /// Rename the pair constant (c, c) back to c for every shared constant c.
  bool identify_diagonal = false;
};

/// Name of the pair constant for M-constant i and N-constant j (0-based in,
/// 1-based out): "g<i+1>_<j+1>".
std::string product_constant_name(std::size_t i, std::size_t j);

/// Product M x N over the pair constants g_ij, ordered row-major (index i*n + j).
/// Constants are treated as disjoint even when names are shared.
Model product(const Model& m, const Model& n, ProductOptions options = {});

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// One two-element factor [psi{top}, psi{top, bottom}] with bottom < top.
struct SubdirectComponent {
  Atom atom;
  std::string top_name;
  std::string bottom_name;
};

struct SubdirectDecomposition {
  Signature source;
  std::vector<SubdirectComponent> components;
  /// tuples[i][j] is true when coordinate j of constant i is the top element.
  std::vector<std::vector<bool>> tuples;
};

/// Decomposes reduce(m) into two-element factors, one per non-zero atom.
/// Throws TrivialModel when reduce(m) is the one-element model.
SubdirectDecomposition subdirect_decomposition(const Model& m);

/// Two-element model of one component.
Model component_model(const SubdirectComponent& c);

/// Rebuilds the decomposed model: product of all components, then the
/// subalgebra generated by the constants' tuples, named as the source constants.
Model subdirect_reconstruct(const SubdirectDecomposition& d);

struct FreeEmbedding {
  Signature free_constants;      // z1..zk, one per atom
  std::vector<Term> generators;  // one term per constant of the model
};

/// M as the subalgebra of F_Z generated by one term per constant.
FreeEmbedding embed_in_free(const Model& m);

}  // namespace atomized
