#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "atomized/core.hpp"

namespace atomized {

/// Default limit on |C| for element and theory enumeration (2^10 - 1 terms).
inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// An atomized semilattice: a signature plus a canonically ordered, duplicate-free
/// set of atoms. The atoms alone determine the order on terms.
class Model {
 public:
  /// Sorts and deduplicates; when some constant is covered by no atom the zero
  /// atom is added and repaired() reports it.
  static Model make(Signature sig, std::vector<Atom> atoms);

  /// Sorted but otherwise taken as given: no dedup and no coverage repair.
  /// Only meant for feeding hand-built atom sets to axiom_check.
  static Model unchecked(Signature sig, std::vector<Atom> atoms);

  const Signature& signature() const noexcept { return sig_; }
  std::span<const Atom> atoms() const& noexcept { return atoms_; }
  // The span would dangle on a temporary.
  std::span<const Atom> atoms() const&& = delete;
  std::size_t size() const noexcept { return atoms_.size(); }
  std::size_t constants() const noexcept { return sig_.size(); }
  bool repaired() const noexcept { return repaired_; }
  bool contains(const Atom& atom) const;

  friend bool operator==(const Model& a, const Model& b) {
    return a.sig_ == b.sig_ && a.atoms_ == b.atoms_;
  }

 private:
  Model(Signature sig, std::vector<Atom> atoms) : sig_(std::move(sig)), atoms_(std::move(atoms)) {}

  Signature sig_;
  std::vector<Atom> atoms_;
  bool repaired_ = false;
};

/// F_C(empty): one singleton atom per constant.
Model free_model(const Signature& sig);

/// Positions (into M.atoms()) of the atoms below t.
IndexSet segment_mask(const Model& m, const Term& t);

std::vector<Atom> lower_atomic_segment(const Model& m, const Term& t);
std::vector<Atom> discriminant(const Model& m, const Term& a, const Term& b);

bool entails(const Model& m, const Term& left, const Term& right);
bool holds(const Model& m, const SignedDuple& d);

bool is_redundant(const Model& m, const Atom& phi);

/// Drops every redundant atom in one simultaneous pass.
Model reduce(const Model& m);

Model union_model(const Model& a, const Model& b);

/// True iff every atom of b is the union of the atoms of a below it.
bool is_freer(const Model& a, const Model& b);

/// Enumeration works on terms encoded as bit masks over constant indices.
using TermCode = std::uint64_t;

Term term_of(std::size_t constants, TermCode code);
TermCode code_of(const Term& t);

/// Dense relation on the 2^n - 1 terms over n constants; row/column index is
/// code - 1.
class TermRelation {
 public:
  TermRelation() = default;
  explicit TermRelation(std::size_t constants);

  std::size_t constants() const noexcept { return constants_; }
  std::size_t term_count() const noexcept { return rows_.size(); }

  bool contains(TermCode left, TermCode right) const { return rows_[left - 1].test(right - 1); }
  bool contains(const Term& l, const Term& r) const { return contains(code_of(l), code_of(r)); }
  void insert(TermCode left, TermCode right) { rows_[left - 1].set(right - 1); }

  const IndexSet& row(TermCode left) const { return rows_[left - 1]; }
  IndexSet& row(TermCode left) { return rows_[left - 1]; }

  std::size_t pair_count() const;
  std::vector<Duple> pairs() const;
  bool is_subset_of(const TermRelation& other) const;

  friend bool operator==(const TermRelation&, const TermRelation&) = default;

 private:
  std::size_t constants_ = 0;
  std::vector<IndexSet> rows_;
};

/// Containment order C(s) subset-of C(t): the theory of the free model.
TermRelation containment_relation(std::size_t constants);

/// Atomic duple theory of a model: every ordered pair of terms is either a
/// positive or a negative duple.
class TheorySlice {
 public:
  explicit TheorySlice(TermRelation positives) : positives_(std::move(positives)) {}

  const TermRelation& positive_relation() const noexcept { return positives_; }
  bool is_positive(const Term& l, const Term& r) const { return positives_.contains(l, r); }
  bool is_negative(const Term& l, const Term& r) const { return !is_positive(l, r); }

  std::vector<Duple> positives() const { return positives_.pairs(); }
  std::vector<Duple> negatives() const;

  friend bool operator==(const TheorySlice&, const TheorySlice&) = default;

 private:
  TermRelation positives_;
};

struct ElementClass {
  Term representative;        // largest term of the class
  std::vector<Term> members;  // canonical order
  IndexSet segment;           // positions of the atoms below the element
};

void require_enumerable(std::size_t constants, std::size_t cap);

std::vector<ElementClass> enumerate_elements(const Model& m, std::size_t cap = kDefaultEnumerationCap);
TheorySlice enumerate_theory(const Model& m, std::size_t cap = kDefaultEnumerationCap);

/// Same model up to a permutation of constant names: reorders b onto a's
/// signature and compares enumerated theories.
bool same_theory(const Model& a, const Model& b, std::size_t cap = kDefaultEnumerationCap);

/// Re-expresses m over `target`, a permutation of its constant names.
Model reorder(const Model& m, const Signature& target);

}  // namespace atomized
