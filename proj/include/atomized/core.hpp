#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "atomized/error.hpp"
#include "atomized/index_set.hpp"

namespace atomized {

/// Ordered, named set of constants. Index order is the canonical order used for
/// serialization; all algebra runs on indices and names only matter at the I/O
/// boundary.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  // Throws UnknownConstant.
  std::size_t index(std::string_view name) const;

  IndexSet all() const { return IndexSet::full(size()); }
  IndexSet subset(const std::vector<std::string>& names) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// `'` is reserved for fresh-name generation and `#` starts comments.
bool is_valid_constant_name(std::string_view name) noexcept;

class Term;

/// An atom is identified by its upper constant segment, a non-empty index set.
class Atom {
 public:
  explicit Atom(IndexSet upper);
  Atom(std::size_t universe, std::initializer_list<std::size_t> upper)
      : Atom(IndexSet(universe, upper)) {}

  const IndexSet& upper() const noexcept { return upper_; }
  std::size_t universe() const noexcept { return upper_.universe(); }

  // phi < t in every model containing phi.
  bool below(const Term& t) const noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom& a, const Atom& b) noexcept { return a.upper_ <=> b.upper_; }

 private:
  IndexSet upper_;
};

/// Idempotent summation of constants, canonically its non-empty component set.
class Term {
 public:
  explicit Term(IndexSet comps);
  Term(std::size_t universe, std::initializer_list<std::size_t> comps)
      : Term(IndexSet(universe, comps)) {}

  const IndexSet& comps() const noexcept { return comps_; }
  std::size_t universe() const noexcept { return comps_.universe(); }

  friend Term operator+(const Term& a, const Term& b) { return Term(a.comps_ | b.comps_); }
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term& a, const Term& b) noexcept { return a.comps_ <=> b.comps_; }

 private:
  IndexSet comps_;
};

inline bool Atom::below(const Term& t) const noexcept { return upper_.intersects(t.comps()); }

/// Ordered pair (left, right) read as left <= right.
struct Duple {
  Term left;
  Term right;

  friend bool operator==(const Duple&, const Duple&) = default;
};

enum class Polarity { Positive, Negative };

struct SignedDuple {
  Duple duple;
  Polarity polarity = Polarity::Positive;

  static SignedDuple positive(Term l, Term r) { return {{std::move(l), std::move(r)}, Polarity::Positive}; }
  static SignedDuple negative(Term l, Term r) { return {{std::move(l), std::move(r)}, Polarity::Negative}; }

  friend bool operator==(const SignedDuple&, const SignedDuple&) = default;
};

Term make_term(const Signature& sig, const std::vector<std::string>& names);
Atom make_atom(const Signature& sig, const std::vector<std::string>& names);
std::vector<std::string> names_of(const Signature& sig, const IndexSet& set);

Atom atom_union(const Atom& a, const Atom& b);

// True iff eta's upper segment is a strict subset of phi's.
bool is_wider(const Atom& phi, const Atom& eta) noexcept;

Atom zero_atom(const Signature& sig);

struct Pinning {
  Term term;                          // constants outside U(phi)
  std::vector<SignedDuple> duples;    // (c, term)^- for each c in U(phi)
};

// Throws ZeroAtomHasNoPinningTerm for the zero atom.
Pinning pinning(const Atom& phi, const Signature& sig);

}  // namespace atomized
