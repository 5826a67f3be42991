#include "atomized/core.hpp"

#include <cctype>
#include <utility>

namespace atomized {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptySignature: return "EmptySignature";
    case ErrorKind::DuplicateConstant: return "DuplicateConstant";
    case ErrorKind::InvalidConstantName: return "InvalidConstantName";
    case ErrorKind::UnknownConstant: return "UnknownConstant";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::EmptyAtom: return "EmptyAtom";
    case ErrorKind::EmptyTerm: return "EmptyTerm";
    case ErrorKind::ZeroAtomHasNoPinningTerm: return "ZeroAtomHasNoPinningTerm";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EmptyRestrictionSet: return "EmptyRestrictionSet";
    case ErrorKind::UnknownTargetConstant: return "UnknownTargetConstant";
    case ErrorKind::RenameMapIncomplete: return "RenameMapIncomplete";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::TrivialModel: return "TrivialModel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredConstant: return "UndeclaredConstant";
  }
  return "Unknown";
}

Signature::Signature(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::EmptySignature, "signature has no constants");
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::InvalidConstantName, "empty constant name");
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::DuplicateConstant, "duplicate constant '" + names_[i] + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Signature::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownConstant, "unknown constant '" + std::string(name) + "'");
}

IndexSet Signature::subset(const std::vector<std::string>& names) const {
  IndexSet s(size());
  for (const auto& n : names) s.set(index(n));
  return s;
}

bool is_valid_constant_name(std::string_view name) noexcept {
  if (name.empty() || name == "<=") return false;
  for (char ch : name) {
    if (ch == '\'' || ch == '#' || std::isspace(static_cast<unsigned char>(ch)) ||
        std::iscntrl(static_cast<unsigned char>(ch)))
      return false;
  }
  return true;
}

Atom::Atom(IndexSet upper) : upper_(std::move(upper)) {
  if (upper_.empty()) throw Error(ErrorKind::EmptyAtom, "atom upper segment must be non-empty");
}

Term::Term(IndexSet comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw Error(ErrorKind::EmptyTerm, "term must mention at least one constant");
}

Term make_term(const Signature& sig, const std::vector<std::string>& names) {
  return Term(sig.subset(names));
}

Atom make_atom(const Signature& sig, const std::vector<std::string>& names) {
  return Atom(sig.subset(names));
}

std::vector<std::string> names_of(const Signature& sig, const IndexSet& set) {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(sig.name(i)); });
  return out;
}

Atom atom_union(const Atom& a, const Atom& b) {
  if (a.universe() != b.universe())
    throw Error(ErrorKind::SignatureMismatch, "atoms belong to different signatures");
  return Atom(a.upper() | b.upper());
}

bool is_wider(const Atom& phi, const Atom& eta) noexcept {
  return eta.upper().is_strict_subset_of(phi.upper());
}

Atom zero_atom(const Signature& sig) { return Atom(sig.all()); }

Pinning pinning(const Atom& phi, const Signature& sig) {
  if (phi.universe() != sig.size())
    throw Error(ErrorKind::SignatureMismatch, "atom does not belong to the signature");
  IndexSet rest = sig.all() - phi.upper();
  if (rest.empty())
    throw Error(ErrorKind::ZeroAtomHasNoPinningTerm, "the zero atom has no pinning term");
  Pinning p{Term(rest), {}};
  phi.upper().for_each([&](std::size_t c) {
    p.duples.push_back(SignedDuple::negative(Term(IndexSet(sig.size(), {c})), p.term));
  });
  return p;
}

}  // namespace atomized
