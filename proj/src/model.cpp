#include "atomized/model.hpp"

#include <algorithm>
#include <map>

namespace atomized {

namespace {

void require_same_signature(const Model& a, const Model& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::SignatureMismatch, "models are over different signatures");
}

void require_term(const Model& m, const Term& t) {
  if (t.universe() != m.constants())
    throw Error(ErrorKind::SignatureMismatch, "term does not belong to the model's signature");
}

void require_atoms(const Signature& sig, const std::vector<Atom>& atoms) {
  for (const auto& a : atoms)
    if (a.universe() != sig.size())
      throw Error(ErrorKind::SignatureMismatch, "atom does not belong to the signature");
}

// Union of the uppers of atoms strictly (or non-strictly) inside `phi`.
IndexSet covered_part(std::span<const Atom> atoms, const Atom& phi, bool strict) {
  IndexSet cover(phi.universe());
  const auto width = phi.upper().count();
  for (const auto& eta : atoms) {
    if (strict && eta.upper().count() >= width) continue;
    if (eta.upper().is_subset_of(phi.upper())) cover |= eta.upper();
  }
  return cover;
}

}  // namespace

Model Model::make(Signature sig, std::vector<Atom> atoms) {
  if (sig.empty()) throw Error(ErrorKind::EmptySignature, "signature has no constants");
  require_atoms(sig, atoms);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  IndexSet covered(sig.size());
  for (const auto& a : atoms) covered |= a.upper();
  bool repaired = false;
  if (!(covered == sig.all())) {
    Atom zero = zero_atom(sig);
    atoms.insert(std::lower_bound(atoms.begin(), atoms.end(), zero), std::move(zero));
    repaired = true;
  }
  Model m(std::move(sig), std::move(atoms));
  m.repaired_ = repaired;
  return m;
}

Model Model::unchecked(Signature sig, std::vector<Atom> atoms) {
  if (sig.empty()) throw Error(ErrorKind::EmptySignature, "signature has no constants");
  require_atoms(sig, atoms);
  std::sort(atoms.begin(), atoms.end());
  return Model(std::move(sig), std::move(atoms));
}

bool Model::contains(const Atom& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

Model free_model(const Signature& sig) {
  std::vector<Atom> atoms;
  atoms.reserve(sig.size());
  for (std::size_t c = 0; c < sig.size(); ++c) atoms.emplace_back(IndexSet(sig.size(), {c}));
  return Model::make(sig, std::move(atoms));
}

IndexSet segment_mask(const Model& m, const Term& t) {
  require_term(m, t);
  IndexSet mask(m.size());
  const auto atoms = m.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].below(t)) mask.set(i);
  return mask;
}

std::vector<Atom> lower_atomic_segment(const Model& m, const Term& t) {
  require_term(m, t);
  std::vector<Atom> out;
  for (const auto& a : m.atoms())
    if (a.below(t)) out.push_back(a);
  return out;
}

std::vector<Atom> discriminant(const Model& m, const Term& a, const Term& b) {
  require_term(m, a);
  require_term(m, b);
  std::vector<Atom> out;
  for (const auto& phi : m.atoms())
    if (phi.below(a) && !phi.below(b)) out.push_back(phi);
  return out;
}

bool entails(const Model& m, const Term& left, const Term& right) {
  require_term(m, left);
  require_term(m, right);
  return std::none_of(m.atoms().begin(), m.atoms().end(),
                      [&](const Atom& phi) { return phi.below(left) && !phi.below(right); });
}

bool holds(const Model& m, const SignedDuple& d) {
  const bool positive = entails(m, d.duple.left, d.duple.right);
  return d.polarity == Polarity::Positive ? positive : !positive;
}

bool is_redundant(const Model& m, const Atom& phi) {
  if (phi.universe() != m.constants())
    throw Error(ErrorKind::SignatureMismatch, "atom does not belong to the model's signature");
  return covered_part(m.atoms(), phi, /*strict=*/true) == phi.upper();
}

Model reduce(const Model& m) {
  std::vector<Atom> kept;
  kept.reserve(m.size());
  for (const auto& phi : m.atoms())
    if (!(covered_part(m.atoms(), phi, true) == phi.upper())) kept.push_back(phi);
  return Model::make(m.signature(), std::move(kept));
}

Model union_model(const Model& a, const Model& b) {
  require_same_signature(a, b);
  std::vector<Atom> atoms(a.atoms().begin(), a.atoms().end());
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return Model::make(a.signature(), std::move(atoms));
}

bool is_freer(const Model& a, const Model& b) {
  require_same_signature(a, b);
  return std::all_of(b.atoms().begin(), b.atoms().end(), [&](const Atom& phi) {
    return covered_part(a.atoms(), phi, /*strict=*/false) == phi.upper();
  });
}

Term term_of(std::size_t constants, TermCode code) { return Term(IndexSet::from_mask(constants, code)); }

TermCode code_of(const Term& t) { return t.comps().to_mask(); }

TermRelation::TermRelation(std::size_t constants) : constants_(constants) {
  const std::size_t n = (std::size_t{1} << constants) - 1;
  rows_.assign(n, IndexSet(n));
}

std::size_t TermRelation::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

std::vector<Duple> TermRelation::pairs() const {
  std::vector<Duple> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    rows_[i].for_each([&](std::size_t j) {
      out.push_back({term_of(constants_, i + 1), term_of(constants_, j + 1)});
    });
  return out;
}

bool TermRelation::is_subset_of(const TermRelation& other) const {
  if (constants_ != other.constants_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  return true;
}

TermRelation containment_relation(std::size_t constants) {
  TermRelation rel(constants);
  const TermCode n = (TermCode{1} << constants) - 1;
  for (TermCode s = 1; s <= n; ++s)
    for (TermCode t = 1; t <= n; ++t)
      if ((s & ~t) == 0) rel.insert(s, t);
  return rel;
}

std::vector<Duple> TheorySlice::negatives() const {
  std::vector<Duple> out;
  const auto n = static_cast<TermCode>(positives_.term_count());
  for (TermCode s = 1; s <= n; ++s)
    for (TermCode t = 1; t <= n; ++t)
      if (!positives_.contains(s, t))
        out.push_back({term_of(positives_.constants(), s), term_of(positives_.constants(), t)});
  return out;
}

void require_enumerable(std::size_t constants, std::size_t cap) {
  if (constants > cap || constants >= 63)
    throw Error(ErrorKind::CapExceeded, "enumeration needs |C| <= " + std::to_string(cap) + ", got " +
                                            std::to_string(constants));
}

namespace {

// Lower atomic segment of every term, indexed by code - 1; uses linearity
// seg(s + t) = seg(s) | seg(t) to build each from its lowest constant.
std::vector<IndexSet> all_segments(const Model& m) {
  const std::size_t n = m.constants();
  const TermCode count = (TermCode{1} << n) - 1;
  std::vector<IndexSet> segs(count, IndexSet(m.size()));
  for (std::size_t c = 0; c < n; ++c) {
    auto& seg = segs[(TermCode{1} << c) - 1];
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.atoms()[i].upper().test(c)) seg.set(i);
  }
  for (TermCode code = 1; code <= count; ++code) {
    const TermCode rest = code & (code - 1);
    if (rest == 0) continue;
    segs[code - 1] = segs[rest - 1] | segs[(code & ~rest) - 1];
  }
  return segs;
}

}  // namespace

std::vector<ElementClass> enumerate_elements(const Model& m, std::size_t cap) {
  require_enumerable(m.constants(), cap);
  const auto segs = all_segments(m);
  std::map<IndexSet, std::vector<TermCode>> groups;
  for (TermCode code = 1; code <= segs.size(); ++code) groups[segs[code - 1]].push_back(code);

  std::vector<ElementClass> out;
  out.reserve(groups.size());
  for (auto& [seg, codes] : groups) {
    TermCode top = 0;
    std::vector<Term> members;
    for (auto c : codes) {
      top |= c;
      members.push_back(term_of(m.constants(), c));
    }
    std::sort(members.begin(), members.end());
    out.push_back({term_of(m.constants(), top), std::move(members), seg});
  }
  std::sort(out.begin(), out.end(),
            [](const ElementClass& a, const ElementClass& b) { return a.representative < b.representative; });
  return out;
}

TheorySlice enumerate_theory(const Model& m, std::size_t cap) {
  require_enumerable(m.constants(), cap);
  const auto classes = enumerate_elements(m, cap);
  const std::size_t n_terms = (std::size_t{1} << m.constants()) - 1;

  std::vector<IndexSet> member_sets;
  member_sets.reserve(classes.size());
  for (const auto& k : classes) {
    IndexSet s(n_terms);
    for (const auto& t : k.members) s.set(code_of(t) - 1);
    member_sets.push_back(std::move(s));
  }

  TermRelation rel(m.constants());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    IndexSet above(n_terms);
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (classes[i].segment.is_subset_of(classes[j].segment)) above |= member_sets[j];
    for (const auto& t : classes[i].members) rel.row(code_of(t)) = above;
  }
  return TheorySlice(std::move(rel));
}

Model reorder(const Model& m, const Signature& target) {
  if (target.size() != m.constants())
    throw Error(ErrorKind::SignatureMismatch, "target signature is not a permutation");
  std::vector<std::size_t> to(m.constants());
  for (std::size_t i = 0; i < m.constants(); ++i) {
    auto j = target.find(m.signature().name(i));
    if (!j) throw Error(ErrorKind::SignatureMismatch, "target signature lacks '" + m.signature().name(i) + "'");
    to[i] = *j;
  }
  std::vector<Atom> atoms;
  atoms.reserve(m.size());
  for (const auto& a : m.atoms()) {
    IndexSet up(target.size());
    a.upper().for_each([&](std::size_t i) { up.set(to[i]); });
    atoms.emplace_back(std::move(up));
  }
  return Model::make(target, std::move(atoms));
}

bool same_theory(const Model& a, const Model& b, std::size_t cap) {
  if (a.constants() != b.constants()) return false;
  for (const auto& n : b.signature().names())
    if (!a.signature().contains(n)) return false;
  return enumerate_theory(a, cap) == enumerate_theory(reorder(b, a.signature()), cap);
}

}  // namespace atomized
