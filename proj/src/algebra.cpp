#include "atomized/algebra.hpp"

#include <set>

namespace atomized {

namespace {

Signature concat(const Signature& a, const std::vector<std::string>& extra) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), extra.begin(), extra.end());
  return Signature(std::move(names));
}

// Copies `atoms` into a larger universe, shifting every index by `offset`.
void append_shifted(std::vector<Atom>& out, std::span<const Atom> atoms, std::size_t universe,
                    std::size_t offset) {
  for (const auto& a : atoms) {
    IndexSet up(universe);
    a.upper().for_each([&](std::size_t i) { up.set(i + offset); });
    out.emplace_back(std::move(up));
  }
}

void require_fresh(const Signature& sig, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (sig.contains(n))
      throw Error(ErrorKind::NameCollision, "name '" + n + "' is already a constant of the model");
    if (!seen.insert(n).second) throw Error(ErrorKind::NameCollision, "name '" + n + "' given twice");
  }
}

void require_generators(const Model& m, const std::vector<Term>& generators,
                        const std::vector<std::string>& names) {
  if (generators.size() != names.size())
    throw Error(ErrorKind::InvalidArgument, "need exactly one name per generator");
  if (generators.empty()) throw Error(ErrorKind::EmptySignature, "no generators given");
  for (const auto& t : generators)
    if (t.universe() != m.constants())
      throw Error(ErrorKind::SignatureMismatch, "generator is not a term of the model's signature");
  require_fresh(m.signature(), names);
}

}  // namespace

Model restrict(const Model& m, const IndexSet& keep) {
  if (keep.universe() != m.constants())
    throw Error(ErrorKind::SignatureMismatch, "restriction set does not belong to the signature");
  if (keep.empty()) throw Error(ErrorKind::EmptyRestrictionSet, "restriction set is empty");

  std::vector<std::size_t> position(m.constants(), 0);
  std::vector<std::string> names;
  keep.for_each([&](std::size_t i) {
    position[i] = names.size();
    names.push_back(m.signature().name(i));
  });

  std::vector<Atom> atoms;
  for (const auto& a : m.atoms()) {
    IndexSet up(names.size());
    (a.upper() & keep).for_each([&](std::size_t i) { up.set(position[i]); });
    if (!up.empty()) atoms.emplace_back(std::move(up));
  }
  return Model::make(Signature(std::move(names)), std::move(atoms));
}

Model restrict(const Model& m, const std::vector<std::string>& keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyRestrictionSet, "restriction set is empty");
  return restrict(m, m.signature().subset(keep));
}

bool restriction_homomorphism_exists(const Model& m, const std::vector<std::string>& q) {
  const Model r = restrict(m, q);
  // The zero atom is non-redundant in r iff some constant is below all others.
  for (std::size_t bottom = 0; bottom < r.constants(); ++bottom) {
    const Term t(IndexSet(r.constants(), {bottom}));
    bool below_all = true;
    for (std::size_t c = 0; c < r.constants() && below_all; ++c)
      below_all = entails(r, t, Term(IndexSet(r.constants(), {c})));
    if (below_all) return true;
  }
  return false;
}

RenameMap& RenameMap::map(const std::string& source, const std::vector<std::string>& targets) {
  for (const auto& t : targets)
    if (!targets_.contains(t))
      throw Error(ErrorKind::UnknownTargetConstant, "rename target '" + t + "' is not in the target signature");
  entries_[source] = targets;
  return *this;
}

IndexSet RenameMap::image(const std::string& source) const {
  if (auto it = entries_.find(source); it != entries_.end()) return targets_.subset(it->second);
  if (auto i = targets_.find(source)) return IndexSet(targets_.size(), {*i});
  throw Error(ErrorKind::RenameMapIncomplete, "rename map does not cover constant '" + source + "'");
}

Model rename(const Model& m, const RenameMap& map) {
  std::vector<IndexSet> images;
  images.reserve(m.constants());
  for (const auto& name : m.signature().names()) images.push_back(map.image(name));

  std::vector<Atom> atoms;
  for (const auto& a : m.atoms()) {
    IndexSet up(map.targets().size());
    a.upper().for_each([&](std::size_t i) { up |= images[i]; });
    if (!up.empty()) atoms.emplace_back(std::move(up));
  }
  if (atoms.empty())
    throw Error(ErrorKind::EmptySignature, "rename annihilates every atom; nothing is left to spawn a model");
  return Model::make(map.targets(), std::move(atoms));
}

Model quotient(const Model& m, const Term& a, const Term& b) {
  return full_crossing(full_crossing(m, Duple{b, a}), Duple{a, b});
}

std::string fresh_prime(const std::string& base, const Signature& taken) {
  std::string name = base + "'";
  while (taken.contains(name)) name += "'";
  return name;
}

Model join(const Model& m, const Model& n) {
  const auto& cm = m.signature();
  const auto& cn = n.signature();

  std::vector<std::string> n_names;   // N's constants, shared ones primed
  std::vector<std::string> kept = cm.names();  // C_M u C_N, M's constants first
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (index in M, index in N)
  for (std::size_t j = 0; j < cn.size(); ++j) {
    const auto& name = cn.name(j);
    if (auto i = cm.find(name)) {
      shared.emplace_back(*i, j);
      n_names.push_back("");
    } else {
      n_names.push_back(name);
      kept.push_back(name);
    }
  }
  // Primes must avoid every name on either side and each other.
  std::vector<std::string> all_names = cm.names();
  for (const auto& name : cn.names())
    if (!cm.contains(name)) all_names.push_back(name);
  for (const auto& [i, j] : shared) {
    const std::string primed = fresh_prime(cn.name(j), Signature(all_names));
    n_names[j] = primed;
    all_names.push_back(primed);
  }

  const Signature wide = concat(cm, n_names);
  std::vector<Atom> atoms;
  append_shifted(atoms, m.atoms(), wide.size(), 0);
  append_shifted(atoms, n.atoms(), wide.size(), cm.size());
  Model sum = Model::make(wide, std::move(atoms));
  if (shared.empty()) return sum;

  std::vector<Duple> equate;
  for (const auto& [i, j] : shared) {
    const Term c(IndexSet(wide.size(), {i}));
    const Term c_primed(IndexSet(wide.size(), {cm.size() + j}));
    equate.push_back({c_primed, c});
    equate.push_back({c, c_primed});
  }
  const Model crossed = cross_all(std::move(sum), equate, ReducePolicy::AfterEach);
  return restrict(crossed, wide.subset(kept));
}

Model subalgebra(const Model& m, const std::vector<Term>& generators, const std::vector<std::string>& names) {
  require_generators(m, generators, names);
  RenameMap map{Signature(names)};
  for (std::size_t k = 0; k < m.constants(); ++k) {
    std::vector<std::string> targets;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].comps().test(k)) targets.push_back(names[i]);
    map.map(m.signature().name(k), targets);
  }
  return rename(m, map);
}

Model subalgebra_by_crossing(const Model& m, const std::vector<Term>& generators,
                             const std::vector<std::string>& names) {
  require_generators(m, generators, names);
  const Signature wide = concat(m.signature(), names);
  std::vector<Atom> atoms;
  append_shifted(atoms, m.atoms(), wide.size(), 0);
  for (std::size_t i = 0; i < names.size(); ++i) atoms.emplace_back(IndexSet(wide.size(), {m.constants() + i}));
  Model current = Model::make(wide, std::move(atoms));

  for (std::size_t i = 0; i < generators.size(); ++i) {
    IndexSet t(wide.size());
    generators[i].comps().for_each([&](std::size_t c) { t.set(c); });
    const Term term(std::move(t));
    const Term g(IndexSet(wide.size(), {m.constants() + i}));
    current = full_crossing(current, Duple{term, g});
    current = full_crossing(current, Duple{g, term});
  }
  return restrict(current, wide.subset(names));
}

std::string product_constant_name(std::size_t i, std::size_t j) {
  return "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Model product(const Model& m, const Model& n, ProductOptions options) {
  const std::size_t rows = m.constants();
  const std::size_t cols = n.constants();
  const std::size_t size = rows * cols;

  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) names.push_back(product_constant_name(i, j));

  if (options.identify_diagonal) {
    for (std::size_t i = 0; i < rows; ++i)
      if (auto j = n.signature().find(m.signature().name(i))) names[i * cols + *j] = m.signature().name(i);
    std::set<std::string> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second)
        throw Error(ErrorKind::NameCollision, "diagonal name '" + name + "' collides with a pair constant");
  }

  std::vector<Atom> atoms;
  atoms.reserve(m.size() + n.size());
  for (const auto& a : m.atoms()) {
    IndexSet up(size);
    a.upper().for_each([&](std::size_t i) {
      for (std::size_t j = 0; j < cols; ++j) up.set(i * cols + j);
    });
    atoms.emplace_back(std::move(up));
  }
  for (const auto& b : n.atoms()) {
    IndexSet up(size);
    b.upper().for_each([&](std::size_t j) {
      for (std::size_t i = 0; i < rows; ++i) up.set(i * cols + j);
    });
    atoms.emplace_back(std::move(up));
  }
  return Model::make(Signature(std::move(names)), std::move(atoms));
}

SubdirectDecomposition subdirect_decomposition(const Model& m) {
  const Model r = reduce(m);
  const Atom zero = zero_atom(r.signature());
  SubdirectDecomposition d{r.signature(), {}, {}};
  for (const auto& a : r.atoms()) {
    if (a == zero) continue;
    const auto j = std::to_string(d.components.size() + 1);
    d.components.push_back({a, "z" + j, "zbar" + j});
  }
  if (d.components.empty())
    throw Error(ErrorKind::TrivialModel, "the one-element model has no subdirect decomposition");

  d.tuples.assign(r.constants(), std::vector<bool>(d.components.size(), false));
  for (std::size_t i = 0; i < r.constants(); ++i)
    for (std::size_t j = 0; j < d.components.size(); ++j) d.tuples[i][j] = d.components[j].atom.upper().test(i);
  return d;
}

Model component_model(const SubdirectComponent& c) {
  Signature sig({c.top_name, c.bottom_name});
  return Model::make(sig, {Atom(2, {0}), Atom(2, {0, 1})});
}

Model subdirect_reconstruct(const SubdirectDecomposition& d) {
  Model whole = component_model(d.components.front());
  for (std::size_t j = 1; j < d.components.size(); ++j) whole = product(whole, component_model(d.components[j]));

  // Row-major pair indexing makes a tuple's constant index its mixed-radix
  // value, with top = 0 and bottom = 1 in every coordinate.
  std::vector<Term> generators;
  for (const auto& tuple : d.tuples) {
    std::size_t index = 0;
    for (bool top : tuple) index = index * 2 + (top ? 0 : 1);
    generators.emplace_back(IndexSet(whole.constants(), {index}));
  }
  return subalgebra(whole, generators, d.source.names());
}

FreeEmbedding embed_in_free(const Model& m) {
  std::vector<std::string> z;
  for (std::size_t k = 0; k < m.size(); ++k) z.push_back("z" + std::to_string(k + 1));
  FreeEmbedding e{Signature(std::move(z)), {}};
  for (std::size_t i = 0; i < m.constants(); ++i) {
    IndexSet comps(m.size());
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m.atoms()[k].upper().test(i)) comps.set(k);
    e.generators.emplace_back(std::move(comps));
  }
  return e;
}

}  // namespace atomized
