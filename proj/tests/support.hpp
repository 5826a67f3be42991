#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "atomized/algebra.hpp"
#include "atomized/crossing.hpp"
#include "atomized/model.hpp"
#include "atomized/script.hpp"

namespace support {

using namespace atomized;

inline std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline Signature sig(std::string_view names) { return Signature(words(names)); }

/// Constants c1..cn.
inline Signature numbered(std::size_t n, const std::string& prefix = "c") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return Signature(names);
}

inline Term term(const Signature& s, std::string_view t) { return script::parse_term(s, t); }
inline Duple duple(const Signature& s, std::string_view d) { return script::parse_duple(s, d); }
inline Atom atom(const Signature& s, std::string_view a) { return Atom(term(s, a).comps()); }

/// Model from atom literals such as {"c", "a b c"}.
inline Model model(const Signature& s, const std::vector<std::string>& atoms) {
  std::vector<Atom> out;
  for (const auto& a : atoms) out.push_back(atom(s, a));
  return Model::make(s, out);
}

/// Atom labels as a set, independent of atom order.
inline std::set<std::string> labels(const Model& m) {
  std::set<std::string> out;
  for (const auto& a : m.atoms()) out.insert(script::format_term(m.signature(), Term(a.upper())));
  return out;
}

inline std::set<std::string> labels(const Signature& s, const std::vector<std::string>& atoms) {
  std::set<std::string> out;
  for (const auto& a : atoms) out.insert(script::format_term(s, term(s, a)));
  return out;
}

/// Uniformly random non-empty term over n constants.
inline Term random_term(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
  return Term(IndexSet::from_mask(n, pick(rng)));
}

/// Term of 1..max_size distinct constants.
inline Term small_term(std::mt19937_64& rng, std::size_t n, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size_pick(1, std::min(max_size, n));
  std::uniform_int_distribution<std::size_t> constant(0, n - 1);
  const std::size_t size = size_pick(rng);
  IndexSet comps(n);
  while (comps.count() < size) comps.set(constant(rng));
  return Term(comps);
}

inline std::vector<Duple> random_duples(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::vector<Duple> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({random_term(rng, n), random_term(rng, n)});
  return out;
}

/// Random model: free model over n constants crossed with a few random duples.
inline Model random_model(std::mt19937_64& rng, const Signature& s, std::size_t max_duples = 4) {
  std::uniform_int_distribution<std::size_t> count(0, max_duples);
  const auto ds = random_duples(rng, s.size(), count(rng));
  return freest_model(s, ds);
}

}  // namespace support
