#include "atomized/io.hpp"

#include <sstream>

namespace atomized::io {

namespace {

[[noreturn]] void bad_document(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::vector<std::string> name_list(const Json& j, const char* what) {
  if (!j.is_array()) bad_document(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) bad_document(std::string(what) + " must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Signature checked_signature(const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!is_valid_constant_name(n))
      throw Error(ErrorKind::InvalidConstantName, "invalid constant name '" + n + "'");
  return Signature(names);
}

IndexSet names_to_set(const Signature& sig, const std::vector<std::string>& names) {
  IndexSet s(sig.size());
  for (const auto& n : names) {
    auto i = sig.find(n);
    if (!i) throw Error(ErrorKind::UndeclaredConstant, "undeclared constant '" + n + "'");
    s.set(*i);
  }
  return s;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json model_to_json(const Model& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) atoms.push_back(names_of(m.signature(), a.upper()));
  return Json{{"constants", m.signature().names()}, {"atoms", std::move(atoms)}};
}

Model model_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("constants") || !doc.contains("atoms"))
    bad_document("model document needs \"constants\" and \"atoms\"");
  const Signature sig = checked_signature(name_list(doc.at("constants"), "constants"));
  if (!doc.at("atoms").is_array()) bad_document("\"atoms\" must be an array");
  std::vector<Atom> atoms;
  for (const auto& a : doc.at("atoms")) {
    IndexSet up = names_to_set(sig, name_list(a, "atom"));
    if (up.empty()) throw Error(ErrorKind::EmptyAtom, "atom with no constants");
    atoms.emplace_back(std::move(up));
  }
  return Model::make(sig, std::move(atoms));
}

Json rename_map_to_json(const RenameMap& map) {
  Json entries = Json::object();
  for (const auto& [source, targets] : map.entries()) entries[source] = targets;
  return Json{{"map", std::move(entries)}, {"targets", map.targets().names()}};
}

RenameMap rename_map_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("map") || !doc.contains("targets"))
    bad_document("rename map needs \"map\" and \"targets\"");
  RenameMap map(checked_signature(name_list(doc.at("targets"), "targets")));
  if (!doc.at("map").is_object()) bad_document("\"map\" must be an object");
  for (const auto& [source, targets] : doc.at("map").items()) map.map(source, name_list(targets, "map entry"));
  return map;
}

Json decomposition_to_json(const SubdirectDecomposition& d) {
  Json components = Json::array();
  for (const auto& c : d.components)
    components.push_back(
        {{"atom", names_of(d.source, c.atom.upper())}, {"top", c.top_name}, {"bottom", c.bottom_name}});
  Json tuples = Json::object();
  for (std::size_t i = 0; i < d.tuples.size(); ++i) {
    Json coords = Json::array();
    for (std::size_t j = 0; j < d.components.size(); ++j)
      coords.push_back(d.tuples[i][j] ? d.components[j].top_name : d.components[j].bottom_name);
    tuples[d.source.name(i)] = std::move(coords);
  }
  return Json{{"constants", d.source.names()}, {"components", std::move(components)}, {"tuples", std::move(tuples)}};
}

Json embedding_to_json(const Signature& source, const FreeEmbedding& e) {
  Json generators = Json::object();
  for (std::size_t i = 0; i < e.generators.size(); ++i)
    generators[source.name(i)] = names_of(e.free_constants, e.generators[i].comps());
  return Json{{"constants", e.free_constants.names()}, {"generators", std::move(generators)}};
}

std::string label(const Signature& sig, const IndexSet& set) {
  std::string out;
  set.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += sig.name(i);
  });
  return out;
}

std::string to_dot(const Model& m, std::size_t cap) {
  const auto classes = enumerate_elements(m, cap);
  const auto& sig = m.signature();
  const std::size_t k = classes.size();

  // below[i][j]: element i strictly below element j.
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      below[i][j] = i != j && classes[i].segment.is_subset_of(classes[j].segment);

  std::ostringstream out;
  out << "digraph {\n";
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t j = 0; j < k; ++j) {
    IndexSet inherited(m.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (std::size_t mid = 0; mid < k && covering; ++mid) covering = !(below[i][mid] && below[mid][j]);
      if (covering) {
        covers.emplace_back(i, j);
        inherited |= classes[i].segment;
      }
    }
    std::string atoms;
    (classes[j].segment - inherited).for_each([&](std::size_t a) {
      if (!atoms.empty()) atoms += ' ';
      atoms += "{" + label(sig, m.atoms()[a].upper()) + "}";
    });
    out << "  " << quoted(label(sig, classes[j].representative.comps()));
    if (!atoms.empty()) out << " [xlabel=" << quoted(atoms) << "]";
    out << ";\n";
  }
  for (const auto& [i, j] : covers)
    out << "  " << quoted(label(sig, classes[i].representative.comps())) << "->"
        << quoted(label(sig, classes[j].representative.comps())) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace atomized::io
