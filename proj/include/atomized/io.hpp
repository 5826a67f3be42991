#pragma once

#include <string>

#include "json.hpp"

#include "atomized/algebra.hpp"
#include "atomized/model.hpp"

namespace atomized::io {

using Json = nlohmann::json;

/// {"constants": [...], "atoms": [[names...], ...]}; atoms as name lists in
/// signature order, the list in canonical atom order.
Json model_to_json(const Model& m);
/// Validates constant names and atom membership; coverage is repaired the same
/// way Model::make does.
Model model_from_json(const Json& doc);

/// {"map": {"c1": ["g1","g3"], "c3": []}, "targets": ["g1", ...]}
Json rename_map_to_json(const RenameMap& map);
RenameMap rename_map_from_json(const Json& doc);

Json decomposition_to_json(const SubdirectDecomposition& d);
Json embedding_to_json(const Signature& source, const FreeEmbedding& e);

/// Space-separated constant names of a term or atom, in signature order.
std::string label(const Signature& sig, const IndexSet& set);

/// Hasse diagram of the model's elements: one node per element class labelled
/// by its representative, an edge for each covering pair (lower -> upper).
/// Atoms are not nodes: each element's `xlabel` lists the atoms below it that
/// are below none of the elements it covers. Requires |C| <= cap.
std::string to_dot(const Model& m, std::size_t cap = kDefaultEnumerationCap);

}  // namespace atomized::io
