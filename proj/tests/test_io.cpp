#include "doctest.h"

#include "atomized/io.hpp"
#include "support.hpp"

using namespace atomized;
using support::labels;
using support::model;
using support::sig;

namespace {

ErrorKind import_error(const std::string& text) {
  try {
    io::model_from_json(io::Json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("import should fail: " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("model JSON round-trips") {
  const auto s = sig("a b c d e");
  const auto m = model(s, {"a", "a b", "c d e", "c", "d", "b e"});
  const auto j = io::model_to_json(m);
  CHECK(j.at("constants") == io::Json({"a", "b", "c", "d", "e"}));
  CHECK(io::model_from_json(j) == m);
  CHECK(io::model_from_json(io::Json::parse(j.dump())) == m);
}

TEST_CASE("random models round-trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto m = support::random_model(rng, support::numbered(6), 6);
    CHECK(io::model_from_json(io::Json::parse(io::model_to_json(m).dump())) == m);
  }
}

TEST_CASE("model import validation") {
  CHECK(import_error(R"({"constants": ["a"], "atoms": [["b"]]})") == ErrorKind::UndeclaredConstant);
  CHECK(import_error(R"({"constants": ["a'"], "atoms": []})") == ErrorKind::InvalidConstantName);
  CHECK(import_error(R"({"constants": ["a", "a"], "atoms": []})") == ErrorKind::DuplicateConstant);
  CHECK(import_error(R"({"constants": ["a"], "atoms": [[]]})") == ErrorKind::EmptyAtom);
  CHECK(import_error(R"({"constants": ["a"]})") == ErrorKind::ParseError);
  CHECK(import_error(R"({"constants": "a", "atoms": []})") == ErrorKind::ParseError);
  CHECK(import_error(R"({"constants": [], "atoms": []})") == ErrorKind::EmptySignature);
}

TEST_CASE("model import repairs coverage") {
  const auto m = io::model_from_json(io::Json::parse(R"({"constants": ["a", "b"], "atoms": [["a"]]})"));
  CHECK(m.repaired());
  CHECK(labels(m) == labels(sig("a b"), {"a", "a b"}));
}

TEST_CASE("rename map JSON") {
  RenameMap map(sig("g1 g2"));
  map.map("c1", {"g1"}).map("c2", {"g1", "g2"}).map("c3", {});
  const auto back = io::rename_map_from_json(io::rename_map_to_json(map));
  CHECK(back == map);
  CHECK_THROWS_AS(io::rename_map_from_json(io::Json::parse(R"({"map": {"c": ["x"]}, "targets": ["g"]})")), Error);
}

TEST_CASE("decomposition and embedding JSON") {
  const auto s = sig("a b c");
  const auto m = model(s, {"c", "a b c"});
  const auto d = io::decomposition_to_json(subdirect_decomposition(m));
  CHECK(d.at("tuples").at("a") == io::Json({"zbar1"}));
  CHECK(d.at("tuples").at("c") == io::Json({"z1"}));
  CHECK(d.at("components").at(0).at("atom") == io::Json({"c"}));

  const auto e = io::embedding_to_json(s, embed_in_free(m));
  CHECK(e.at("constants") == io::Json({"z1", "z2"}));
  CHECK(e.at("generators").at("c") == io::Json({"z1", "z2"}));
}

TEST_CASE("DOT export draws the Hasse diagram of elements") {
  const auto s = sig("a b c");
  const auto dot = io::to_dot(model(s, {"c", "a b c"}));
  CHECK(dot.rfind("digraph {", 0) == 0);
  CHECK(dot.find("\"a b\"->\"a b c\";") != std::string::npos);
  CHECK(dot.find("xlabel=\"{c}\"") != std::string::npos);

  // Free model on two constants: a and b are covered by a b, nothing else.
  const auto free_dot = io::to_dot(free_model(sig("a b")));
  CHECK(free_dot.find("\"a\"->\"a b\";") != std::string::npos);
  CHECK(free_dot.find("\"b\"->\"a b\";") != std::string::npos);
  CHECK(free_dot.find("\"a\"->\"b\"") == std::string::npos);
  CHECK(io::label(s, IndexSet(3, {0, 2})) == "a c");
}

TEST_CASE("DOT edges are exactly the covering pairs") {
  // Chain a < b < c: a->a b is a cover, a->a b c is not.
  const auto s = sig("a b c");
  const std::vector<Duple> ps{support::duple(s, "a <= b"), support::duple(s, "b <= c")};
  const auto dot = io::to_dot(freest_model(s, ps));
  CHECK(dot.find("\"a\"->\"a b\";") != std::string::npos);
  CHECK(dot.find("\"a b\"->\"a b c\";") != std::string::npos);
  CHECK(dot.find("\"a\"->\"a b c\";") == std::string::npos);
}
