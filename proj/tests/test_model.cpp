#include "doctest.h"

#include "atomized/model.hpp"
#include "support.hpp"

using namespace atomized;
using support::atom;
using support::labels;
using support::model;
using support::sig;
using support::term;

namespace {

const Signature kFive = sig("a b c d e");

// Model before the crossing in the worked example.
Model example_model() { return model(kFive, {"a", "a b", "c d e", "c", "d", "b e"}); }

std::set<std::string> atom_set(const std::vector<Atom>& atoms) {
  std::set<std::string> out;
  for (const auto& a : atoms) out.insert(script::format_term(kFive, Term(a.upper())));
  return out;
}

}  // namespace

TEST_CASE("make sorts, deduplicates and repairs coverage") {
  const auto s = sig("a b");
  const auto repaired = model(s, {"a"});
  CHECK(repaired.repaired());
  CHECK(labels(repaired) == labels(s, {"a", "a b"}));

  const auto dedup = model(s, {"a", "b", "a"});
  CHECK_FALSE(dedup.repaired());
  CHECK(dedup.size() == 2);

  const auto s3 = sig("a b c");
  const auto empty = Model::make(s3, {});
  CHECK(labels(empty) == labels(s3, {"a b c"}));

  // Canonical order does not depend on input order.
  CHECK(model(kFive, {"c", "a b c"}) == model(kFive, {"a b c", "c"}));
}

TEST_CASE("lower atomic segment") {
  const auto m = example_model();
  CHECK(atom_set(lower_atomic_segment(m, term(kFive, "a d"))) ==
        labels(kFive, {"a", "a b", "c d e", "d"}));
  CHECK(lower_atomic_segment(m, term(kFive, "a b c d e")).size() == m.size());

  const auto s3 = sig("a b c");
  const auto small = model(s3, {"c", "a b c"});
  const auto seg = lower_atomic_segment(small, term(s3, "b"));
  REQUIRE(seg.size() == 1);
  CHECK(seg[0] == atom(s3, "a b c"));
}

TEST_CASE("discriminant") {
  const auto m = example_model();
  CHECK(atom_set(discriminant(m, term(kFive, "b"), term(kFive, "a d"))) == labels(kFive, {"b e"}));
  CHECK(discriminant(m, term(kFive, "c d"), term(kFive, "c d")).empty());

  const auto s3 = sig("a b c");
  const auto f = free_model(s3);
  const auto d = discriminant(f, term(s3, "a b"), term(s3, "c"));
  CHECK(d.size() == 2);
}

TEST_CASE("holds") {
  const auto m = example_model();
  CHECK(holds(m, SignedDuple::negative(term(kFive, "b"), term(kFive, "a d"))));
  CHECK(holds(m, SignedDuple::positive(term(kFive, "c e"), term(kFive, "c e"))));

  const auto s3 = sig("a b c");
  const auto ab = model(s3, {"c", "a b c"});
  CHECK(holds(ab, SignedDuple::positive(term(s3, "a"), term(s3, "b"))));
  CHECK(holds(ab, SignedDuple::positive(term(s3, "b"), term(s3, "a"))));
  CHECK(holds(ab, SignedDuple::negative(term(s3, "c"), term(s3, "a"))));
}

TEST_CASE("redundancy") {
  const auto crossed = model(kFive, {"a", "a b", "c d e", "c", "d", "a b e", "b c d e", "b d e"});
  CHECK(is_redundant(crossed, atom(kFive, "b c d e")));
  CHECK_FALSE(is_redundant(crossed, atom(kFive, "a")));
  const auto s3 = sig("a b c");
  CHECK(is_redundant(free_model(s3), atom(s3, "a b c")));
}

TEST_CASE("reduce") {
  const auto crossed = model(kFive, {"a", "a b", "c d e", "c", "d", "a b e", "b c d e", "b d e"});
  const auto r = reduce(crossed);
  CHECK(r.size() == 7);
  CHECK(labels(r) == labels(kFive, {"a", "a b", "c d e", "c", "d", "a b e", "b d e"}));

  const auto s3 = sig("a b c");
  CHECK(reduce(model(s3, {"a", "b", "c", "a b c"})) == free_model(s3));
  const auto zero_only = model(s3, {"a b c"});
  CHECK(reduce(zero_only) == zero_only);
}

TEST_CASE("union of models") {
  // Halves that each leave constants uncovered, taken as given.
  auto half = [](const std::vector<std::string>& atoms) {
    std::vector<Atom> out;
    for (const auto& a : atoms) out.push_back(atom(kFive, a));
    return Model::unchecked(kFive, out);
  };
  const auto m = half({"c", "a b c"});
  const auto n = half({"c d e"});
  CHECK(labels(union_model(m, n)) == labels(kFive, {"c", "a b c", "c d e"}));
  const auto whole = model(kFive, {"c", "a b c", "c d e"});
  CHECK(union_model(whole, whole) == whole);
  const auto s2 = sig("a b");
  CHECK(union_model(Model::unchecked(s2, {atom(s2, "a")}), Model::unchecked(s2, {atom(s2, "b")})) ==
        free_model(s2));
}

TEST_CASE("freer") {
  const auto s3 = sig("a b c");
  CHECK(is_freer(free_model(s3), model(s3, {"c", "a b c"})));
  CHECK(is_freer(free_model(s3), free_model(s3)));
  const auto s2 = sig("a b");
  CHECK(is_freer(model(s2, {"a", "b"}), model(s2, {"a b"})));
  CHECK_FALSE(is_freer(model(s2, {"a b"}), model(s2, {"a", "b"})));
}

TEST_CASE("element enumeration") {
  const auto s2 = sig("a b");
  CHECK(enumerate_elements(free_model(s2)).size() == 3);
  const auto one = enumerate_elements(model(s2, {"a b"}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].members.size() == 3);
  CHECK(one[0].representative == term(s2, "a b"));

  // a = b < c
  const auto s3 = sig("a b c");
  const auto classes = enumerate_elements(model(s3, {"c", "a b c"}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].representative == term(s3, "a b"));
  CHECK(classes[0].members.size() == 3);
  CHECK(classes[1].representative == term(s3, "a b c"));
  CHECK(classes[1].members.size() == 4);
}

TEST_CASE("theory enumeration") {
  const auto s2 = sig("a b");
  const auto free_theory = enumerate_theory(free_model(s2));
  CHECK(free_theory.positive_relation() == containment_relation(2));
  CHECK(free_theory.positives().size() == 5);

  CHECK(enumerate_theory(model(s2, {"a b"})).positives().size() == 9);
  CHECK(enumerate_theory(model(s2, {"a b"})).negatives().empty());

  const auto th = enumerate_theory(example_model());
  CHECK(th.is_negative(term(kFive, "b"), term(kFive, "a d")));
}

TEST_CASE("enumeration cap") {
  const auto big = support::numbered(12);
  try {
    enumerate_elements(free_model(big));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK(enumerate_elements(free_model(big), 12).size() == 4095);
}

TEST_CASE("reorder and same_theory") {
  const auto s = sig("a b c");
  const auto m = model(s, {"c", "a b c"});
  const auto target = sig("c b a");
  const auto r = reorder(m, target);
  CHECK(r.signature() == target);
  CHECK(same_theory(m, r));
  CHECK_FALSE(same_theory(m, free_model(s)));
}
