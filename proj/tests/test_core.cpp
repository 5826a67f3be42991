#include "doctest.h"

#include "atomized/core.hpp"
#include "support.hpp"

using namespace atomized;
using support::atom;
using support::sig;
using support::term;

TEST_CASE("signature construction and lookup") {
  const auto s = sig("a b c");
  CHECK(s.size() == 3);
  CHECK(s.index("b") == 1);
  CHECK_FALSE(s.find("z").has_value());
  CHECK(s.subset({"a", "c"}) == IndexSet(3, {0, 2}));

  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { Signature(std::vector<std::string>{}); }) == ErrorKind::EmptySignature);
  CHECK(kind_of([] { Signature({"a", "a"}); }) == ErrorKind::DuplicateConstant);
  CHECK(kind_of([] { Signature({"a", ""}); }) == ErrorKind::InvalidConstantName);
  CHECK(kind_of([&] { (void)s.index("q"); }) == ErrorKind::UnknownConstant);
}

TEST_CASE("constant name rules") {
  CHECK(is_valid_constant_name("g1_2"));
  CHECK(is_valid_constant_name("zbar3"));
  CHECK_FALSE(is_valid_constant_name(""));
  CHECK_FALSE(is_valid_constant_name("c'"));
  CHECK_FALSE(is_valid_constant_name("a#b"));
  CHECK_FALSE(is_valid_constant_name("a b"));
  CHECK_FALSE(is_valid_constant_name("<="));
}

TEST_CASE("atoms and terms reject empty sets") {
  CHECK_THROWS_AS(Atom(IndexSet(3)), Error);
  CHECK_THROWS_AS(Term(IndexSet(3)), Error);
}

TEST_CASE("an atom is below a term when its upper segment meets the term") {
  const auto s = sig("a b c d e");
  CHECK(atom(s, "b e").below(term(s, "a b")));
  CHECK_FALSE(atom(s, "b e").below(term(s, "a d")));
}

TEST_CASE("atom union") {
  const auto s = sig("a b c d e");
  CHECK(atom_union(atom(s, "b e"), atom(s, "a")) == atom(s, "a b e"));
  CHECK(atom_union(atom(s, "c"), atom(s, "c")) == atom(s, "c"));
  CHECK(atom_union(atom(s, "c d e"), atom(s, "b d e")) == atom(s, "b c d e"));
  CHECK_THROWS_AS(atom_union(Atom(3, {0}), Atom(4, {0})), Error);
}

TEST_CASE("wider means strict superset") {
  const auto s = sig("a b c d e");
  CHECK(is_wider(atom(s, "a b e"), atom(s, "a b")));
  CHECK_FALSE(is_wider(atom(s, "a b"), atom(s, "a b")));
  CHECK_FALSE(is_wider(atom(s, "a b"), atom(s, "b c")));
}

TEST_CASE("zero atom covers every constant") {
  CHECK(zero_atom(sig("a b c")) == atom(sig("a b c"), "a b c"));
  CHECK(zero_atom(sig("a")).upper().count() == 1);
  CHECK(zero_atom(sig("a b c d e")).upper().count() == 5);
}

TEST_CASE("pinning term and duples") {
  const auto s = sig("a b c d e");
  const auto p = pinning(atom(s, "b e"), s);
  CHECK(p.term == term(s, "a c d"));
  REQUIRE(p.duples.size() == 2);
  CHECK(p.duples[0] == SignedDuple::negative(term(s, "b"), term(s, "a c d")));
  CHECK(p.duples[1] == SignedDuple::negative(term(s, "e"), term(s, "a c d")));

  const auto s3 = sig("a b c");
  const auto q = pinning(atom(s3, "c"), s3);
  CHECK(q.term == term(s3, "a b"));
  CHECK(q.duples.size() == 1);

  try {
    pinning(zero_atom(s3), s3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroAtomHasNoPinningTerm);
  }
}

TEST_CASE("names_of lists constants in signature order") {
  const auto s = sig("x y z");
  CHECK(names_of(s, IndexSet(3, {2, 0})) == std::vector<std::string>{"x", "z"});
  CHECK(make_term(s, {"z", "x"}) == Term(3, {0, 2}));
  CHECK(make_atom(s, {"y"}) == Atom(3, {1}));
}
