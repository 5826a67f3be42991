#include "doctest.h"

#include <unordered_set>

#include "atomized/index_set.hpp"

using atomized::IndexSet;

TEST_CASE("basic membership and counting") {
  IndexSet s(10, {1, 4, 9});
  CHECK(s.test(1));
  CHECK(s.test(9));
  CHECK_FALSE(s.test(0));
  CHECK(s.count() == 3);
  s.reset(4);
  CHECK(s.indices() == std::vector<std::size_t>{1, 9});
  CHECK(IndexSet(5).empty());
  CHECK(IndexSet::full(5).count() == 5);
}

TEST_CASE("sets wider than one word") {
  IndexSet a(130, {0, 64, 129});
  IndexSet b(130, {64});
  CHECK(b.is_subset_of(a));
  CHECK(b.is_strict_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a - b).indices() == std::vector<std::size_t>{0, 129});
  CHECK((a & b) == b);
  CHECK(IndexSet::full(130).count() == 130);
  std::vector<std::size_t> seen;
  a.for_each([&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{0, 64, 129});
}

TEST_CASE("set algebra") {
  IndexSet a(6, {0, 1, 2});
  IndexSet b(6, {2, 3});
  CHECK((a | b).indices() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK((a & b).indices() == std::vector<std::size_t>{2});
  CHECK((a - b).indices() == std::vector<std::size_t>{0, 1});
  CHECK(a.intersects(b));
  CHECK_FALSE(IndexSet(6, {4}).intersects(a));
  CHECK_FALSE(a.is_strict_subset_of(a));
}

TEST_CASE("mask conversions") {
  const auto s = IndexSet::from_mask(5, 0b10110);
  CHECK(s.indices() == std::vector<std::size_t>{1, 2, 4});
  CHECK(s.to_mask() == 0b10110);
  CHECK(IndexSet::from_indices(5, {4, 1, 2}) == s);
}

TEST_CASE("ordering is lexicographic on sorted index lists") {
  // {0,1,2,3,4} < {0,2} < {2} < {2,3,4}
  const IndexSet all = IndexSet::full(5);
  const IndexSet s02(5, {0, 2});
  const IndexSet s2(5, {2});
  const IndexSet s234(5, {2, 3, 4});
  CHECK(all < s02);
  CHECK(s02 < s2);
  CHECK(s2 < s234);
  CHECK_FALSE(s234 < s2);
  CHECK((s2 <=> IndexSet(5, {2})) == std::strong_ordering::equal);
  // Prefix is smaller than its extension.
  CHECK(IndexSet(70, {3}) < IndexSet(70, {3, 68}));
  CHECK(IndexSet(70, {3, 68}) < IndexSet(70, {4}));
}

TEST_CASE("hashing is consistent with equality") {
  std::unordered_set<IndexSet, atomized::IndexSetHash> seen;
  seen.insert(IndexSet(8, {1, 2}));
  seen.insert(IndexSet::from_mask(8, 0b110));
  seen.insert(IndexSet(8, {3}));
  CHECK(seen.size() == 2);
}
