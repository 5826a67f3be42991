#include "atomized/index_set.hpp"

#include <algorithm>

namespace atomized {

namespace {

std::size_t words_for(std::size_t universe) {
  return (universe + IndexSet::kWordBits - 1) / IndexSet::kWordBits;
}

}  // namespace

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

IndexSet::IndexSet(std::size_t universe, std::initializer_list<std::size_t> indices)
    : IndexSet(universe) {
  for (auto i : indices) set(i);
}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~Word{0};
  if (auto tail = universe % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

IndexSet IndexSet::from_indices(std::size_t universe, const std::vector<std::size_t>& indices) {
  IndexSet s(universe);
  for (auto i : indices) s.set(i);
  return s;
}

IndexSet IndexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  IndexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask & full(universe).words_[0];
  return s;
}

bool IndexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t IndexSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndexSet::intersects(const IndexSet& other) const noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const Word theirs = w < other.words_.size() ? other.words_[w] : 0;
    if (words_[w] & ~theirs) return false;
  }
  return true;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] |= other.words_[w];
  return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t IndexSet::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  // Lowest index where the sets differ decides: the set holding it is smaller
  // unless the other set has nothing left above it (then the other is a prefix).
  const auto n = a.words_.size();
  for (std::size_t w = 0; w < n; ++w) {
    const IndexSet::Word diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const IndexSet::Word above = ~((IndexSet::Word{2} << bit) - 1);
    const bool a_holds = (a.words_[w] >> bit) & 1;
    const IndexSet& other = a_holds ? b : a;
    bool other_continues = (other.words_[w] & above) != 0;
    for (std::size_t v = w + 1; !other_continues && v < n; ++v) other_continues = other.words_[v] != 0;
    const bool a_smaller = a_holds ? other_continues : !other_continues;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace atomized
