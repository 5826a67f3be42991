#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace atomized {

/// Dynamic-width set of indices in [0, universe).
///
/// Used for upper constant segments, term components and atom masks. Two sets
/// compare equal only when they share a universe and hold the same indices.
/// The ordering is lexicographic on the ascending index lists, so {0} < {0,1} < {1}.
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe);
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> indices);

  static IndexSet full(std::size_t universe);
  static IndexSet from_indices(std::size_t universe, const std::vector<std::size_t>& indices);
  // Low `universe` bits of `mask`; universe must be <= 64.
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  bool empty() const noexcept;
  std::size_t count() const noexcept;
  bool intersects(const IndexSet& other) const noexcept;
  bool is_subset_of(const IndexSet& other) const noexcept;
  bool is_strict_subset_of(const IndexSet& other) const noexcept {
    return is_subset_of(other) && !(*this == other);
  }

  IndexSet& operator|=(const IndexSet& other) noexcept;
  IndexSet& operator&=(const IndexSet& other) noexcept;
  IndexSet& operator-=(const IndexSet& other) noexcept;

  friend IndexSet operator|(IndexSet a, const IndexSet& b) noexcept { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) noexcept { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) noexcept { return a -= b; }

  // Low 64 bits; only meaningful when universe <= 64.
  std::uint64_t to_mask() const noexcept { return words_.empty() ? 0 : words_.front(); }

  std::vector<std::size_t> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace atomized
