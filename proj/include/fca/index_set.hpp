#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace fca {

/// Fixed-universe bitset over the ids 0..universe()-1 of one side of a context.
///
/// The tag keeps object sets and attribute sets apart at compile time. Bits at
/// positions >= universe() are always zero, so word-wise comparison is exact.
template <typename Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> ids) : IndexSet(universe) {
    for (std::size_t id : ids) insert(id);
  }

  IndexSet(std::size_t universe, std::span<const std::size_t> ids) : IndexSet(universe) {
    for (std::size_t id : ids) insert(id);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t id) const noexcept {
    return id < universe_ && (words_[id / kWordBits] >> (id % kWordBits)) & 1U;
  }

  void insert(std::size_t id) {
    check_id(id);
    words_[id / kWordBits] |= Word{1} << (id % kWordBits);
  }

  void erase(std::size_t id) {
    check_id(id);
    words_[id / kWordBits] &= ~(Word{1} << (id % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_full() const noexcept { return size() == universe_; }

  bool is_subset_of(const IndexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && words_ != other.words_;
  }

  /// Smallest id >= from, or universe() if there is none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= universe_) return universe_;
    std::size_t w = from / kWordBits;
    Word word = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (word != 0) {
        return std::min(universe_, w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      }
      if (++w == words_.size()) return universe_;
      word = words_[w];
    }
  }

  std::size_t find_first() const noexcept { return find_next(0); }

  /// The elements strictly below `bound`.
  IndexSet prefix(std::size_t bound) const {
    IndexSet s(universe_);
    bound = std::min(bound, universe_);
    const std::size_t whole = bound / kWordBits;
    std::copy_n(words_.begin(), whole, s.words_.begin());
    if (const std::size_t rest = bound % kWordBits; rest != 0) {
      s.words_[whole] = words_[whole] & ((Word{1} << rest) - 1);
    }
    return s;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (Word word = words_[w]; word != 0; word &= word - 1) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t id) { out.push_back(id); });
    return out;
  }

  std::span<const Word> words() const noexcept { return words_; }

  IndexSet& operator&=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  IndexSet& operator|=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// Set difference.
  IndexSet& operator-=(const IndexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  void trim() {
    if (const std::size_t rest = universe_ % kWordBits; rest != 0) {
      words_.back() &= (Word{1} << rest) - 1;
    }
  }

  void check_id(std::size_t id) const {
    if (id >= universe_) throw std::out_of_range("set id out of range");
  }

  void check_same_universe(const IndexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

/// Lectic order: a < b iff the smallest id on which they differ belongs to b.
template <typename Tag>
bool lectic_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
  if (a.universe() != b.universe()) throw std::invalid_argument("sets over different universes");
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (const auto diff = wa[i] ^ wb[i]; diff != 0) {
      return (wb[i] & (diff & (~diff + 1))) != 0;
    }
  }
  return false;
}

}  // namespace fca

template <typename Tag>
struct std::hash<fca::IndexSet<Tag>> {
  std::size_t operator()(const fca::IndexSet<Tag>& s) const noexcept {
    std::size_t h = s.universe();
    for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }
};
