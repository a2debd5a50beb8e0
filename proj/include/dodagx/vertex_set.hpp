#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dodagx {

using VertexId = std::uint32_t;

/// Fixed-capacity dynamic bitset over vertex ids [0, capacity).
///
/// Used both as an adjacency row and as a general vertex set. All binary
/// operations require equal capacity.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool test(VertexId v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
  bool contains(VertexId v) const { return v < capacity_ && test(v); }
  void set(VertexId v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void reset(VertexId v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void flip(VertexId v) { words_[v / kWordBits] ^= Word{1} << (v % kWordBits); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Lowest member, or capacity() when empty.
  VertexId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<VertexId>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return static_cast<VertexId>(capacity_);
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Calls f(v) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<VertexId>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  static VertexSet of(std::size_t capacity, std::initializer_list<VertexId> members) {
    VertexSet s(capacity);
    for (auto v : members) s.set(v);
    return s;
  }

 private:
  void trim() {
    const std::size_t tail = capacity_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

}  // namespace dodagx
