#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "biscount/error.hpp"

namespace biscount {

/// Which side of the bipartition a set lives on. `V` sets index X as
/// 0..n-1 and Y as n..2n-1.
enum class Part : std::uint8_t { X, Y, V };

inline const char* part_name(Part p) {
  switch (p) {
    case Part::X: return "X";
    case Part::Y: return "Y";
    case Part::V: return "V";
  }
  return "?";
}

/// A subset of {0, ..., universe-1} tagged with the part it belongs to.
///
/// Stored as a packed bitset. Binary operations require both operands to
/// carry the same part tag and universe and throw PartMismatch otherwise.
/// The canonical ordering is lexicographic on the sorted index list.
class VertexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  VertexSet(Part part, std::size_t universe)
      : part_(part), universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet of(Part part, std::size_t universe, std::initializer_list<std::size_t> members) {
    return of(part, universe, std::span<const std::size_t>(members.begin(), members.size()));
  }
  static VertexSet of(Part part, std::size_t universe, std::span<const std::size_t> members) {
    VertexSet s(part, universe);
    for (std::size_t i : members) s.insert(i);
    return s;
  }
  static VertexSet full(Part part, std::size_t universe) {
    VertexSet s(part, universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  Part part() const noexcept { return part_; }
  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void insert(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
  }
  void erase(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (word_type w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return universe_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  VertexSet& operator|=(const VertexSet& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c(part_, universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    c.trim();
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    check_compatible(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  std::size_t intersection_size(const VertexSet& o) const {
    check_compatible(o);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }
  /// |this \ o|
  std::size_t difference_size(const VertexSet& o) const {
    check_compatible(o);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & ~o.words_[k]));
    return c;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.part_ == b.part_ && a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic order of the sorted index lists.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b) {
    a.check_compatible(b);
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const word_type diff = a.words_[k] ^ b.words_[k];
      if (!diff) continue;
      const unsigned bit = static_cast<unsigned>(std::countr_zero(diff));
      const bool a_has = (a.words_[k] >> bit) & 1u;
      // The other set continues with a larger element, or ends here.
      const VertexSet& other = a_has ? b : a;
      bool other_continues = false;
      const word_type above = bit + 1 < kWordBits ? ~word_type{0} << (bit + 1) : 0;
      if (other.words_[k] & above) other_continues = true;
      for (std::size_t j = k + 1; j < a.words_.size() && !other_continues; ++j)
        if (other.words_[j]) other_continues = true;
      return a_has ? other_continues : !other_continues;
    }
    return false;
  }

  /// Stable 64-bit hash (independent of the standard library implementation).
  std::uint64_t stable_hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(part_) << 56) ^ universe_;
    for (word_type w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h = mix(h);
    }
    return h;
  }

  /// "{0,3,5}" style rendering; used in debug dumps and error messages.
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](std::size_t i) {
      if (!first_item) s += ',';
      s += std::to_string(i);
      first_item = false;
    });
    return s + "}";
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw InputError("vertex index " + std::to_string(i) + " out of range for universe of size " +
                       std::to_string(universe_));
  }
  void check_compatible(const VertexSet& o) const {
    if (part_ != o.part_ || universe_ != o.universe_)
      throw PartMismatch(std::string("set operation between ") + part_name(part_) + "[" +
                         std::to_string(universe_) + "] and " + part_name(o.part_) + "[" +
                         std::to_string(o.universe_) + "]");
  }
  void trim() noexcept {
    if (universe_ % kWordBits && !words_.empty())
      words_.back() &= (word_type{1} << (universe_ % kWordBits)) - 1;
  }

  Part part_ = Part::X;
  std::size_t universe_ = 0;
  std::vector<word_type> words_;
};

inline std::size_t symmetric_difference_size(const VertexSet& a, const VertexSet& b) {
  return a.difference_size(b) + b.difference_size(a);
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    return static_cast<std::size_t>(s.stable_hash());
  }
};

struct CanonicalLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return canonical_less(a, b); }
};

}  // namespace biscount
