#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace modelq {

/// Fixed-universe bitset over fact ids. States, precondition sets and
/// effect sets are all FactSets over the ground task's fact table.
class FactSet {
 public:
  FactSet() = default;
  explicit FactSet(int num_bits)
      : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

  int universe_size() const { return num_bits_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int n = 0;
    for (uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }

  bool subset_of(const FactSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const FactSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  FactSet& operator|=(const FactSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  FactSet& operator&=(const FactSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Removes every fact in `other` from this set.
  FactSet& operator-=(const FactSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend FactSet operator|(FactSet a, const FactSet& b) { return a |= b; }
  friend FactSet operator&(FactSet a, const FactSet& b) { return a &= b; }
  friend FactSet operator-(FactSet a, const FactSet& b) { return a -= b; }

  bool operator==(const FactSet& other) const {
    return words_ == other.words_;
  }
  bool operator!=(const FactSet& other) const { return !(*this == other); }

  /// Calls f(id) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int bit = __builtin_ctzll(w);
        f(static_cast<int>(wi * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ULL;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  /// Grows the universe, preserving existing bits.
  void grow(int new_num_bits) {
    if (new_num_bits <= num_bits_) return;
    num_bits_ = new_num_bits;
    words_.resize((new_num_bits + 63) / 64, 0);
  }

 private:
  int num_bits_ = 0;
  std::vector<uint64_t> words_;
};

struct FactSetHash {
  size_t operator()(const FactSet& s) const { return s.hash(); }
};

}  // namespace modelq
