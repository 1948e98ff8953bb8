#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdslab {

using Index = std::uint32_t;

/// Dense bit-per-element subset of [0, universe).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  template <class Range>
  static IndexSet from(std::size_t universe, const Range& elements) {
    IndexSet s(universe);
    for (auto x : elements) s.insert(static_cast<Index>(x));
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Index x) const { return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u); }

  /// Returns true if x was not present.
  bool insert(Index x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool erase(Index x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Index>(wi * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    out.reserve(count_);
    for_each([&](Index x) { out.push_back(x); });
    return out;
  }

  /// Least element, or universe() if empty.
  Index first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<Index>(wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi])));
    return static_cast<Index>(universe_);
  }

  bool is_subset_of(const IndexSet& other) const {
    if (other.universe_ != universe_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const IndexSet& other) const {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  IndexSet intersection(const IndexSet& other) const {
    IndexSet out(universe_);
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
      out.words_[i] = words_[i] & other.words_[i];
      out.count_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
    }
    return out;
  }

  IndexSet united(const IndexSet& other) const {
    IndexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i] = words_[i] | (i < other.words_.size() ? other.words_[i] : 0);
      out.count_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
    }
    return out;
  }

  /// |this ∩ other| by word-parallel popcount.
  std::size_t intersection_count(const IndexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pdslab
