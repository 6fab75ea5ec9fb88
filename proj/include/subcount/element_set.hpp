#ifndef SUBCOUNT_ELEMENT_SET_HPP
#define SUBCOUNT_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace subcount {

using Element = std::uint32_t;

/// Fixed-universe bitset over element indices 0..universe-1.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept
  { return (words_[e >> 6] >> (e & 63U)) & 1U; }

  /// Returns true if e was newly inserted.
  bool insert(Element e) noexcept
  {
    auto& w = words_[e >> 6];
    std::uint64_t bit = std::uint64_t{1} << (e & 63U);
    bool fresh = (w & bit) == 0;
    w |= bit;
    count_ += fresh ? 1 : 0;
    return fresh;
  }

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool is_subset_of(const ElementSet& other) const noexcept
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  ElementSet intersection(const ElementSet& other) const
  {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i] = words_[i] & other.words_[i];
      out.count_ += static_cast<std::size_t>(std::popcount(out.words_[i]));
    }
    return out;
  }

  std::vector<Element> members() const
  {
    std::vector<Element> out;
    out.reserve(count_);
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template<typename F>
  void for_each(F&& f) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        auto bit = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<Element>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  /// Lexicographic comparison of the sorted member lists, assuming equal size.
  bool lex_less_same_size(const ElementSet& other) const noexcept
  {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const noexcept
  {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept
  { return a.count_ == b.count_ && a.words_ == b.words_; }

private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

} // namespace subcount

#endif // SUBCOUNT_ELEMENT_SET_HPP
