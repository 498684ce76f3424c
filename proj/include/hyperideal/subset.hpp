#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperideal {

// Elements of a carrier are canonically named 0..n-1.  A Subset is a bitmask
// over them; the mask alone carries no carrier size, callers supply n where
// it matters.  32 elements is far beyond anything the enumeration universes
// can reach.
inline constexpr int kMaxElements = 32;

class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset single(int x) { return Subset(std::uint64_t{1} << x); }
  static constexpr Subset full(int n) {
    return Subset(n <= 0 ? 0 : (std::uint64_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<int> xs) {
    Subset s;
    for (int x : xs) {
      if (x < 0 || x >= 64) throw std::out_of_range("subset element out of range");
      s.bits_ |= std::uint64_t{1} << x;
    }
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const {
    return x >= 0 && x < 64 && (bits_ >> x) & 1;
  }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  constexpr Subset with(int x) const { return Subset(bits_ | (std::uint64_t{1} << x)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  // set difference
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;

  // Iterates the member elements in ascending order.
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr const_iterator() = default;
    explicit constexpr const_iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(const_iterator, const_iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

  std::vector<int> elements() const { return {begin(), end()}; }

  // "{0,2}" rendering for diagnostics
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int x : *this) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

 private:
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace hyperideal
