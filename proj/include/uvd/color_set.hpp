#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace uvd {

/// Largest palette a ColorSet can hold. Color c is stored in bit c-1.
inline constexpr int kMaxColors = 64;

/// A subset of {1, ..., 64}: the label of an edge, or the code of a vertex.
class ColorSet {
 public:
  constexpr ColorSet() = default;

  constexpr ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) *this = with(c);
  }

  static constexpr ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  /// {first, ..., last}; empty when last < first.
  static constexpr ColorSet range(int first, int last) {
    ColorSet s;
    for (int c = first; c <= last; ++c) s = s.with(c);
    return s;
  }

  /// {1, ..., k}.
  static constexpr ColorSet full(int k) { return range(1, k); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  /// Largest color present, 0 for the empty set.
  constexpr int max_color() const { return std::bit_width(bits_); }

  constexpr bool contains(int c) const {
    return c >= 1 && c <= kMaxColors && ((bits_ >> (c - 1)) & 1u) != 0;
  }

  constexpr ColorSet with(int c) const {
    check_color(c);
    return from_bits(bits_ | (std::uint64_t{1} << (c - 1)));
  }

  constexpr ColorSet without(int c) const {
    check_color(c);
    return from_bits(bits_ & ~(std::uint64_t{1} << (c - 1)));
  }

  constexpr bool is_subset_of(ColorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ColorSet& operator|=(ColorSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ColorSet& operator&=(ColorSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return a |= b; }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return a &= b; }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) {
    return a.bits_ <=> b.bits_;
  }

  /// Colors in increasing order.
  std::vector<int> colors() const;

  /// "{1,2,4}", or "{}" for the empty set.
  std::string to_string() const;

 private:
  static constexpr void check_color(int c) {
    if (c < 1 || c > kMaxColors)
      throw std::out_of_range("color out of range 1..64: " + std::to_string(c));
  }

  std::uint64_t bits_ = 0;
};

}  // namespace uvd
