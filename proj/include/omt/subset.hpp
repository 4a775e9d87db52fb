#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace omt {

/// Set of element positions of an ordered ground set: bit i stands for the
/// i-th smallest element. Integer order of the bits equals "binary counting
/// on the ordered ground set", which is the enumeration order of every sweep.
class Subset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset single(std::size_t i) { return Subset(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool contains(Subset s) const { return (bits_ & s.bits_) == s.bits_; }
  constexpr bool intersects(Subset s) const { return (bits_ & s.bits_) != 0; }

  /// Position of the smallest element; the set must be nonempty.
  constexpr std::size_t min() const {
    assert(bits_ != 0);
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }
  constexpr Subset lowest() const { return Subset(bits_ & (~bits_ + 1)); }

  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }

  /// Removes position i and shifts higher positions down by one.
  constexpr Subset erase_position(std::size_t i) const {
    const std::uint64_t low = bits_ & ((std::uint64_t{1} << i) - 1);
    const std::uint64_t high = i + 1 >= 64 ? 0 : (bits_ >> (i + 1)) << i;
    return Subset(low | high);
  }

  /// Inverse of erase_position: opens a gap at position i, filled with `value`.
  constexpr Subset insert_position(std::size_t i, bool value) const {
    const std::uint64_t low = bits_ & ((std::uint64_t{1} << i) - 1);
    const std::uint64_t high = (bits_ >> i) << (i + 1);
    return Subset(low | high | (value ? std::uint64_t{1} << i : 0));
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace omt
