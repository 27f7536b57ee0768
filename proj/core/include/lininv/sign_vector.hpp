#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lininv {

/// Longest sign vector representable in a single mask.
inline constexpr std::size_t kMaxSignLength = 62;

/// An element of {+1,-1}^k.
///
/// Bit k set means coordinate k is -1, so mask 0 is the all-plus vector.
/// Vectors living on a pair-deleted vector carry the 1-based indices of the
/// original coordinates they sit on.
class SignVector {
 public:
  SignVector(std::size_t length, std::uint64_t bits, std::vector<std::size_t> coordinate_map = {});

  /// Entries must be +1 or -1.
  static SignVector from_signs(std::span<const int> signs);

  std::size_t length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  const std::vector<std::size_t>& coordinate_map() const { return coordinate_map_; }

  /// Coordinate k (0-based) as +1 or -1.
  int operator[](std::size_t k) const { return ((bits_ >> k) & 1U) != 0 ? -1 : 1; }

  int product() const { return (std::popcount(bits_) & 1) != 0 ? -1 : 1; }

  SignVector negated() const;
  std::vector<int> signs() const;

  /// "(+,-,+)"
  std::string to_string() const;

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.length_ == b.length_ && a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::size_t length_;
  std::uint64_t bits_;
  std::vector<std::size_t> coordinate_map_;
};

inline int mask_product(std::uint64_t bits) { return (std::popcount(bits) & 1) != 0 ? -1 : 1; }

inline std::uint64_t full_mask(std::size_t length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

}  // namespace lininv
