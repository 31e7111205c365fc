#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace muspectra {

/// Fixed-width set of small indices (< 64) backed by one machine word.
/// The tag keeps vertex sets, edge sets and color sets from mixing.
template <class Tag>
class BitSet64 {
 public:
  constexpr BitSet64() = default;
  constexpr explicit BitSet64(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet64 first_n(int n) {
    return BitSet64(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  // Smallest / largest member; undefined on an empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr bool subset_of(BitSet64 other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr BitSet64 operator|(BitSet64 a, BitSet64 b) {
    return BitSet64(a.bits_ | b.bits_);
  }
  friend constexpr BitSet64 operator&(BitSet64 a, BitSet64 b) {
    return BitSet64(a.bits_ & b.bits_);
  }
  friend constexpr BitSet64 operator-(BitSet64 a, BitSet64 b) {
    return BitSet64(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(BitSet64, BitSet64) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct EdgeTag {};

using VertexSet = BitSet64<VertexTag>;
using EdgeSet = BitSet64<EdgeTag>;

}  // namespace muspectra
