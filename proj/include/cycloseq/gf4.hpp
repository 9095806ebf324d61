#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cycloseq {

/// Element of the 4-element field on the basis {1, alpha} with
/// alpha^2 = alpha + 1. The encoding is two bits (c1, c0) for c1*alpha + c0,
/// so 0, 1, 2 and 3 stand for 0, 1, alpha and alpha + 1 = alpha^2.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 3U)) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 alpha() { return GF4(2); }
  static constexpr GF4 alpha_sq() { return GF4(3); }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.bits_ ^ b.bits_); }
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
  friend constexpr GF4 operator*(GF4 a, GF4 b) { return GF4(kMulTable[a.bits_][b.bits_]); }
  GF4& operator+=(GF4 o) { return *this = *this + o; }
  GF4& operator*=(GF4 o) { return *this = *this * o; }
  friend constexpr bool operator==(GF4, GF4) = default;

  /// Multiplicative inverse; the inverse of zero is reported as zero.
  constexpr GF4 inverse() const { return GF4(kInvTable[bits_]); }
  constexpr GF4 square() const { return *this * *this; }

  /// File/report digit: '0'..'3'.
  char digit() const { return static_cast<char>('0' + bits_); }
  /// Throws MalformedSequence for anything outside '0'..'3'.
  static GF4 from_digit(char c);

  std::string name() const;

 private:
  // Rows and columns indexed by encoding. alpha*alpha = alpha+1,
  // alpha*(alpha+1) = 1, (alpha+1)^2 = alpha.
  static constexpr std::array<std::array<std::uint8_t, 4>, 4> kMulTable{{
      {0, 0, 0, 0},
      {0, 1, 2, 3},
      {0, 2, 3, 1},
      {0, 3, 1, 2},
  }};
  static constexpr std::array<std::uint8_t, 4> kInvTable{0, 1, 3, 2};

  std::uint8_t bits_ = 0;
};

inline constexpr std::array<GF4, 4> kAllGF4{GF4(0), GF4(1), GF4(2), GF4(3)};

std::string to_digits(const std::vector<GF4>& symbols);
std::vector<GF4> from_digits(const std::string& digits);

}  // namespace cycloseq
