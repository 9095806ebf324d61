#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycloseq/gf4.hpp"

namespace cycloseq {

/// Dense univariate polynomial over GF4, coefficient k multiplies x^k.
/// Always kept without trailing zero coefficients.
class Gf4Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr std::int64_t kZeroDegree = -1;

  Gf4Poly() = default;
  explicit Gf4Poly(std::vector<GF4> coeffs);
  explicit Gf4Poly(std::span<const GF4> coeffs);

  static Gf4Poly constant(GF4 c);
  static Gf4Poly monomial(GF4 c, std::size_t power);
  /// Coefficients given low to high as digits '0'..'3'.
  static Gf4Poly from_digits(const std::string& digits);

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  GF4 leading() const { return coeffs_.empty() ? GF4::zero() : coeffs_.back(); }
  GF4 operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GF4::zero(); }
  const std::vector<GF4>& coeffs() const { return coeffs_; }
  std::size_t nonzero_terms() const;

  Gf4Poly monic() const;
  Gf4Poly derivative() const;
  /// f(x)^2, computed as f(x^2) with squared coefficients.
  Gf4Poly square() const;
  GF4 evaluate(GF4 x) const;

  /// Low-to-high digit string; "0" for the zero polynomial.
  std::string to_digits() const;

  friend Gf4Poly operator+(const Gf4Poly& a, const Gf4Poly& b);
  friend Gf4Poly operator-(const Gf4Poly& a, const Gf4Poly& b) { return a + b; }
  friend Gf4Poly operator*(const Gf4Poly& a, const Gf4Poly& b);
  friend Gf4Poly operator*(GF4 c, const Gf4Poly& a);
  friend bool operator==(const Gf4Poly&, const Gf4Poly&) = default;

 private:
  void trim();

  std::vector<GF4> coeffs_;
};

/// (quotient, remainder) with a = q*b + r and deg r < deg b.
/// Throws DivisionByZeroPolynomial when b is zero.
std::pair<Gf4Poly, Gf4Poly> divmod(const Gf4Poly& a, const Gf4Poly& b);
Gf4Poly poly_mod(const Gf4Poly& a, const Gf4Poly& b);

/// Monic greatest common divisor; gcd(0, 0) is 0.
Gf4Poly poly_gcd(Gf4Poly a, Gf4Poly b);

/// x^N - 1, which equals x^N + 1 in characteristic 2.
Gf4Poly x_pow_n_minus_1(std::int64_t n);

/// x^deg(f) * f(1/x).
Gf4Poly reciprocal(const Gf4Poly& f);

}  // namespace cycloseq
