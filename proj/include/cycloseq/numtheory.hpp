#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cycloseq {

using Int = std::int64_t;

/// Default upper bound on the period 2 p^m q^n accepted by the library.
inline constexpr Int kDefaultPeriodCap = 10'000'000;

struct Congruence {
  Int residue = 0;
  Int modulus = 2;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

struct Bezout {
  Int gcd = 0;
  Int x = 0;
  Int y = 0;
};

// Overflow-checked primitives. All throw Overflow instead of wrapping.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int checked_pow(Int base, int exp);

Int mod_floor(Int a, Int m);
Int mul_mod(Int a, Int b, Int m);
Int pow_mod(Int base, Int exp, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Returns (g, x, y) with a*x + b*y = g and g = gcd(a, b) >= 0.
Bezout extended_gcd(Int a, Int b);

/// Solves a system of congruences. The result is reduced modulo the lcm of
/// the moduli. Throws IncompatibleCongruences when some pair disagrees
/// modulo the gcd of their moduli.
Congruence crt_solve(std::span<const Congruence> congruences);

bool is_prime(Int n);
/// Distinct prime factors in increasing order, by trial division.
std::vector<Int> prime_factors(Int n);
Int euler_phi(Int n);

/// Least t >= 1 with a^t = 1 (mod n). Throws NotCoprime.
Int mult_order(Int a, Int n);
bool is_primitive_root(Int a, Int n);

/// Least odd r >= 3 that generates the units mod p^2; it then generates the
/// units mod p^i and 2 p^i for every i.
Int smallest_odd_primitive_root_mod_p2(Int p);

/// p-adic valuation of a nonzero integer.
int valuation(Int value, Int prime);

/// Everything derived from (p, q, m, n): the common primitive root g, the
/// auxiliary generator y and the e/d tables for each (i, j).
class SystemConstants {
 public:
  Int p = 0;
  Int q = 0;
  int m = 0;
  int n = 0;
  Int g1 = 0;
  Int g2 = 0;
  Int g = 0;
  Int y = 0;

  Int p_pow(int i) const { return p_powers_.at(static_cast<std::size_t>(i)); }
  Int q_pow(int j) const { return q_powers_.at(static_cast<std::size_t>(j)); }

  /// p^m q^n
  Int half_period() const { return p_pow(m) * q_pow(n); }
  /// 2 p^m q^n
  Int period() const { return 2 * half_period(); }

  /// e_{i,j} = gcd(p^{i-1}(p-1), q^{j-1}(q-1)), 1 <= i <= m, 1 <= j <= n.
  Int e(int i, int j) const { return e_.at(index(i, j)); }
  /// d_{i,j} = p^{i-1}(p-1) q^{j-1}(q-1) / e_{i,j}; the order of g mod p^i q^j.
  Int d(int i, int j) const { return d_.at(index(i, j)); }

 private:
  friend SystemConstants build_system_constants(Int, Int, int, int, Int);

  std::size_t index(int i, int j) const;

  std::vector<Int> p_powers_;
  std::vector<Int> q_powers_;
  std::vector<Int> e_;
  std::vector<Int> d_;
};

/// Validates (p, q, m, n) and derives the constants. Throws InvalidParams for
/// equal, even or composite primes or non-positive exponents, and CapExceeded
/// when 2 p^m q^n is larger than `period_cap`.
SystemConstants build_system_constants(Int p, Int q, int m, int n,
                                       Int period_cap = kDefaultPeriodCap);

}  // namespace cycloseq
