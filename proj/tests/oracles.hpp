#pragma once
// Brute-force reference computations shared by the unit and acceptance
// tests. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/extfield.hpp"
#include "cycloseq/gf4.hpp"

namespace oracle {

using cycloseq::Int;

inline Int plain_gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool prime_by_sieve_check(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// residue[x] is true when x is a nonzero square mod r.
inline std::vector<bool> squares_mod(Int r) {
  std::vector<bool> out(static_cast<std::size_t>(r), false);
  for (Int x = 1; x < r; ++x) out[static_cast<std::size_t>(x * x % r)] = true;
  return out;
}

inline bool is_square_mod(Int x, Int r) {
  return squares_mod(r)[static_cast<std::size_t>(((x % r) + r) % r)];
}

// D_h for any shape: the units of the modulus whose quadratic character mod
// the deciding prime is (-1)^h. y = g mod p and y = 1 mod q make q decide
// for the p^i q^j shapes.
inline std::vector<Int> class_by_characters(const cycloseq::SystemConstants& sc,
                                            const cycloseq::ClassId& id) {
  using cycloseq::Shape;
  Int modulus = 1;
  Int decider = sc.q;
  switch (id.shape) {
    case Shape::PQ:
    case Shape::TwoPQ:
      for (int k = 0; k < id.i; ++k) modulus *= sc.p;
      for (int k = 0; k < id.j; ++k) modulus *= sc.q;
      break;
    case Shape::P:
    case Shape::TwoP:
      for (int k = 0; k < id.i; ++k) modulus *= sc.p;
      decider = sc.p;
      break;
    case Shape::Q:
    case Shape::TwoQ:
      for (int k = 0; k < id.j; ++k) modulus *= sc.q;
      break;
  }
  if (id.shape == Shape::TwoPQ || id.shape == Shape::TwoP || id.shape == Shape::TwoQ) modulus *= 2;
  const auto sq = squares_mod(decider);
  std::vector<Int> out;
  for (Int x = 1; x < modulus; ++x) {
    if (plain_gcd(x, modulus) != 1) continue;
    const bool residue = sq[static_cast<std::size_t>(x % decider)];
    if (residue == (id.h == 0)) out.push_back(x);
  }
  return out;
}

// Bucket of index t in Z_{2 p^m q^n} from quadratic characters alone.
inline cycloseq::Bucket bucket_by_characters(const cycloseq::SystemConstants& sc, Int t) {
  using cycloseq::Bucket;
  const Int half = sc.half_period();
  if (t == 0) return Bucket::Zero;
  if (t == half) return Bucket::Middle;
  const bool odd = t % 2 != 0;
  Int u = odd ? t : t / 2;
  int a = 0;
  int b = 0;
  while (a < sc.m && u % sc.p == 0) {
    u /= sc.p;
    ++a;
  }
  while (b < sc.n && u % sc.q == 0) {
    u /= sc.q;
    ++b;
  }
  const Int decider = b < sc.n ? sc.q : sc.p;
  const bool residue = is_square_mod(u, decider);
  if (odd) return residue ? Bucket::A : Bucket::B;
  return residue ? Bucket::C : Bucket::D;
}

// GF(4) as GF(2)[x]/(x^2 + x + 1) on two-bit integers.
inline unsigned gf4_mul_bits(unsigned a, unsigned b) {
  unsigned prod = 0;
  for (int k = 0; k < 2; ++k) {
    if ((b >> k) & 1U) prod ^= a << k;
  }
  if (prod & 4U) prod ^= 0b111U;
  return prod & 3U;
}

// Linear complexity of a periodic sequence as the rank of its circulant.
inline Int lc_by_rank(const std::vector<cycloseq::GF4>& s) {
  using cycloseq::GF4;
  const std::size_t n = s.size();
  std::vector<std::vector<GF4>> rows(n, std::vector<GF4>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = s[(r + c) % n];
  }
  Int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t pick = pivot_row;
    while (pick < n && rows[pick][col].is_zero()) ++pick;
    if (pick == n) continue;
    std::swap(rows[pick], rows[pivot_row]);
    const GF4 inv = rows[pivot_row][col].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const GF4 f = rows[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) rows[r][c] += f * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

inline std::vector<cycloseq::GF4> random_symbols(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<unsigned> pick(0, 3);
  std::vector<cycloseq::GF4> out(len);
  for (auto& x : out) x = cycloseq::GF4(pick(rng));
  return out;
}

// S(x) at x by Horner's rule, directly from the symbols.
inline cycloseq::ExtElement evaluate_symbols(const cycloseq::ExtField& field,
                                             const std::vector<cycloseq::GF4>& s,
                                             cycloseq::ExtElement x) {
  cycloseq::ExtElement acc = field.zero();
  for (auto it = s.rbegin(); it != s.rend(); ++it) acc = field.mul(acc, x) + field.embed(*it);
  return acc;
}

}  // namespace oracle
