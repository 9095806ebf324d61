#include "cycloseq/numtheory.hpp"

#include <string>

#include "cycloseq/errors.hpp"

namespace cycloseq {

namespace {
__extension__ using Wide = __int128;
}  // namespace

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Overflow("integer overflow in multiplication");
  }
  return out;
}

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Overflow("integer overflow in addition");
  }
  return out;
}

Int checked_pow(Int base, int exp) {
  if (exp < 0) throw InvalidParams("negative exponent");
  Int out = 1;
  for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
  const Wide prod = static_cast<Wide>(mod_floor(a, m)) * mod_floor(b, m);
  return static_cast<Int>(prod % m);
}

Int pow_mod(Int base, Int exp, Int m) {
  if (m == 1) return 0;
  Int result = 1;
  base = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Congruence crt_solve(std::span<const Congruence> congruences) {
  if (congruences.empty()) throw InvalidParams("crt_solve needs at least one congruence");
  Congruence acc{0, 1};
  for (const Congruence& c : congruences) {
    if (c.modulus < 1) throw InvalidParams("congruence modulus must be positive");
    const Int residue = mod_floor(c.residue, c.modulus);
    const Bezout bz = extended_gcd(acc.modulus, c.modulus);
    const Int diff = residue - acc.residue;
    if (diff % bz.gcd != 0) {
      throw IncompatibleCongruences(
          "residues " + std::to_string(acc.residue) + " and " + std::to_string(residue) +
          " disagree modulo " + std::to_string(bz.gcd));
    }
    const Int step = c.modulus / bz.gcd;
    const Int new_modulus = checked_mul(acc.modulus, step);
    // acc.residue + acc.modulus * k, with k = diff/g * x (mod step)
    const Int k = mul_mod(diff / bz.gcd, bz.x, step);
    acc.residue = mod_floor(acc.residue + static_cast<Int>(static_cast<Wide>(acc.modulus) * k % new_modulus),
                            new_modulus);
    acc.modulus = new_modulus;
  }
  return acc;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int euler_phi(Int n) {
  if (n < 1) throw InvalidParams("euler_phi needs n >= 1");
  Int result = n;
  for (Int f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

Int mult_order(Int a, Int n) {
  if (n < 2) throw InvalidParams("mult_order needs n >= 2");
  if (gcd(a, n) != 1) {
    throw NotCoprime(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  Int order = euler_phi(n);
  for (Int f : prime_factors(order)) {
    while (order % f == 0 && pow_mod(a, order / f, n) == 1) order /= f;
  }
  return order;
}

bool is_primitive_root(Int a, Int n) {
  return gcd(a, n) == 1 && mult_order(a, n) == euler_phi(n);
}

Int smallest_odd_primitive_root_mod_p2(Int p) {
  if (p < 3 || !is_prime(p)) throw InvalidParams("expected an odd prime, got " + std::to_string(p));
  const Int p2 = checked_mul(p, p);
  for (Int r = 3;; r += 2) {
    if (r % p != 0 && is_primitive_root(r, p2)) return r;
  }
}

int valuation(Int value, Int prime) {
  if (value == 0) throw InvalidParams("valuation of zero");
  int v = 0;
  while (value % prime == 0) {
    value /= prime;
    ++v;
  }
  return v;
}

std::size_t SystemConstants::index(int i, int j) const {
  if (i < 1 || i > m || j < 1 || j > n) {
    throw InvalidParams("class index (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") out of range");
  }
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(j - 1);
}

SystemConstants build_system_constants(Int p, Int q, int m, int n, Int period_cap) {
  if (p == q) throw InvalidParams("p and q must be distinct");
  for (Int prime : {p, q}) {
    if (prime < 3 || prime % 2 == 0 || !is_prime(prime)) {
      throw InvalidParams(std::to_string(prime) + " is not an odd prime");
    }
  }
  if (m < 1 || n < 1) throw InvalidParams("exponents m and n must be >= 1");

  SystemConstants sc;
  sc.p = p;
  sc.q = q;
  sc.m = m;
  sc.n = n;
  try {
    Int period = 2;
    for (int i = 0; i <= m; ++i) sc.p_powers_.push_back(checked_pow(p, i));
    for (int j = 0; j <= n; ++j) sc.q_powers_.push_back(checked_pow(q, j));
    period = checked_mul(period, checked_mul(sc.p_pow(m), sc.q_pow(n)));
    if (period > period_cap) {
      throw CapExceeded("period " + std::to_string(period) + " exceeds cap " +
                        std::to_string(period_cap));
    }
  } catch (const Overflow&) {
    throw CapExceeded("period 2*p^m*q^n overflows 64 bits");
  }

  sc.g1 = smallest_odd_primitive_root_mod_p2(p);
  sc.g2 = smallest_odd_primitive_root_mod_p2(q);
  const Int mod_p = 2 * sc.p_pow(m);
  const Int mod_q = 2 * sc.q_pow(n);
  const Congruence for_g[] = {{sc.g1 % mod_p, mod_p}, {sc.g2 % mod_q, mod_q}};
  sc.g = crt_solve(for_g).residue;
  const Congruence for_y[] = {{sc.g % mod_p, mod_p}, {1, mod_q}};
  sc.y = crt_solve(for_y).residue;

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Int phi_p = sc.p_pow(i - 1) * (p - 1);
      const Int phi_q = sc.q_pow(j - 1) * (q - 1);
      const Int e = gcd(phi_p, phi_q);
      sc.e_.push_back(e);
      sc.d_.push_back(phi_p / e * phi_q);
    }
  }
  return sc;
}

}  // namespace cycloseq
