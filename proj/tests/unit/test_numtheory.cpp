#include <doctest.h>

#include <limits>
#include <random>
#include <set>

#include "cycloseq/errors.hpp"
#include "cycloseq/numtheory.hpp"
#include "oracles.hpp"

using namespace cycloseq;

TEST_CASE("extended gcd examples") {
  const auto r = extended_gcd(6, 10);
  CHECK(r.gcd == 2);
  CHECK(r.x == 2);
  CHECK(r.y == -1);
  const auto z = extended_gcd(0, 7);
  CHECK(z.gcd == 7);
  CHECK(z.x == 0);
  CHECK(z.y == 1);
}

TEST_CASE("extended gcd satisfies Bezout on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> pick(-1'000'000'000, 1'000'000'000);
  for (int it = 0; it < 2000; ++it) {
    const Int a = pick(rng);
    const Int b = pick(rng);
    const auto r = extended_gcd(a, b);
    CHECK(r.gcd == oracle::plain_gcd(a, b));
    CHECK(static_cast<__int128>(a) * r.x + static_cast<__int128>(b) * r.y == r.gcd);
  }
}

TEST_CASE("crt worked examples") {
  const Congruence pair[] = {{2, 3}, {3, 5}};
  CHECK(crt_solve(pair) == Congruence{8, 15});
  const Congruence shared[] = {{1, 4}, {3, 6}};
  CHECK(crt_solve(shared) == Congruence{9, 12});
  const Congruence clash[] = {{1, 4}, {2, 6}};
  CHECK_THROWS_AS(crt_solve(clash), IncompatibleCongruences);
  CHECK_THROWS_AS(crt_solve(std::span<const Congruence>{}), InvalidParams);
}

TEST_CASE("crt agrees with exhaustive search") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> mod_pick(2, 40);
  for (int it = 0; it < 500; ++it) {
    std::vector<Congruence> sys;
    const int count = 1 + static_cast<int>(rng() % 3);
    Int l = 1;
    for (int k = 0; k < count; ++k) {
      const Int m = mod_pick(rng);
      sys.push_back({static_cast<Int>(rng() % static_cast<std::uint64_t>(m)), m});
      l = l / oracle::plain_gcd(l, m) * m;
    }
    Int found = -1;
    for (Int x = 0; x < l; ++x) {
      bool all = true;
      for (const auto& c : sys) all = all && x % c.modulus == c.residue;
      if (all) {
        found = x;
        break;
      }
    }
    if (found < 0) {
      CHECK_THROWS_AS(crt_solve(sys), IncompatibleCongruences);
    } else {
      CHECK(crt_solve(sys) == Congruence{found, l});
    }
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  constexpr Int big = std::numeric_limits<Int>::max() / 2 + 1;
  CHECK_THROWS_AS(checked_mul(big, 2), Overflow);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), Overflow);
  CHECK_THROWS_AS(checked_pow(10, 19), Overflow);
  CHECK(checked_pow(10, 18) == 1'000'000'000'000'000'000);
  CHECK(mul_mod(big, big, 1'000'000'007) ==
        static_cast<Int>(static_cast<__int128>(big % 1'000'000'007) * (big % 1'000'000'007) %
                         1'000'000'007));
}

TEST_CASE("modular helpers") {
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(pow_mod(3, 0, 7) == 1);
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(gcd(0, 0) == 0);
  CHECK(lcm(4, 6) == 12);
  CHECK(valuation(72, 2) == 3);
  CHECK(valuation(72, 3) == 2);
  CHECK(valuation(5, 3) == 0);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(36) == 12);
  CHECK(prime_factors(360) == std::vector<Int>{2, 3, 5});
}

TEST_CASE("primality matches trial division below 2000") {
  for (Int n = -3; n < 2000; ++n) CHECK(is_prime(n) == oracle::prime_by_sieve_check(n));
}

TEST_CASE("multiplicative order by brute force") {
  for (Int n = 2; n < 120; ++n) {
    for (Int a = 1; a < n; ++a) {
      if (oracle::plain_gcd(a, n) != 1) {
        CHECK_THROWS_AS(mult_order(a, n), NotCoprime);
        continue;
      }
      Int t = 1;
      Int x = a % n;
      while (x != 1 % n) {
        x = x * a % n;
        ++t;
      }
      CHECK(mult_order(a, n) == t);
    }
  }
}

TEST_CASE("odd primitive root of p^2 generates every p^i and 2 p^i") {
  for (Int p = 3; p < 100; p += 2) {
    if (!oracle::prime_by_sieve_check(p)) continue;
    const Int g = smallest_odd_primitive_root_mod_p2(p);
    CHECK(g % 2 == 1);
    // least odd: no smaller odd candidate generates mod p^2
    for (Int r = 3; r < g; r += 2) CHECK_FALSE(is_primitive_root(r, p * p));
    Int pk = p;
    while (2 * pk < 10'000'000) {
      // exhaustive orbit check on the small moduli, order check on the rest
      if (pk < 5000) {
        std::set<Int> orbit;
        Int x = 1;
        do {
          orbit.insert(x);
          x = x * g % (2 * pk);
        } while (x != 1);
        CHECK(static_cast<Int>(orbit.size()) == euler_phi(2 * pk));
      }
      CHECK(mult_order(g, pk) == euler_phi(pk));
      CHECK(mult_order(g, 2 * pk) == euler_phi(2 * pk));
      pk *= p;
    }
  }
}

TEST_CASE("system constants for the worked examples") {
  const auto a = build_system_constants(3, 5, 1, 1);
  CHECK(a.g == 23);
  CHECK(a.y == 11);
  CHECK(a.half_period() == 15);
  CHECK(a.period() == 30);
  CHECK(a.e(1, 1) == 2);
  CHECK(a.d(1, 1) == 4);
  const auto b = build_system_constants(3, 7, 1, 1);
  CHECK(b.g == 17);
  CHECK(b.y == 29);
}

TEST_CASE("system constants satisfy their defining congruences") {
  const Int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
  for (Int p : primes) {
    for (Int q : primes) {
      if (p == q) continue;
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          const auto sc = build_system_constants(p, q, m, n, 100'000'000);
          const Int pm = sc.p_pow(m);
          const Int qn = sc.q_pow(n);
          CHECK(sc.g % (2 * pm) == sc.g1 % (2 * pm));
          CHECK(sc.g % (2 * qn) == sc.g2 % (2 * qn));
          CHECK(sc.y % (2 * pm) == sc.g % (2 * pm));
          CHECK(sc.y % (2 * qn) == 1);
          for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
              const Int pi = sc.p_pow(i);
              const Int qj = sc.q_pow(j);
              CHECK(sc.d(i, j) == mult_order(sc.g, pi * qj));
              CHECK(sc.e(i, j) * sc.d(i, j) == euler_phi(pi * qj));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("system constants reject bad parameters") {
  CHECK_THROWS_AS(build_system_constants(3, 3, 1, 1), InvalidParams);
  CHECK_THROWS_AS(build_system_constants(2, 5, 1, 1), InvalidParams);
  CHECK_THROWS_AS(build_system_constants(9, 5, 1, 1), InvalidParams);
  CHECK_THROWS_AS(build_system_constants(3, 5, 0, 1), InvalidParams);
  CHECK_THROWS_AS(build_system_constants(3, 5, 1, -2), InvalidParams);
  CHECK_THROWS_AS(build_system_constants(3, 5, 3, 3, 1000), CapExceeded);
  CHECK_NOTHROW(build_system_constants(3, 5, 3, 3, 6750));
}
