#include <doctest.h>

#include <random>

#include "cycloseq/analysis.hpp"
#include "cycloseq/errors.hpp"
#include "cycloseq/extfield.hpp"
#include "oracles.hpp"

using namespace cycloseq;

namespace {

// Every monic polynomial of the given degree, low-order digit first.
std::vector<Gf4Poly> monic_of_degree(int d) {
  std::vector<Gf4Poly> out;
  const Int count = Int{1} << (2 * d);
  for (Int code = 0; code < count; ++code) {
    std::vector<GF4> c(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] = GF4(static_cast<unsigned>(code >> (2 * k)));
    c.back() = GF4::one();
    out.emplace_back(std::move(c));
  }
  return out;
}

bool irreducible_by_trial_division(const Gf4Poly& f) {
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_of_degree(d)) {
      if (poly_mod(f, g).is_zero()) return false;
    }
  }
  return true;
}

Int brute_order_of_4(Int n) {
  Int x = 4 % n;
  Int t = 1;
  while (x != 1) {
    x = x * 4 % n;
    ++t;
  }
  return t;
}

}  // namespace

TEST_CASE("irreducibility agrees with trial division") {
  const std::size_t expected_counts[] = {0, 4, 6, 20, 60};
  for (int d = 1; d <= 4; ++d) {
    std::size_t count = 0;
    for (const auto& f : monic_of_degree(d)) {
      const bool irr = irreducible_by_trial_division(f);
      CHECK(is_irreducible(f) == irr);
      count += irr ? 1 : 0;
    }
    CHECK(count == expected_counts[d]);
  }
}

TEST_CASE("least irreducible polynomial") {
  CHECK(least_irreducible(2).to_digits() == "211");
  for (int d = 2; d <= 4; ++d) {
    const auto f = least_irreducible(d);
    CHECK(f.degree() == d);
    CHECK(irreducible_by_trial_division(f));
  }
  for (int d = 5; d <= kMaxExtensionDegree; ++d) CHECK(is_irreducible(least_irreducible(d)));
}

TEST_CASE("order of 4") {
  for (Int n = 3; n < 2000; n += 2) CHECK(ord_4_mod(n) == brute_order_of_4(n));
}

TEST_CASE("extension field arithmetic") {
  std::mt19937_64 rng(8);
  for (int d = 1; d <= 8; ++d) {
    ExtField plain(least_irreducible(d));
    ExtField logged(least_irreducible(d));
    const auto ctx = build_extension(static_cast<Int>((Int{1} << (2 * d)) - 1));
    logged.build_log_tables(ctx.generator);
    CHECK(plain.order(ctx.generator) == plain.size() - 1);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(plain.size() - 1));
    for (int it = 0; it < 200; ++it) {
      const ExtElement a{pick(rng)};
      const ExtElement b{pick(rng)};
      const ExtElement c{pick(rng)};
      CHECK(plain.mul(a, b) == logged.mul(a, b));
      CHECK(plain.mul(a, b + c) == plain.mul(a, b) + plain.mul(a, c));
      CHECK(plain.mul(plain.mul(a, b), c) == plain.mul(a, plain.mul(b, c)));
      CHECK(plain.frobenius(a + b) == plain.frobenius(a) + plain.frobenius(b));
      CHECK(plain.frobenius(a) == plain.pow(a, 4));
      ExtElement x = a;
      for (int k = 0; k < d; ++k) x = plain.frobenius(x);
      CHECK(x == a);
      CHECK(plain.from_poly(plain.to_poly(a)) == a);
      if (!a.is_zero()) CHECK(plain.pow(a, plain.size() - 1) == plain.one());
    }
    for (GF4 s : kAllGF4) CHECK(plain.to_gf4(plain.embed(s)) == s);
  }
}

TEST_CASE("roots of unity for the worked parameters") {
  struct P {
    Int p, q;
    int m, n, d;
  };
  for (const P& pr : {P{3, 5, 1, 1, 2}, P{3, 7, 1, 1, 3}, P{3, 5, 2, 1, 6}, P{5, 7, 1, 1, 6}}) {
    const auto sc = build_system_constants(pr.p, pr.q, pr.m, pr.n);
    const auto ctx = build_extension(sc);
    CHECK(ctx.field.degree() == pr.d);
    CHECK(ctx.field.order(ctx.beta) == sc.half_period());
    CHECK(ctx.field.order(*ctx.zeta_p) == pr.p);
    CHECK(ctx.field.order(*ctx.zeta_q) == pr.q);
    CHECK(ctx.field.order(*ctx.zeta_pq) == pr.p * pr.q);
    CHECK(ctx.beta_powers.size() == static_cast<std::size_t>(sc.half_period()));
    CHECK(ctx.beta_pow(sc.half_period() + 1) == ctx.beta);
  }
  CHECK_THROWS_AS(build_extension(3 * 49), CapExceeded);
}

TEST_CASE("character sums follow their closed forms") {
  struct P {
    Int p, q;
    int m, n;
  };
  for (const P& pr : {P{3, 5, 1, 1}, P{3, 7, 1, 1}, P{3, 5, 2, 1}, P{5, 7, 1, 1}, P{3, 11, 1, 1}, P{5, 3, 1, 2}}) {
    const CyclotomicSystem sys(build_system_constants(pr.p, pr.q, pr.m, pr.n));
    const auto ctx = build_extension(sys.constants());
    const auto rep = verify_lemma_6_7(sys, ctx);
    INFO("p=", pr.p, " q=", pr.q, " m=", pr.m, " n=", pr.n);
    CHECK(rep.ok());
    CHECK(rep.cells_checked > 0);
  }
}

TEST_CASE("evaluations at roots of unity match direct evaluation and the refined table") {
  struct P {
    Int p, q;
    int m, n;
  };
  for (const P& pr : {P{3, 5, 1, 1}, P{3, 7, 1, 1}, P{3, 5, 2, 1}, P{5, 7, 1, 1}, P{3, 11, 1, 1}}) {
    const CyclotomicSystem sys(build_system_constants(pr.p, pr.q, pr.m, pr.n));
    const auto ctx = build_extension(sys.constants());
    for (const Mapping& mp : all_mappings()) {
      const auto seq = build_sequence(sys, mp, true);
      const auto rep = verify_case_table(sys, ctx, mp);
      INFO("p=", pr.p, " q=", pr.q, " mapping ", mp.to_string());
      CHECK(rep.refined_table_holds());
      CHECK(rep.outside_base_field.empty());
      CHECK(rep.value_at_one == mp.e);
      for (Int k = 0; k < sys.half_period(); ++k) {
        const auto direct = oracle::evaluate_symbols(ctx.field, seq.symbols, ctx.beta_pow(k));
        CHECK(ctx.field.to_gf4(direct) == rep.values[static_cast<std::size_t>(k)]);
      }
      const bool full = analyze_symbols(seq.symbols).lc_gcd == sys.period();
      CHECK(rep.nonzero_everywhere == full);
    }
  }
}

TEST_CASE("case constants when both primes are +-3 mod 8") {
  for (auto [p, q] : {std::pair<Int, Int>{3, 5}, {3, 11}, {5, 11}}) {
    const CyclotomicSystem sys(build_system_constants(p, q, 1, 1));
    const auto ctx = build_extension(sys.constants());
    for (const Mapping& mp : all_mappings()) {
      const auto rep = verify_case_table(sys, ctx, mp);
      CHECK(rep.case_number == 4);
      CHECK(rep.case_constant == mp.e + mp.b + mp.c);
      CHECK(rep.case_table_holds());
    }
  }
}

TEST_CASE("case (2) constant is off by c when p = +-3 and q = +-1 mod 8") {
  const CyclotomicSystem sys(build_system_constants(3, 7, 1, 1));
  const auto ctx = build_extension(sys.constants());
  const Mapping mp = Mapping::default_mapping();
  const auto rep = verify_case_table(sys, ctx, mp);
  CHECK(rep.case_number == 2);
  CHECK(rep.case_constant == mp.e + mp.b);
  CHECK(rep.values[1] == mp.e + mp.b + mp.c);
  CHECK(rep.values[3] == mp.e + mp.b);
  CHECK_FALSE(rep.case_table_holds());
  CHECK(rep.refined_table_holds());
}
