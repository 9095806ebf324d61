#include "cycloseq/analysis.hpp"

#include <vector>

#include "cycloseq/errors.hpp"

namespace cycloseq {

BerlekampMasseyResult berlekamp_massey(std::span<const GF4> s) {
  std::vector<GF4> c{GF4::one()};
  std::vector<GF4> b{GF4::one()};
  std::size_t length = 0;
  std::size_t shift = 1;
  GF4 last_discrepancy = GF4::one();

  for (std::size_t k = 0; k < s.size(); ++k) {
    GF4 discrepancy = s[k];
    for (std::size_t i = 1; i <= length && i < c.size(); ++i) discrepancy += c[i] * s[k - i];
    if (discrepancy.is_zero()) {
      ++shift;
      continue;
    }
    const GF4 factor = discrepancy * last_discrepancy.inverse();
    std::vector<GF4> previous = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] += factor * b[i];
    if (2 * length <= k) {
      length = k + 1 - length;
      b = std::move(previous);
      last_discrepancy = discrepancy;
      shift = 1;
    } else {
      ++shift;
    }
  }
  return {static_cast<Int>(length), Gf4Poly(std::move(c))};
}

GcdResult lc_via_gcd(std::span<const GF4> one_period) {
  const auto period = static_cast<Int>(one_period.size());
  if (period == 0) return {0, Gf4Poly::constant(GF4::one()), Gf4Poly::constant(GF4::one())};
  const Gf4Poly modulus = (period % 4 == 2) ? x_pow_n_minus_1(period / 2).square()
                                            : x_pow_n_minus_1(period);
  const Gf4Poly s(one_period);
  GcdResult out;
  out.gcd = poly_gcd(modulus, s);
  out.linear_complexity = period - out.gcd.degree();
  // S(x) lists s_0 first, so the cofactor is the connection polynomial.
  out.minimal_polynomial = reciprocal(divmod(modulus, out.gcd).first).monic();
  return out;
}

Gf4Poly characteristic_from_connection(const Gf4Poly& connection, Int linear_complexity) {
  std::vector<GF4> coeffs(static_cast<std::size_t>(linear_complexity) + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[coeffs.size() - 1 - k] = connection[k];
  }
  return Gf4Poly(std::move(coeffs));
}

LinearComplexityReport analyze_symbols(std::span<const GF4> one_period) {
  std::vector<GF4> two_periods(one_period.begin(), one_period.end());
  two_periods.insert(two_periods.end(), one_period.begin(), one_period.end());

  const auto bm = berlekamp_massey(two_periods);
  const auto via_gcd = lc_via_gcd(one_period);

  LinearComplexityReport report;
  report.period = static_cast<Int>(one_period.size());
  report.lc_bm = bm.linear_complexity;
  report.lc_gcd = via_gcd.linear_complexity;
  report.minimal_polynomial = via_gcd.minimal_polynomial;
  const bool same_lc = report.lc_bm == report.lc_gcd;
  const bool same_poly =
      characteristic_from_connection(bm.connection, bm.linear_complexity).monic() ==
      via_gcd.minimal_polynomial;
  report.methods_agree = same_lc && same_poly;
  if (!report.methods_agree) {
    throw MethodDisagreement("Berlekamp-Massey gives " + std::to_string(report.lc_bm) +
                             ", gcd route gives " + std::to_string(report.lc_gcd) +
                             (same_poly ? "" : " (minimal polynomials differ)"));
  }
  report.theorem_holds = report.lc_gcd == report.period;
  return report;
}

LinearComplexityReport verify_theorem(const CyclotomicSystem& system, const Mapping& mapping) {
  const auto seq = build_sequence(system, mapping);
  return analyze_symbols(seq.symbols);
}

Int degenerate_lower_bound(Int p, Int q, int m, int n) {
  return checked_mul(checked_pow(p, m) + 1, checked_pow(q, n) + 1) / 2;
}

DegenerateReport analyze_degenerate(const CyclotomicSystem& system, const Mapping& mapping) {
  const auto& sc = system.constants();
  if (validate_mapping(sc.p, mapping).empty()) {
    throw InvalidMapping("mapping " + mapping.to_string() + " satisfies the constraint on e");
  }
  const auto seq = build_sequence(system, mapping, /*allow_degenerate=*/true);

  DegenerateReport out;
  out.lc = analyze_symbols(seq.symbols);
  out.bound = degenerate_lower_bound(sc.p, sc.q, sc.m, sc.n);
  out.lc.degenerate_bound = out.bound;
  out.meets_bound = out.lc.lc_gcd >= out.bound;
  out.below_full = out.lc.lc_gcd < out.lc.period;

  // deg gcd((x^N - 1)^2, S) counts each root of x^N - 1 once, plus once more
  // when it is also a root of S'.
  const Gf4Poly s = generating_polynomial(seq);
  const Gf4Poly x_n_1 = x_pow_n_minus_1(sc.half_period());
  const Gf4Poly simple = poly_gcd(x_n_1, s);
  out.roots = simple.degree();
  out.repeated_roots = poly_gcd(simple, s.derivative()).degree();
  out.root_count_consistent = out.lc.period - out.roots - out.repeated_roots == out.lc.lc_gcd;
  return out;
}

}  // namespace cycloseq
