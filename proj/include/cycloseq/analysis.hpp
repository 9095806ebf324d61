#pragma once

#include <optional>
#include <span>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/poly.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

struct BerlekampMasseyResult {
  Int linear_complexity = 0;
  /// 1 + c_1 x + ... + c_L x^L, so s_n = c_1 s_{n-1} + ... + c_L s_{n-L}.
  Gf4Poly connection;
};

BerlekampMasseyResult berlekamp_massey(std::span<const GF4> symbols);

struct GcdResult {
  Int linear_complexity = 0;
  Gf4Poly minimal_polynomial;  // monic
  Gf4Poly gcd;                 // gcd(x^N - 1, S(x)), monic
};

/// Linear complexity of the periodic sequence with the given period via
/// N - deg gcd(x^N - 1, S(x)). For N = 2 * odd the modulus is built as the
/// square of x^{N/2} - 1.
GcdResult lc_via_gcd(std::span<const GF4> one_period);

/// Characteristic polynomial of degree L read off a BM connection polynomial:
/// x^L C(1/x).
Gf4Poly characteristic_from_connection(const Gf4Poly& connection, Int linear_complexity);

struct LinearComplexityReport {
  Int period = 0;
  Int lc_bm = 0;
  Int lc_gcd = 0;
  Gf4Poly minimal_polynomial;
  bool methods_agree = false;
  bool theorem_holds = false;  // lc == period
  std::optional<Int> degenerate_bound;
};

/// Runs both methods on one period (BM sees two periods). Throws
/// MethodDisagreement if they differ or the BM recurrence does not match
/// the gcd minimal polynomial.
LinearComplexityReport analyze_symbols(std::span<const GF4> one_period);

/// Builds the sequence for a valid mapping and analyzes it. A sequence whose
/// complexity falls short of the period comes back with theorem_holds = false;
/// that outcome is reported, not thrown. Throws InvalidMapping for mappings
/// that fail validate_mapping.
LinearComplexityReport verify_theorem(const CyclotomicSystem& system, const Mapping& mapping);

/// (p^m + 1)(q^n + 1) / 2
Int degenerate_lower_bound(Int p, Int q, int m, int n);

struct DegenerateReport {
  LinearComplexityReport lc;
  Int bound = 0;
  bool meets_bound = false;       // lc >= bound
  bool below_full = false;        // lc < period
  Int roots = 0;                  // deg gcd(x^{N/2} - 1, S)
  Int repeated_roots = 0;         // deg gcd(x^{N/2} - 1, S, S')
  bool root_count_consistent = false;  // period - roots - repeated_roots == lc
};

/// For mappings that break the constraint on e (distinct a, b, c, d and
/// e != 0 still required). Throws InvalidMapping if the mapping is valid or
/// malformed.
DegenerateReport analyze_degenerate(const CyclotomicSystem& system, const Mapping& mapping);

}  // namespace cycloseq
