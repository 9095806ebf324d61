#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/gf4.hpp"
#include "cycloseq/poly.hpp"
#include "cycloseq/sequence.hpp"

namespace cycloseq {

/// Largest extension degree the verifier will build (4^12 elements).
inline constexpr int kMaxExtensionDegree = 12;
/// Extension fields up to this many elements get discrete-log tables.
inline constexpr Int kLogTableLimit = Int{1} << 20;

/// Element of F_{4^d} = GF4[x]/(f): the coefficient of x^k sits in bits
/// 2k and 2k+1, so addition is exclusive-or of the packed words.
struct ExtElement {
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend ExtElement operator+(ExtElement a, ExtElement b) { return {a.bits ^ b.bits}; }
  ExtElement& operator+=(ExtElement o) {
    bits ^= o.bits;
    return *this;
  }
  friend bool operator==(ExtElement, ExtElement) = default;
};

class ExtField {
 public:
  /// `modulus` must be monic and irreducible of degree 1..16.
  explicit ExtField(Gf4Poly modulus);

  int degree() const { return degree_; }
  Int size() const { return size_; }
  const Gf4Poly& modulus() const { return modulus_; }

  ExtElement zero() const { return {0}; }
  ExtElement one() const { return {1}; }
  ExtElement embed(GF4 c) const { return {c.bits()}; }
  /// The value as a GF4 scalar when it lies in the base field.
  std::optional<GF4> to_gf4(ExtElement x) const;
  ExtElement from_poly(const Gf4Poly& f) const;
  Gf4Poly to_poly(ExtElement x) const;

  ExtElement mul(ExtElement a, ExtElement b) const;
  ExtElement scale(GF4 c, ExtElement a) const;
  ExtElement pow(ExtElement a, Int exp) const;
  /// x -> x^4, the Frobenius map over GF4.
  ExtElement frobenius(ExtElement a) const;
  Int order(ExtElement a) const;

  /// Switches multiplication to log/antilog lookups; `generator` must
  /// generate the multiplicative group.
  void build_log_tables(ExtElement generator);
  bool has_log_tables() const { return !exp_.empty(); }

 private:
  ExtElement mul_schoolbook(ExtElement a, ExtElement b) const;

  Gf4Poly modulus_;
  int degree_ = 0;
  Int size_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

Int ord_4_mod(Int n);

/// Least monic irreducible polynomial of degree d, ordering candidates by
/// their coefficients from x^{d-1} down to x^0.
Gf4Poly least_irreducible(int degree);
bool is_irreducible(const Gf4Poly& f);

struct ExtFieldContext {
  ExtField field;
  Int n = 0;  // order of beta, p^m q^n
  ExtElement generator;
  ExtElement beta;
  std::vector<ExtElement> beta_powers;  // beta^0 .. beta^{n-1}
  // Set when built from a parameter system:
  // zeta_pq = beta^{p^{m-1} q^{n-1}}, zeta_p = beta^{p^{m-1} q^n},
  // zeta_q = beta^{p^m q^{n-1}}.
  std::optional<ExtElement> zeta_p;
  std::optional<ExtElement> zeta_q;
  std::optional<ExtElement> zeta_pq;

  ExtElement beta_pow(Int exp) const;
};

/// Field F_{4^d} with d = ord_N(4) and a primitive N-th root of unity.
/// Throws CapExceeded when d > max_degree.
ExtFieldContext build_extension(Int n, int max_degree = kMaxExtensionDegree);
ExtFieldContext build_extension(const SystemConstants& sc, int max_degree = kMaxExtensionDegree);

/// sum of beta^{k t} over t in the H-set of `id` (cofactor times D_h).
ExtElement char_sum(const CyclotomicSystem& system, const ExtFieldContext& ctx, const ClassId& id,
                    Int k);

struct CellViolation {
  Int k = 0;
  std::string cell;
  std::uint32_t expected = 0;
  std::uint32_t actual = 0;
};

struct CharSumReport {
  std::size_t cells_checked = 0;
  std::vector<CellViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// For every 1 <= k < p^m q^n, with k = p^a q^b l and gcd(l, pq) = 1, checks
/// each S_h^{(i,j)}(beta^k), S_h^{(i,0)}(beta^k), S_h^{(0,j)}(beta^k) against
/// its closed-form row (integer constants reduced mod 2), checks that the
/// doubled-modulus sums equal the odd-modulus sums, and that the
/// complementary Gauss-type sums add up to 1.
CharSumReport verify_lemma_6_7(const CyclotomicSystem& system, const ExtFieldContext& ctx);

struct CaseTableReport {
  int case_number = 0;     // 1..4 from (p mod 8, q mod 8)
  GF4 case_constant;       // e+b+d, e+b, e+b+d or e+b+c
  GF4 value_at_one;        // S(1)
  std::vector<GF4> values; // S(beta^k) for k = 0 .. N-1
  std::vector<Int> outside_base_field;
  std::vector<Int> case_mismatches;      // k >= 1 with S(beta^k) != case_constant
  std::vector<Int> refined_mismatches;   // k >= 1 differing from the refined prediction
  bool mapping_valid = false;            // validate_mapping
  bool nonzero_everywhere = false;       // S(beta^k) != 0 for all 0 <= k < N

  /// S(1) = e and S(beta^k) equals the case constant for every k.
  bool case_table_holds() const;
  /// S(1) = e and S(beta^k) equals the refined prediction for every k.
  bool refined_table_holds() const;
};

/// Case constant selected by (p mod 8, q mod 8) and its case number.
std::pair<int, GF4> case_constant(Int p, Int q, const Mapping& mapping);
/// Predicted S(beta^k) for 1 <= k < p^m q^n: e + tau (b + d) + sigma (c + d)
/// where tau counts the root-of-unity sums that survive at k (the pq sum
/// when p^m and q^n both miss k, the p sum when p^m misses k, the q sum when
/// q^n misses k) and sigma counts the surviving ones whose prime sits in
/// the +-3 mod 8 class (the pq sum follows q), both mod 2.
GF4 refined_value(const SystemConstants& sc, const Mapping& mapping, Int k);

CaseTableReport verify_case_table(const CyclotomicSystem& system, const ExtFieldContext& ctx,
                                  const Mapping& mapping);

}  // namespace cycloseq
