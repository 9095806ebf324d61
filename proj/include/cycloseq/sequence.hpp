#pragma once

#include <array>
#include <string>
#include <vector>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/gf4.hpp"
#include "cycloseq/poly.hpp"

namespace cycloseq {

/// Symbols assigned to the four buckets (a, b, c, d) and to index p^m q^n (e).
struct Mapping {
  GF4 a = GF4::alpha();
  GF4 b = GF4::alpha_sq();
  GF4 c = GF4::one();
  GF4 d = GF4::zero();
  GF4 e = GF4::one();

  /// (alpha, alpha + 1, 1, 0, 1).
  static Mapping default_mapping() { return {}; }
  /// Five comma-separated digits "a,b,c,d,e" (commas optional).
  static Mapping parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

/// Checks that a, b, c, d are pairwise distinct, e is nonzero, and the
/// constraint on e tied to p mod 8: e != b + d for p = +-1, e not in
/// {b, b + c} for p = +-3. Returns human-readable violations; empty = valid.
std::vector<std::string> validate_mapping(Int p, const Mapping& mapping);

/// Values of e that make S(beta^k) vanish for some 1 <= k < p^m q^n:
/// b + d when p or q is +-1 mod 8, b + c when p or q is +-3 mod 8.
std::vector<GF4> forbidden_e_values(Int p, Int q, const Mapping& mapping);
/// a, b, c, d distinct, e nonzero and not in forbidden_e_values.
bool attains_full_complexity(Int p, Int q, const Mapping& mapping);

/// All 72 mappings with {a, b, c, d} = GF4 and e != 0, in lexicographic
/// order of the digit string "abcde".
std::vector<Mapping> all_mappings();

struct QuaternarySequence {
  std::vector<GF4> symbols;
  Int p = 0;
  Int q = 0;
  int m = 0;
  int n = 0;
  Int g = 0;
  Int y = 0;
  Mapping mapping;

  Int period() const { return static_cast<Int>(symbols.size()); }
};

/// Throws InvalidMapping unless the mapping is valid or allow_degenerate is
/// set. Degenerate mode still requires distinct a, b, c, d.
QuaternarySequence build_sequence(const CyclotomicSystem& system, const Mapping& mapping,
                                  bool allow_degenerate = false);

struct BalanceProfile {
  std::array<Int, 4> symbol_counts{};  // indexed by GF4 encoding
  std::array<Int, 4> bucket_sizes{};   // a, b, c, d
  GF4 zero_index_symbol;
  GF4 middle_index_symbol;

  Int total() const;
};

BalanceProfile balance_profile(const CyclotomicSystem& system, const QuaternarySequence& seq);

/// S(x) = sum s_i x^i over one period.
Gf4Poly generating_polynomial(const QuaternarySequence& seq);

/// One line of digits 0..3 followed by a newline.
std::string sequence_file_contents(const QuaternarySequence& seq);
/// Parses sequence-file text. Throws MalformedSequence on bad characters,
/// empty input or trailing garbage after the newline.
std::vector<GF4> parse_sequence_file(const std::string& text);

}  // namespace cycloseq
