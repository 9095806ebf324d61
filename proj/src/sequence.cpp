#include "cycloseq/sequence.hpp"

#include <algorithm>

#include "cycloseq/errors.hpp"

namespace cycloseq {

namespace {

bool p_is_plus_minus_one(Int prime) {
  const Int r = prime % 8;
  return r == 1 || r == 7;
}

bool distinct_symbols(const Mapping& mp) {
  const std::array<GF4, 4> s{mp.a, mp.b, mp.c, mp.d};
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = x + 1; y < s.size(); ++y)
      if (s[x] == s[y]) return false;
  return true;
}

}  // namespace

Mapping Mapping::parse(const std::string& text) {
  std::vector<GF4> digits;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '0' || ch > '3') throw InvalidMapping("mapping digit must be 0..3, got '" + std::string(1, ch) + "'");
    digits.push_back(GF4::from_digit(ch));
  }
  if (digits.size() != 5) throw InvalidMapping("mapping needs exactly five digits a,b,c,d,e");
  return {digits[0], digits[1], digits[2], digits[3], digits[4]};
}

std::string Mapping::to_string() const {
  return std::string{a.digit(), ',', b.digit(), ',', c.digit(), ',', d.digit(), ',', e.digit()};
}

std::vector<std::string> validate_mapping(Int p, const Mapping& mp) {
  std::vector<std::string> out;
  if (!distinct_symbols(mp)) out.emplace_back("a, b, c, d are not pairwise distinct");
  if (mp.e.is_zero()) out.emplace_back("e must be nonzero");
  if (p_is_plus_minus_one(p)) {
    if (mp.e == mp.b + mp.d) out.emplace_back("e = b+d forbidden for p=+-1 mod 8");
  } else {
    if (mp.e == mp.b) out.emplace_back("e = b forbidden for p=+-3 mod 8");
    if (mp.e == mp.b + mp.c) out.emplace_back("e = b+c forbidden for p=+-3 mod 8");
  }
  return out;
}

std::vector<GF4> forbidden_e_values(Int p, Int q, const Mapping& mp) {
  std::vector<GF4> out;
  if (p_is_plus_minus_one(p) || p_is_plus_minus_one(q)) out.push_back(mp.b + mp.d);
  if (!p_is_plus_minus_one(p) || !p_is_plus_minus_one(q)) out.push_back(mp.b + mp.c);
  return out;
}

bool attains_full_complexity(Int p, Int q, const Mapping& mp) {
  if (!distinct_symbols(mp) || mp.e.is_zero()) return false;
  const auto bad = forbidden_e_values(p, q, mp);
  return std::find(bad.begin(), bad.end(), mp.e) == bad.end();
}

std::vector<Mapping> all_mappings() {
  std::vector<Mapping> out;
  std::array<unsigned, 4> perm{0, 1, 2, 3};
  do {
    for (unsigned e = 1; e < 4; ++e) {
      out.push_back({GF4(perm[0]), GF4(perm[1]), GF4(perm[2]), GF4(perm[3]), GF4(e)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

QuaternarySequence build_sequence(const CyclotomicSystem& system, const Mapping& mapping,
                                  bool allow_degenerate) {
  const auto& sc = system.constants();
  const auto violations = validate_mapping(sc.p, mapping);
  if (!violations.empty()) {
    const bool only_e_constraint = distinct_symbols(mapping) && !mapping.e.is_zero();
    if (!allow_degenerate || !only_e_constraint) throw InvalidMapping(violations.front());
  }

  QuaternarySequence seq;
  seq.p = sc.p;
  seq.q = sc.q;
  seq.m = sc.m;
  seq.n = sc.n;
  seq.g = sc.g;
  seq.y = sc.y;
  seq.mapping = mapping;
  const auto partition = system.partition();
  seq.symbols.resize(partition.size());
  for (std::size_t k = 0; k < partition.size(); ++k) {
    GF4 s;
    switch (partition[k]) {
      case Bucket::Zero: s = GF4::zero(); break;
      case Bucket::Middle: s = mapping.e; break;
      case Bucket::A: s = mapping.a; break;
      case Bucket::B: s = mapping.b; break;
      case Bucket::C: s = mapping.c; break;
      case Bucket::D: s = mapping.d; break;
      case Bucket::Unassigned: throw PartitionViolation("unassigned index in partition");
    }
    seq.symbols[k] = s;
  }
  return seq;
}

Int BalanceProfile::total() const {
  Int t = 0;
  for (Int c : symbol_counts) t += c;
  return t;
}

BalanceProfile balance_profile(const CyclotomicSystem& system, const QuaternarySequence& seq) {
  BalanceProfile out;
  for (GF4 s : seq.symbols) ++out.symbol_counts[s.bits()];
  for (Bucket b : system.partition()) {
    switch (b) {
      case Bucket::A: ++out.bucket_sizes[0]; break;
      case Bucket::B: ++out.bucket_sizes[1]; break;
      case Bucket::C: ++out.bucket_sizes[2]; break;
      case Bucket::D: ++out.bucket_sizes[3]; break;
      default: break;
    }
  }
  out.zero_index_symbol = seq.symbols.front();
  out.middle_index_symbol = seq.symbols[seq.symbols.size() / 2];
  return out;
}

Gf4Poly generating_polynomial(const QuaternarySequence& seq) { return Gf4Poly(seq.symbols); }

std::string sequence_file_contents(const QuaternarySequence& seq) {
  return to_digits(seq.symbols) + "\n";
}

std::vector<GF4> parse_sequence_file(const std::string& text) {
  std::string line = text;
  if (!line.empty() && line.back() == '\n') line.pop_back();
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) throw MalformedSequence("sequence file is empty");
  if (line.find('\n') != std::string::npos) {
    throw MalformedSequence("sequence file must contain a single line");
  }
  return from_digits(line);
}

}  // namespace cycloseq
