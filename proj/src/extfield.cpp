#include "cycloseq/extfield.hpp"

#include <array>
#include <tuple>

#include "cycloseq/errors.hpp"

namespace cycloseq {

namespace {

constexpr int kMaxPackedDegree = 16;

using Coeffs = std::array<GF4, 2 * kMaxPackedDegree>;

void unpack(std::uint32_t bits, int degree, Coeffs& out) {
  for (int k = 0; k < degree; ++k) out[static_cast<std::size_t>(k)] = GF4((bits >> (2 * k)) & 3U);
}

std::uint32_t pack(const Coeffs& c, int degree) {
  std::uint32_t bits = 0;
  for (int k = 0; k < degree; ++k) bits |= c[static_cast<std::size_t>(k)].bits() << (2 * k);
  return bits;
}

ExtElement parity(Int value) { return {static_cast<std::uint32_t>(value & 1)}; }

bool is_plus_minus_three(Int prime) {
  const Int r = prime % 8;
  return r == 3 || r == 5;
}

}  // namespace

ExtField::ExtField(Gf4Poly modulus) : modulus_(std::move(modulus)) {
  const auto d = modulus_.degree();
  if (d < 1 || d > kMaxPackedDegree || modulus_.leading() != GF4::one()) {
    throw InvalidParams("extension modulus must be monic of degree 1.." +
                        std::to_string(kMaxPackedDegree));
  }
  degree_ = static_cast<int>(d);
  size_ = Int{1} << (2 * degree_);
}

std::optional<GF4> ExtField::to_gf4(ExtElement x) const {
  if (x.bits > 3) return std::nullopt;
  return GF4(x.bits);
}

ExtElement ExtField::from_poly(const Gf4Poly& f) const {
  const Gf4Poly r = poly_mod(f, modulus_);
  std::uint32_t bits = 0;
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) bits |= r.coeffs()[k].bits() << (2 * k);
  return {bits};
}

Gf4Poly ExtField::to_poly(ExtElement x) const {
  Coeffs c{};
  unpack(x.bits, degree_, c);
  return Gf4Poly(std::vector<GF4>(c.begin(), c.begin() + degree_));
}

ExtElement ExtField::mul_schoolbook(ExtElement a, ExtElement b) const {
  Coeffs ca{}, cb{}, prod{};
  unpack(a.bits, degree_, ca);
  unpack(b.bits, degree_, cb);
  const auto d = static_cast<std::size_t>(degree_);
  for (std::size_t i = 0; i < d; ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += ca[i] * cb[j];
  }
  // x^d = sum f_t x^t (signs vanish in characteristic 2).
  const auto& f = modulus_.coeffs();
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    const GF4 c = prod[k];
    if (c.is_zero()) continue;
    prod[k] = GF4::zero();
    for (std::size_t t = 0; t < d; ++t) prod[k - d + t] += c * f[t];
  }
  return {pack(prod, degree_)};
}

ExtElement ExtField::mul(ExtElement a, ExtElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (exp_.empty()) return mul_schoolbook(a, b);
  const auto group = static_cast<std::uint64_t>(size_ - 1);
  return {exp_[(static_cast<std::uint64_t>(log_[a.bits]) + log_[b.bits]) % group]};
}

ExtElement ExtField::scale(GF4 c, ExtElement a) const {
  Coeffs ca{};
  unpack(a.bits, degree_, ca);
  for (int k = 0; k < degree_; ++k) ca[static_cast<std::size_t>(k)] *= c;
  return {pack(ca, degree_)};
}

ExtElement ExtField::pow(ExtElement a, Int exp) const {
  if (exp < 0) throw InvalidParams("negative exponent in extension field");
  ExtElement result = one();
  while (exp > 0) {
    if (exp & 1) result = mul(result, a);
    a = mul(a, a);
    exp >>= 1;
  }
  return result;
}

ExtElement ExtField::frobenius(ExtElement a) const {
  const ExtElement sq = mul(a, a);
  return mul(sq, sq);
}

Int ExtField::order(ExtElement a) const {
  if (a.is_zero()) throw InvalidParams("zero has no multiplicative order");
  Int ord = size_ - 1;
  for (Int f : prime_factors(size_ - 1)) {
    while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
  }
  return ord;
}

void ExtField::build_log_tables(ExtElement generator) {
  const auto group = static_cast<std::size_t>(size_ - 1);
  std::vector<std::uint32_t> exp(group);
  std::vector<std::uint32_t> log(static_cast<std::size_t>(size_), 0);
  ExtElement x = one();
  for (std::size_t k = 0; k < group; ++k) {
    exp[k] = x.bits;
    log[x.bits] = static_cast<std::uint32_t>(k);
    x = mul_schoolbook(x, generator);
  }
  if (x != one()) throw InvalidParams("log tables need a generator of the multiplicative group");
  exp_ = std::move(exp);
  log_ = std::move(log);
}

Int ord_4_mod(Int n) {
  if (n < 1) throw InvalidParams("ord_4_mod needs n >= 1");
  if (n % 2 == 0) throw NotCoprime("4 is not a unit modulo an even number");
  if (n == 1) return 1;
  return mult_order(4, n);
}

bool is_irreducible(const Gf4Poly& f) {
  const auto d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Gf4Poly x = Gf4Poly::monomial(GF4::one(), 1);
  // frob[k] = x^{4^k} mod f
  std::vector<Gf4Poly> frob{x};
  for (Int k = 1; k <= d; ++k) {
    Gf4Poly h = poly_mod(frob.back() * frob.back(), f);
    h = poly_mod(h * h, f);
    frob.push_back(std::move(h));
  }
  if (frob[static_cast<std::size_t>(d)] != x) return false;
  for (Int r : prime_factors(d)) {
    if (poly_gcd(frob[static_cast<std::size_t>(d / r)] + x, f).degree() != 0) return false;
  }
  return true;
}

Gf4Poly least_irreducible(int degree) {
  if (degree < 1 || degree > kMaxPackedDegree) throw InvalidParams("unsupported extension degree");
  const std::uint64_t tails = std::uint64_t{1} << (2 * degree);
  for (std::uint64_t tail = 0; tail < tails; ++tail) {
    std::vector<GF4> coeffs(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) coeffs[static_cast<std::size_t>(k)] = GF4((tail >> (2 * k)) & 3U);
    coeffs.back() = GF4::one();
    Gf4Poly f(std::move(coeffs));
    if (is_irreducible(f)) return f;
  }
  throw InvalidParams("no irreducible polynomial found");
}

ExtElement ExtFieldContext::beta_pow(Int exp) const {
  return beta_powers[static_cast<std::size_t>(mod_floor(exp, n))];
}

ExtFieldContext build_extension(Int n, int max_degree) {
  const Int d = ord_4_mod(n);
  if (d > max_degree) {
    throw CapExceeded("extension degree " + std::to_string(d) + " exceeds cap " +
                      std::to_string(max_degree));
  }
  ExtFieldContext ctx{ExtField(least_irreducible(static_cast<int>(d))), n, {}, {}, {}, {}, {}, {}};
  auto& field = ctx.field;
  const Int group = field.size() - 1;
  for (std::uint32_t v = 1;; ++v) {
    if (field.order({v}) == group) {
      ctx.generator = {v};
      break;
    }
  }
  if (field.size() <= kLogTableLimit) field.build_log_tables(ctx.generator);
  ctx.beta = field.pow(ctx.generator, group / n);
  ctx.beta_powers.reserve(static_cast<std::size_t>(n));
  ExtElement x = field.one();
  for (Int k = 0; k < n; ++k) {
    ctx.beta_powers.push_back(x);
    x = field.mul(x, ctx.beta);
  }
  return ctx;
}

ExtFieldContext build_extension(const SystemConstants& sc, int max_degree) {
  ExtFieldContext ctx = build_extension(sc.half_period(), max_degree);
  ctx.zeta_pq = ctx.beta_pow(sc.p_pow(sc.m - 1) * sc.q_pow(sc.n - 1));
  ctx.zeta_p = ctx.beta_pow(sc.p_pow(sc.m - 1) * sc.q_pow(sc.n));
  ctx.zeta_q = ctx.beta_pow(sc.p_pow(sc.m) * sc.q_pow(sc.n - 1));
  return ctx;
}

ExtElement char_sum(const CyclotomicSystem& system, const ExtFieldContext& ctx, const ClassId& id,
                    Int k) {
  if (ctx.n != system.half_period()) throw InvalidParams("extension context built for another N");
  const Int cofactor = class_cofactor(system.constants(), id);
  ExtElement acc;
  for (Int x : system.cls(id)) acc += ctx.beta_pow(mul_mod(mul_mod(k, cofactor, ctx.n), x, ctx.n));
  return acc;
}

namespace {

// sum over t in `set` of beta^{exponent * t}
ExtElement root_sum(const ExtFieldContext& ctx, const std::vector<Int>& set, Int exponent) {
  ExtElement acc;
  for (Int t : set) acc += ctx.beta_pow(mul_mod(exponent, t, ctx.n));
  return acc;
}

}  // namespace

CharSumReport verify_lemma_6_7(const CyclotomicSystem& system, const ExtFieldContext& ctx) {
  const auto& sc = system.constants();
  const Int big_n = sc.half_period();
  if (ctx.n != big_n) throw InvalidParams("extension context built for another N");
  const Int p = sc.p;
  const Int q = sc.q;

  CharSumReport report;
  auto check = [&](Int k, const std::string& cell, ExtElement expected, ExtElement actual) {
    ++report.cells_checked;
    if (expected != actual) report.violations.push_back({k, cell, expected.bits, actual.bits});
  };

  const std::array<const std::vector<Int>*, 2> d_pq{&system.cls({Shape::PQ, 1, 1, 0}),
                                                    &system.cls({Shape::PQ, 1, 1, 1})};
  const std::array<const std::vector<Int>*, 2> d_p{&system.cls({Shape::P, 1, 0, 0}),
                                                   &system.cls({Shape::P, 1, 0, 1})};
  const std::array<const std::vector<Int>*, 2> d_q{&system.cls({Shape::Q, 0, 1, 0}),
                                                   &system.cls({Shape::Q, 0, 1, 1})};
  // zeta_pq = beta^{p^{m-1} q^{n-1}}
  const Int zeta_pq_exp = sc.p_pow(sc.m - 1) * sc.q_pow(sc.n - 1);

  for (Int k = 1; k < big_n; ++k) {
    const int a = valuation(k, p);
    const int b = valuation(k, q);
    Int l = k;
    for (int t = 0; t < a; ++t) l /= p;
    for (int t = 0; t < b; ++t) l /= q;
    // zeta_p = beta^{p^{m-1} q^{n+b}}, zeta_q = beta^{p^{m+a} q^{n-1}}
    const Int zeta_p_exp = mul_mod(sc.p_pow(sc.m - 1), pow_mod(q, sc.n + b, big_n), big_n);
    const Int zeta_q_exp = mul_mod(pow_mod(p, sc.m + a, big_n), sc.q_pow(sc.n - 1), big_n);
    const std::string at = " k=" + std::to_string(k);

    std::array<ExtElement, 2> gauss_pq{}, gauss_p{}, gauss_q{};
    for (int h = 0; h < 2; ++h) {
      gauss_pq[h] = root_sum(ctx, *d_pq[h], mul_mod(zeta_pq_exp, l, big_n));
      gauss_p[h] = root_sum(ctx, *d_p[h], mul_mod(zeta_p_exp, l, big_n));
      gauss_q[h] = root_sum(ctx, *d_q[h], mul_mod(zeta_q_exp, l, big_n));
    }
    check(k, "complementary pq sums" + at, ctx.field.one(), gauss_pq[0] + gauss_pq[1]);
    check(k, "complementary p sums" + at, ctx.field.one(), gauss_p[0] + gauss_p[1]);
    check(k, "complementary q sums" + at, ctx.field.one(), gauss_q[0] + gauss_q[1]);

    for (int h = 0; h < 2; ++h) {
      for (int i = 1; i <= sc.m; ++i) {
        for (int j = 1; j <= sc.n; ++j) {
          const ClassId dbl{Shape::TwoPQ, i, j, h};
          const ExtElement actual = char_sum(system, ctx, dbl, k);
          ExtElement expected;
          if (i <= a && j <= b) {
            expected = parity((p - 1) * (q - 1) * sc.p_pow(i - 1) * sc.q_pow(j - 1) / 2);
          } else if (i == a + 1 && j == b + 1) {
            expected = gauss_pq[h];
          } else if (i > a + 1 || j > b + 1) {
            expected = {};
          } else if (i <= a && j == b + 1) {
            expected = {};
          } else {
            expected = parity((q - 1) / 2);
          }
          check(k, to_string(dbl) + at, expected, actual);
          check(k, "odd/doubled agreement " + to_string(dbl) + at, actual,
                char_sum(system, ctx, {Shape::PQ, i, j, h}, k));
        }
      }
      for (int i = 1; i <= sc.m; ++i) {
        const ClassId dbl{Shape::TwoP, i, 0, h};
        const ExtElement actual = char_sum(system, ctx, dbl, k);
        ExtElement expected;
        if (i <= a) {
          expected = parity(sc.p_pow(i - 1) * (p - 1) / 2);
        } else if (i == a + 1) {
          expected = gauss_p[h];
        }
        check(k, to_string(dbl) + at, expected, actual);
        check(k, "odd/doubled agreement " + to_string(dbl) + at, actual,
              char_sum(system, ctx, {Shape::P, i, 0, h}, k));
      }
      for (int j = 1; j <= sc.n; ++j) {
        const ClassId dbl{Shape::TwoQ, 0, j, h};
        const ExtElement actual = char_sum(system, ctx, dbl, k);
        ExtElement expected;
        if (j <= b) {
          expected = parity((q - 1) * sc.q_pow(j - 1) / 2);
        } else if (j == b + 1) {
          expected = gauss_q[h];
        }
        check(k, to_string(dbl) + at, expected, actual);
        check(k, "odd/doubled agreement " + to_string(dbl) + at, actual,
              char_sum(system, ctx, {Shape::Q, 0, j, h}, k));
      }
    }
  }
  return report;
}

std::pair<int, GF4> case_constant(Int p, Int q, const Mapping& mp) {
  const bool p3 = is_plus_minus_three(p);
  const bool q3 = is_plus_minus_three(q);
  if (!p3 && !q3) return {1, mp.e + mp.b + mp.d};
  if (p3 && !q3) return {2, mp.e + mp.b};
  if (!p3 && q3) return {3, mp.e + mp.b + mp.d};
  return {4, mp.e + mp.b + mp.c};
}

GF4 refined_value(const SystemConstants& sc, const Mapping& mp, Int k) {
  const bool p_sum = valuation(k, sc.p) < sc.m;
  const bool q_sum = valuation(k, sc.q) < sc.n;
  const bool pq_sum = p_sum && q_sum;
  const bool p3 = is_plus_minus_three(sc.p);
  const bool q3 = is_plus_minus_three(sc.q);
  const int tau = (int{pq_sum} + int{p_sum} + int{q_sum}) & 1;
  const int sigma = (int{pq_sum && q3} + int{p_sum && p3} + int{q_sum && q3}) & 1;
  GF4 value = mp.e;
  if (tau) value += mp.b + mp.d;
  if (sigma) value += mp.c + mp.d;
  return value;
}

bool CaseTableReport::case_table_holds() const {
  return outside_base_field.empty() && case_mismatches.empty();
}

bool CaseTableReport::refined_table_holds() const {
  return outside_base_field.empty() && refined_mismatches.empty();
}

CaseTableReport verify_case_table(const CyclotomicSystem& system, const ExtFieldContext& ctx,
                                  const Mapping& mapping) {
  const auto& sc = system.constants();
  const Int big_n = sc.half_period();
  if (ctx.n != big_n) throw InvalidParams("extension context built for another N");
  const auto seq = build_sequence(system, mapping, /*allow_degenerate=*/true);

  CaseTableReport report;
  std::tie(report.case_number, report.case_constant) = case_constant(sc.p, sc.q, mapping);
  report.mapping_valid = validate_mapping(sc.p, mapping).empty();
  report.nonzero_everywhere = true;

  for (Int k = 0; k < big_n; ++k) {
    std::array<ExtElement, 4> by_symbol{};
    for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
      by_symbol[seq.symbols[i].bits()] += ctx.beta_pow(mul_mod(k, static_cast<Int>(i), big_n));
    }
    ExtElement value;
    for (unsigned v = 1; v < 4; ++v) value += ctx.field.scale(GF4(v), by_symbol[v]);
    const auto scalar = ctx.field.to_gf4(value);
    if (!scalar) {
      report.outside_base_field.push_back(k);
      report.values.push_back(GF4::zero());
      report.nonzero_everywhere = report.nonzero_everywhere && !value.is_zero();
      continue;
    }
    report.values.push_back(*scalar);
    if (scalar->is_zero()) report.nonzero_everywhere = false;
    if (k == 0) {
      report.value_at_one = *scalar;
      if (*scalar != mapping.e) {
        report.case_mismatches.push_back(0);
        report.refined_mismatches.push_back(0);
      }
      continue;
    }
    if (*scalar != report.case_constant) report.case_mismatches.push_back(k);
    if (*scalar != refined_value(sc, mapping, k)) report.refined_mismatches.push_back(k);
  }
  return report;
}

}  // namespace cycloseq
