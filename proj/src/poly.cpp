#include "cycloseq/poly.hpp"

#include <algorithm>

#include "cycloseq/errors.hpp"

namespace cycloseq {

Gf4Poly::Gf4Poly(std::vector<GF4> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Gf4Poly::Gf4Poly(std::span<const GF4> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) { trim(); }

Gf4Poly Gf4Poly::constant(GF4 c) { return Gf4Poly(std::vector<GF4>{c}); }

Gf4Poly Gf4Poly::monomial(GF4 c, std::size_t power) {
  std::vector<GF4> coeffs(power + 1);
  coeffs[power] = c;
  return Gf4Poly(std::move(coeffs));
}

Gf4Poly Gf4Poly::from_digits(const std::string& digits) {
  return Gf4Poly(cycloseq::from_digits(digits));
}

void Gf4Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Gf4Poly::nonzero_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](GF4 c) { return !c.is_zero(); }));
}

Gf4Poly Gf4Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Gf4Poly Gf4Poly::derivative() const {
  // k * c_k with k reduced mod 2: only odd powers survive.
  std::vector<GF4> out(coeffs_.size() > 1 ? coeffs_.size() - 1 : 0);
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) out[k - 1] = coeffs_[k];
  return Gf4Poly(std::move(out));
}

Gf4Poly Gf4Poly::square() const {
  if (is_zero()) return {};
  std::vector<GF4> out(2 * coeffs_.size() - 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[2 * k] = coeffs_[k].square();
  return Gf4Poly(std::move(out));
}

GF4 Gf4Poly::evaluate(GF4 x) const {
  GF4 acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Gf4Poly::to_digits() const {
  if (is_zero()) return "0";
  return cycloseq::to_digits(coeffs_);
}

Gf4Poly operator+(const Gf4Poly& a, const Gf4Poly& b) {
  const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
  const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
  std::vector<GF4> out = longer;
  for (std::size_t k = 0; k < shorter.size(); ++k) out[k] += shorter[k];
  return Gf4Poly(std::move(out));
}

Gf4Poly operator*(const Gf4Poly& a, const Gf4Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GF4> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const GF4 ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += ai * b.coeffs_[j];
  }
  return Gf4Poly(std::move(out));
}

Gf4Poly operator*(GF4 c, const Gf4Poly& a) {
  std::vector<GF4> out = a.coeffs_;
  for (GF4& x : out) x *= c;
  return Gf4Poly(std::move(out));
}

std::pair<Gf4Poly, Gf4Poly> divmod(const Gf4Poly& a, const Gf4Poly& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Gf4Poly{}, a};

  std::vector<GF4> rem = a.coeffs();
  const std::vector<GF4>& div = b.coeffs();
  const std::size_t db = div.size() - 1;
  const GF4 lead_inv = b.leading().inverse();
  std::vector<GF4> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const GF4 factor = rem[k] * lead_inv;
    if (factor.is_zero()) continue;
    const std::size_t shift = k - db;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] += factor * div[j];
  }
  rem.resize(db);
  return {Gf4Poly(std::move(quot)), Gf4Poly(std::move(rem))};
}

Gf4Poly poly_mod(const Gf4Poly& a, const Gf4Poly& b) { return divmod(a, b).second; }

Gf4Poly poly_gcd(Gf4Poly a, Gf4Poly b) {
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    Gf4Poly r = poly_mod(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf4Poly x_pow_n_minus_1(std::int64_t n) {
  if (n < 1) throw InvalidParams("x^N - 1 needs N >= 1");
  std::vector<GF4> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.front() = GF4::one();
  coeffs.back() = GF4::one();
  return Gf4Poly(std::move(coeffs));
}

Gf4Poly reciprocal(const Gf4Poly& f) {
  std::vector<GF4> coeffs(f.coeffs().rbegin(), f.coeffs().rend());
  return Gf4Poly(std::move(coeffs));
}

}  // namespace cycloseq
