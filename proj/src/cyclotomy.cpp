#include "cycloseq/cyclotomy.hpp"

#include <algorithm>
#include <set>

#include "cycloseq/errors.hpp"

namespace cycloseq {

namespace {

std::vector<Int> sorted_unique(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_h(int h) {
  if (h != 0 && h != 1) throw InvalidParams("class side h must be 0 or 1");
}

void check_exponent(int e, int max, const char* what) {
  if (e < 1 || e > max) {
    throw InvalidParams(std::string(what) + " exponent " + std::to_string(e) + " out of range");
  }
}

std::vector<Int> build_pq_like(const SystemConstants& sc, int i, int j, int h, Int modulus) {
  check_exponent(i, sc.m, "p");
  check_exponent(j, sc.n, "q");
  check_h(h);
  const Int g_sq = mul_mod(sc.g, sc.g, modulus);
  const Int shift = pow_mod(sc.g, h, modulus);
  const Int half_d = sc.d(i, j) / 2;
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(half_d * sc.e(i, j)));
  Int y_pow = shift;
  for (Int k = 0; k < sc.e(i, j); ++k) {
    Int x = y_pow;
    for (Int t = 0; t < half_d; ++t) {
      out.push_back(x);
      x = mul_mod(x, g_sq, modulus);
    }
    y_pow = mul_mod(y_pow, sc.y, modulus);
  }
  return sorted_unique(std::move(out));
}

}  // namespace

bool is_doubled(Shape shape) {
  return shape == Shape::TwoPQ || shape == Shape::TwoP || shape == Shape::TwoQ;
}

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::PQ: return "pq";
    case Shape::TwoPQ: return "2pq";
    case Shape::P: return "p";
    case Shape::TwoP: return "2p";
    case Shape::Q: return "q";
    case Shape::TwoQ: return "2q";
  }
  return "?";
}

std::string to_string(const ClassId& id) {
  std::string out = "D" + std::to_string(id.h) + "(" + to_string(id.shape);
  switch (id.shape) {
    case Shape::PQ:
    case Shape::TwoPQ: out += ";" + std::to_string(id.i) + "," + std::to_string(id.j); break;
    case Shape::P:
    case Shape::TwoP: out += ";" + std::to_string(id.i); break;
    case Shape::Q:
    case Shape::TwoQ: out += ";" + std::to_string(id.j); break;
  }
  return out + ")";
}

std::string to_string(Bucket bucket) {
  switch (bucket) {
    case Bucket::Zero: return "zero";
    case Bucket::Middle: return "middle";
    case Bucket::A: return "a";
    case Bucket::B: return "b";
    case Bucket::C: return "c";
    case Bucket::D: return "d";
    case Bucket::Unassigned: return "unassigned";
  }
  return "?";
}

Int class_modulus(const SystemConstants& sc, const ClassId& id) {
  const Int factor = is_doubled(id.shape) ? 2 : 1;
  switch (id.shape) {
    case Shape::PQ:
    case Shape::TwoPQ: return factor * sc.p_pow(id.i) * sc.q_pow(id.j);
    case Shape::P:
    case Shape::TwoP: return factor * sc.p_pow(id.i);
    case Shape::Q:
    case Shape::TwoQ: return factor * sc.q_pow(id.j);
  }
  return 0;
}

Int class_cofactor(const SystemConstants& sc, const ClassId& id) {
  switch (id.shape) {
    case Shape::PQ:
    case Shape::TwoPQ: return sc.p_pow(sc.m - id.i) * sc.q_pow(sc.n - id.j);
    case Shape::P:
    case Shape::TwoP: return sc.p_pow(sc.m - id.i) * sc.q_pow(sc.n);
    case Shape::Q:
    case Shape::TwoQ: return sc.p_pow(sc.m) * sc.q_pow(sc.n - id.j);
  }
  return 0;
}

std::vector<Int> build_class_pq(const SystemConstants& sc, int i, int j, int h) {
  check_exponent(i, sc.m, "p");
  check_exponent(j, sc.n, "q");
  return build_pq_like(sc, i, j, h, sc.p_pow(i) * sc.q_pow(j));
}

std::vector<Int> build_class_2pq(const SystemConstants& sc, int i, int j, int h) {
  check_exponent(i, sc.m, "p");
  check_exponent(j, sc.n, "q");
  return build_pq_like(sc, i, j, h, 2 * sc.p_pow(i) * sc.q_pow(j));
}

std::vector<Int> build_class_prime_power(const SystemConstants& sc, PrimeSide side, int exponent,
                                         bool doubled, int h) {
  const bool is_p = side == PrimeSide::P;
  check_exponent(exponent, is_p ? sc.m : sc.n, is_p ? "p" : "q");
  check_h(h);
  const Int prime = is_p ? sc.p : sc.q;
  const Int prime_power = is_p ? sc.p_pow(exponent) : sc.q_pow(exponent);
  const Int modulus = doubled ? 2 * prime_power : prime_power;
  const Int half_phi = prime_power / prime * (prime - 1) / 2;
  const Int g_sq = mul_mod(sc.g, sc.g, modulus);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(half_phi));
  Int x = pow_mod(sc.g, h, modulus);
  for (Int t = 0; t < half_phi; ++t) {
    out.push_back(x);
    x = mul_mod(x, g_sq, modulus);
  }
  return sorted_unique(std::move(out));
}

std::vector<Int> build_class(const SystemConstants& sc, const ClassId& id) {
  switch (id.shape) {
    case Shape::PQ: return build_class_pq(sc, id.i, id.j, id.h);
    case Shape::TwoPQ: return build_class_2pq(sc, id.i, id.j, id.h);
    case Shape::P: return build_class_prime_power(sc, PrimeSide::P, id.i, false, id.h);
    case Shape::TwoP: return build_class_prime_power(sc, PrimeSide::P, id.i, true, id.h);
    case Shape::Q: return build_class_prime_power(sc, PrimeSide::Q, id.j, false, id.h);
    case Shape::TwoQ: return build_class_prime_power(sc, PrimeSide::Q, id.j, true, id.h);
  }
  return {};
}

CyclotomicSystem::CyclotomicSystem(SystemConstants constants) : constants_(std::move(constants)) {
  const auto& sc = constants_;
  for (Shape s : {Shape::PQ, Shape::TwoPQ}) {
    for (int i = 1; i <= sc.m; ++i)
      for (int j = 1; j <= sc.n; ++j)
        for (int h = 0; h < 2; ++h) ids_.push_back({s, i, j, h});
  }
  for (Shape s : {Shape::P, Shape::TwoP}) {
    for (int i = 1; i <= sc.m; ++i)
      for (int h = 0; h < 2; ++h) ids_.push_back({s, i, 0, h});
  }
  for (Shape s : {Shape::Q, Shape::TwoQ}) {
    for (int j = 1; j <= sc.n; ++j)
      for (int h = 0; h < 2; ++h) ids_.push_back({s, 0, j, h});
  }
  classes_.reserve(ids_.size());
  for (const ClassId& id : ids_) classes_.push_back(build_class(sc, id));

  const Int period = sc.period();
  const Int half = sc.half_period();
  partition_.assign(static_cast<std::size_t>(period), Bucket::Unassigned);
  source_.assign(static_cast<std::size_t>(period), 0);
  partition_[0] = Bucket::Zero;
  partition_[static_cast<std::size_t>(half)] = Bucket::Middle;

  for (std::size_t s = 0; s < ids_.size(); ++s) {
    const ClassId& id = ids_[s];
    const bool doubled = is_doubled(id.shape);
    const Bucket bucket = doubled ? (id.h == 0 ? Bucket::A : Bucket::B)
                                  : (id.h == 0 ? Bucket::C : Bucket::D);
    const Int factor = class_cofactor(sc, id) * (doubled ? 1 : 2);
    for (Int x : classes_[s]) {
      const Int index = x * factor;
      auto& slot = partition_.at(static_cast<std::size_t>(index));
      if (slot != Bucket::Unassigned) {
        throw PartitionViolation("index " + std::to_string(index) + " labeled twice (by " +
                                 to_string(id) + ")");
      }
      slot = bucket;
      source_[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(s);
    }
  }
  const auto hole = std::find(partition_.begin(), partition_.end(), Bucket::Unassigned);
  if (hole != partition_.end()) {
    throw PartitionViolation("index " + std::to_string(hole - partition_.begin()) +
                             " is not covered by any class");
  }
}

std::size_t CyclotomicSystem::slot(const ClassId& id) const {
  const auto m = static_cast<std::size_t>(constants_.m);
  const auto n = static_cast<std::size_t>(constants_.n);
  const auto i = static_cast<std::size_t>(id.i);
  const auto j = static_cast<std::size_t>(id.j);
  const auto h = static_cast<std::size_t>(id.h);
  std::size_t out = 0;
  switch (id.shape) {
    case Shape::PQ: out = ((i - 1) * n + (j - 1)) * 2 + h; break;
    case Shape::TwoPQ: out = 2 * m * n + ((i - 1) * n + (j - 1)) * 2 + h; break;
    case Shape::P: out = 4 * m * n + (i - 1) * 2 + h; break;
    case Shape::TwoP: out = 4 * m * n + 2 * m + (i - 1) * 2 + h; break;
    case Shape::Q: out = 4 * m * n + 4 * m + (j - 1) * 2 + h; break;
    case Shape::TwoQ: out = 4 * m * n + 4 * m + 2 * n + (j - 1) * 2 + h; break;
  }
  if (out >= ids_.size() || !(ids_[out] == id)) {
    throw InvalidParams("unknown class " + to_string(id));
  }
  return out;
}

const std::vector<Int>& CyclotomicSystem::cls(const ClassId& id) const { return classes_[slot(id)]; }

bool CyclotomicSystem::contains(const ClassId& id, Int residue) const {
  const auto& set = cls(id);
  return std::binary_search(set.begin(), set.end(), residue);
}

std::vector<Int> CyclotomicSystem::h_set(const ClassId& id) const {
  const Int factor = class_cofactor(constants_, id);
  std::vector<Int> out;
  out.reserve(cls(id).size());
  for (Int x : cls(id)) out.push_back(x * factor);
  return out;
}

const ClassId& CyclotomicSystem::source_class(Int index) const {
  const Bucket b = partition_.at(static_cast<std::size_t>(index));
  if (b == Bucket::Zero || b == Bucket::Middle) {
    throw InvalidParams("index " + std::to_string(index) + " is a singleton, not a class member");
  }
  return ids_[source_[static_cast<std::size_t>(index)]];
}

std::vector<Int> CyclotomicSystem::bucket_members(Bucket bucket) const {
  std::vector<Int> out;
  for (std::size_t k = 0; k < partition_.size(); ++k) {
    if (partition_[k] == bucket) out.push_back(static_cast<Int>(k));
  }
  return out;
}

Bucket CyclotomicSystem::classify_index(Int index) const {
  const auto& sc = constants_;
  const Int period = sc.period();
  index = mod_floor(index, period);
  if (index == 0) return Bucket::Zero;
  if (index == sc.half_period()) return Bucket::Middle;

  const bool even = index % 2 == 0;
  const Int u = even ? index / 2 : index;
  const int a = std::min(valuation(u, sc.p), sc.m);
  const int b = std::min(valuation(u, sc.q), sc.n);
  const int i = sc.m - a;
  const int j = sc.n - b;
  ClassId id;
  if (i > 0 && j > 0) {
    id = {even ? Shape::PQ : Shape::TwoPQ, i, j, 0};
  } else if (i > 0) {
    id = {even ? Shape::P : Shape::TwoP, i, 0, 0};
  } else if (j > 0) {
    id = {even ? Shape::Q : Shape::TwoQ, 0, j, 0};
  } else {
    return Bucket::Unassigned;
  }
  const Int residue = mod_floor(u / class_cofactor(sc, id), class_modulus(sc, id));
  for (int h = 0; h < 2; ++h) {
    id.h = h;
    if (contains(id, residue)) {
      if (even) return h == 0 ? Bucket::C : Bucket::D;
      return h == 0 ? Bucket::A : Bucket::B;
    }
  }
  return Bucket::Unassigned;
}

int residue_side_of_2(const CyclotomicSystem& system, Shape shape, int i, int j) {
  if (is_doubled(shape)) {
    throw NotCoprime("2 is not a unit modulo a doubled modulus");
  }
  ClassId id{shape, i, j, 0};
  const Int residue = 2 % class_modulus(system.constants(), id);
  if (system.contains(id, residue)) return 0;
  id.h = 1;
  if (system.contains(id, residue)) return 1;
  throw InvalidParams("2 is in neither class of " + to_string(shape));
}

namespace {

void compare_sets(LemmaReport& report, const std::string& lemma, const std::string& where,
                  const std::vector<Int>& expected, std::vector<Int> actual) {
  ++report.identities_checked;
  actual = sorted_unique(std::move(actual));
  if (expected == actual) return;
  std::vector<Int> diff;
  std::set_symmetric_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                                std::back_inserter(diff));
  report.violations.push_back({lemma, where, diff.empty() ? -1 : diff.front()});
}

// {x + base*y + delta : x in low, y in Z_count}, delta = modulus/2 when the
// doubled flag is set and x + base*y is even.
std::vector<Int> lift(const std::vector<Int>& low, Int base, Int count, bool doubled,
                      Int odd_modulus) {
  std::vector<Int> out;
  out.reserve(low.size() * static_cast<std::size_t>(count));
  for (Int x : low) {
    for (Int y = 0; y < count; ++y) {
      Int v = x + base * y;
      if (doubled && v % 2 == 0) v += odd_modulus;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Int> units(Int modulus) {
  std::vector<Int> out;
  for (Int x = 1; x < modulus; ++x) {
    if (gcd(x, modulus) == 1) out.push_back(x);
  }
  return out;
}

}  // namespace

LemmaReport check_structural_lemmas(const CyclotomicSystem& system) {
  const auto& sc = system.constants();
  LemmaReport report;

  // Class sizes, disjointness and cover of the units for every shape.
  for (const ClassId& id : system.class_ids()) {
    if (id.h != 0) continue;
    ClassId other = id;
    other.h = 1;
    const auto& d0 = system.cls(id);
    const auto& d1 = system.cls(other);
    const Int modulus = class_modulus(sc, id);
    const std::string where = to_string(id.shape) + " modulus " + std::to_string(modulus);
    ++report.identities_checked;
    if (static_cast<Int>(d0.size()) * 2 != euler_phi(modulus) || d0.size() != d1.size()) {
      report.violations.push_back({"class size", where, static_cast<Int>(d0.size())});
    }
    std::vector<Int> joined = d0;
    joined.insert(joined.end(), d1.begin(), d1.end());
    compare_sets(report, "units cover", where, units(modulus), joined);
    if (joined.size() != d0.size() + d1.size() || sorted_unique(joined).size() != joined.size()) {
      report.violations.push_back({"disjoint classes", where, 0});
    }
  }

  for (int h = 0; h < 2; ++h) {
    // Prime powers: D_h^(r^i) = {x + r*y}, and the doubled variant with the
    // parity correction.
    for (PrimeSide side : {PrimeSide::P, PrimeSide::Q}) {
      const bool is_p = side == PrimeSide::P;
      const Int prime = is_p ? sc.p : sc.q;
      const int top = is_p ? sc.m : sc.n;
      const auto base = build_class_prime_power(sc, side, 1, false, h);
      const int side_of_2_base = system.contains(
          is_p ? ClassId{Shape::P, 1, 0, 0} : ClassId{Shape::Q, 0, 1, 0}, 2 % prime) ? 0 : 1;
      for (int e = 1; e <= top; ++e) {
        const Int pe = is_p ? sc.p_pow(e) : sc.q_pow(e);
        const std::string where = (is_p ? "p^" : "q^") + std::to_string(e) + " h=" + std::to_string(h);
        const ClassId odd = is_p ? ClassId{Shape::P, e, 0, h} : ClassId{Shape::Q, 0, e, h};
        const ClassId dbl = is_p ? ClassId{Shape::TwoP, e, 0, h} : ClassId{Shape::TwoQ, 0, e, h};
        compare_sets(report, "prime-power digit expansion", where, system.cls(odd),
                     lift(base, prime, pe / prime, false, pe));
        compare_sets(report, "doubled prime-power digit expansion", where, system.cls(dbl),
                     lift(base, prime, pe / prime, true, pe));
        // Reduction of the doubled class lands on the odd one.
        std::vector<Int> reduced;
        for (Int x : system.cls(dbl)) reduced.push_back(x % pe);
        compare_sets(report, "doubled-to-odd reduction", where, system.cls(odd), reduced);
        // The side of 2 is the same along the tower.
        if (h == 0) {
          ++report.identities_checked;
          const int side_here = system.contains({odd.shape, odd.i, odd.j, 0}, 2) ? 0 : 1;
          if (side_here != side_of_2_base) {
            report.violations.push_back({"side of 2 along prime powers", where, 2});
          }
        }
      }
    }

    // p^i q^j classes from the pq class.
    const ClassId base_id{Shape::PQ, 1, 1, h};
    const auto& base = system.cls(base_id);
    const Int pq = sc.p * sc.q;
    for (int i = 1; i <= sc.m; ++i) {
      for (int j = 1; j <= sc.n; ++j) {
        const Int modulus = sc.p_pow(i) * sc.q_pow(j);
        const std::string where = "p^" + std::to_string(i) + "q^" + std::to_string(j) +
                                  " h=" + std::to_string(h);
        const ClassId odd{Shape::PQ, i, j, h};
        const ClassId dbl{Shape::TwoPQ, i, j, h};
        compare_sets(report, "pq digit expansion", where, system.cls(odd),
                     lift(base, pq, modulus / pq, false, modulus));
        compare_sets(report, "doubled pq digit expansion", where, system.cls(dbl),
                     lift(base, pq, modulus / pq, true, modulus));
        std::vector<Int> reduced;
        for (Int x : system.cls(dbl)) reduced.push_back(x % modulus);
        compare_sets(report, "doubled-to-odd reduction", where, system.cls(odd), reduced);
      }
    }
  }
  return report;
}

}  // namespace cycloseq
