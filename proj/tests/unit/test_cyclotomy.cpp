#include <doctest.h>

#include <algorithm>

#include "cycloseq/cyclotomy.hpp"
#include "cycloseq/errors.hpp"
#include "oracles.hpp"

using namespace cycloseq;

namespace {

struct Params {
  Int p, q;
  int m, n;
};

const Params kGrid[] = {
    {3, 5, 1, 1}, {3, 5, 2, 1}, {3, 5, 1, 2}, {3, 7, 1, 1}, {3, 7, 2, 1}, {3, 7, 1, 2},
    {5, 7, 1, 1}, {5, 7, 2, 1}, {5, 7, 1, 2}, {3, 11, 1, 1}, {3, 11, 2, 1}, {3, 11, 1, 2},
    {7, 3, 2, 2}, {17, 5, 1, 1}, {5, 17, 1, 1}, {7, 17, 1, 1}, {11, 13, 1, 1},
};

CyclotomicSystem system_for(const Params& pr) {
  return CyclotomicSystem(build_system_constants(pr.p, pr.q, pr.m, pr.n));
}

}  // namespace

TEST_CASE("worked example (3,5,1,1) bucket sets") {
  const auto sys = system_for({3, 5, 1, 1});
  CHECK(sys.bucket_members(Bucket::A) == std::vector<Int>{1, 3, 5, 11, 19, 27, 29});
  CHECK(sys.bucket_members(Bucket::B) == std::vector<Int>{7, 9, 13, 17, 21, 23, 25});
  CHECK(sys.bucket_members(Bucket::C) == std::vector<Int>{2, 6, 8, 10, 22, 24, 28});
  CHECK(sys.bucket_members(Bucket::D) == std::vector<Int>{4, 12, 14, 16, 18, 20, 26});
}

TEST_CASE("worked example (3,7,1,1) bucket sets") {
  const auto sys = system_for({3, 7, 1, 1});
  CHECK(sys.bucket_members(Bucket::A) == std::vector<Int>{1, 3, 7, 11, 23, 25, 27, 29, 33, 37});
  CHECK(sys.bucket_members(Bucket::B) == std::vector<Int>{5, 9, 13, 15, 17, 19, 31, 35, 39, 41});
  CHECK(sys.bucket_members(Bucket::C) == std::vector<Int>{2, 4, 6, 8, 12, 14, 16, 22, 24, 32});
  CHECK(sys.bucket_members(Bucket::D) == std::vector<Int>{10, 18, 20, 26, 28, 30, 34, 36, 38, 40});
}

TEST_CASE("classes equal the quadratic-character description") {
  for (const auto& pr : kGrid) {
    const auto sys = system_for(pr);
    for (const ClassId& id : sys.class_ids()) {
      INFO(to_string(id), " for p=", pr.p, " q=", pr.q);
      CHECK(sys.cls(id) == oracle::class_by_characters(sys.constants(), id));
      CHECK(static_cast<Int>(sys.cls(id).size()) == euler_phi(class_modulus(sys.constants(), id)) / 2);
    }
  }
}

TEST_CASE("partition matches the character oracle and the per-index route") {
  for (const auto& pr : kGrid) {
    const auto sys = system_for(pr);
    const auto part = sys.partition();
    REQUIRE(static_cast<Int>(part.size()) == sys.period());
    std::array<Int, 4> sizes{};
    for (Int t = 0; t < sys.period(); ++t) {
      const Bucket want = oracle::bucket_by_characters(sys.constants(), t);
      CHECK(part[static_cast<std::size_t>(t)] == want);
      CHECK(sys.classify_index(t) == want);
      if (want != Bucket::Zero && want != Bucket::Middle) {
        ++sizes[static_cast<std::size_t>(want) - 2];
        const auto h = sys.h_set(sys.source_class(t));
        const Int local = is_doubled(sys.source_class(t).shape) ? t : t / 2;
        CHECK(std::binary_search(h.begin(), h.end(), local));
      }
    }
    const Int half_minus_one = (sys.half_period() - 1) / 2;
    for (Int s : sizes) CHECK(s == half_minus_one);
  }
}

TEST_CASE("structural lemmas hold on the grid") {
  for (const auto& pr : kGrid) {
    const auto sys = system_for(pr);
    const auto rep = check_structural_lemmas(sys);
    INFO("p=", pr.p, " q=", pr.q, " m=", pr.m, " n=", pr.n);
    CHECK(rep.ok());
    CHECK(rep.identities_checked > 0);
  }
}

TEST_CASE("side of 2 follows p mod 8 along prime powers and q mod 8 for pq") {
  for (const auto& pr : kGrid) {
    const auto sys = system_for(pr);
    const int want_p = oracle::is_square_mod(2, pr.p) ? 0 : 1;
    const int want_q = oracle::is_square_mod(2, pr.q) ? 0 : 1;
    for (int i = 1; i <= pr.m; ++i) CHECK(residue_side_of_2(sys, Shape::P, i, 0) == want_p);
    for (int j = 1; j <= pr.n; ++j) CHECK(residue_side_of_2(sys, Shape::Q, 0, j) == want_q);
    for (int i = 1; i <= pr.m; ++i) {
      for (int j = 1; j <= pr.n; ++j) CHECK(residue_side_of_2(sys, Shape::PQ, i, j) == want_q);
    }
  }
}

TEST_CASE("h sets carry the cofactor") {
  const auto sys = system_for({3, 5, 2, 1});
  const ClassId id{Shape::TwoP, 1, 0, 1};
  CHECK(class_cofactor(sys.constants(), id) == 3 * 5);
  std::vector<Int> want;
  for (Int x : sys.cls(id)) want.push_back(x * 15);
  std::sort(want.begin(), want.end());
  CHECK(sys.h_set(id) == want);
  CHECK(sys.contains(id, sys.cls(id).front()));
  CHECK_FALSE(sys.contains(id, 3));
}

TEST_CASE("class builders reject bad arguments") {
  const auto sc = build_system_constants(3, 5, 1, 1);
  CHECK_THROWS_AS(build_class_pq(sc, 1, 1, 2), InvalidParams);
  CHECK_THROWS_AS(build_class_pq(sc, 2, 1, 0), InvalidParams);
  CHECK_THROWS_AS(build_class_prime_power(sc, PrimeSide::Q, 0, false, 0), InvalidParams);
  const CyclotomicSystem sys(sc);
  CHECK_THROWS_AS(residue_side_of_2(sys, Shape::TwoPQ, 1, 1), NotCoprime);
}
