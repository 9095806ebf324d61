#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cycloseq/numtheory.hpp"

namespace cycloseq {

/// Modulus shape of a cyclotomic class: p^i q^j, 2 p^i q^j, p^i, 2 p^i,
/// q^j or 2 q^j.
enum class Shape : std::uint8_t { PQ, TwoPQ, P, TwoP, Q, TwoQ };

enum class PrimeSide : std::uint8_t { P, Q };

/// Identifies D_h for one modulus shape. `i` is the exponent of p and `j` of
/// q; the exponent that does not occur in the shape is 0.
struct ClassId {
  Shape shape = Shape::PQ;
  int i = 0;
  int j = 0;
  int h = 0;

  friend bool operator==(const ClassId&, const ClassId&) = default;
};

bool is_doubled(Shape shape);
std::string to_string(Shape shape);
std::string to_string(const ClassId& id);

Int class_modulus(const SystemConstants& sc, const ClassId& id);
/// Scale factor that carries the class into Z_{2 p^m q^n}:
/// p^{m-i} q^{n-j}, p^{m-i} q^n or p^m q^{n-j}.
Int class_cofactor(const SystemConstants& sc, const ClassId& id);

/// {g^{2t} y^k mod p^i q^j} times g^h, sorted.
std::vector<Int> build_class_pq(const SystemConstants& sc, int i, int j, int h);
/// Same generators reduced mod 2 p^i q^j.
std::vector<Int> build_class_2pq(const SystemConstants& sc, int i, int j, int h);
/// The coset <g^2> g^h modulo r^e (or 2 r^e when doubled), r = p or q.
std::vector<Int> build_class_prime_power(const SystemConstants& sc, PrimeSide side, int exponent,
                                         bool doubled, int h);
std::vector<Int> build_class(const SystemConstants& sc, const ClassId& id);

/// Symbol bucket of an index of Z_{2 p^m q^n}: A/B collect the H_0/H_1 sets of
/// the doubled shapes, C/D the 2 H_0 / 2 H_1 sets of the odd shapes, Zero and
/// Middle are the singletons {0} and {p^m q^n}.
enum class Bucket : std::uint8_t { Zero, Middle, A, B, C, D, Unassigned };

std::string to_string(Bucket bucket);

struct LemmaViolation {
  std::string lemma;
  std::string where;
  Int witness = 0;
};

struct LemmaReport {
  std::size_t identities_checked = 0;
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// All classes for one parameter set together with the partition of
/// Z_{2 p^m q^n}. Immutable after construction.
class CyclotomicSystem {
 public:
  /// Throws PartitionViolation if the scaled classes fail to tile the ring.
  explicit CyclotomicSystem(SystemConstants constants);

  const SystemConstants& constants() const { return constants_; }
  Int period() const { return constants_.period(); }
  Int half_period() const { return constants_.half_period(); }

  std::span<const ClassId> class_ids() const { return ids_; }
  const std::vector<Int>& cls(const ClassId& id) const;
  bool contains(const ClassId& id, Int residue) const;

  /// cofactor * D_h, sorted. For odd shapes this is H_h^{(p^i q^j)} inside
  /// Z_{p^m q^n}; the partition uses twice these values.
  std::vector<Int> h_set(const ClassId& id) const;

  /// Bucket of every index 0 .. 2 p^m q^n - 1.
  std::span<const Bucket> partition() const { return partition_; }
  /// Class whose scaled image contains `index`; only for A/B/C/D indices.
  const ClassId& source_class(Int index) const;
  std::vector<Int> bucket_members(Bucket bucket) const;

  /// Classifies one index from scratch: factor out the cofactor, reduce into
  /// the matching modulus and look the residue up in the class sets. Does not
  /// consult the partition array.
  Bucket classify_index(Int index) const;

 private:
  std::size_t slot(const ClassId& id) const;

  SystemConstants constants_;
  std::vector<ClassId> ids_;
  std::vector<std::vector<Int>> classes_;
  std::vector<Bucket> partition_;
  std::vector<std::uint16_t> source_;
};

/// h with 2 in D_h for an odd modulus shape (found by set lookup).
/// Throws NotCoprime for doubled shapes.
int residue_side_of_2(const CyclotomicSystem& system, Shape shape, int i, int j);

/// Exhaustive set comparisons: the digit-expansion descriptions of the
/// prime-power and p^i q^j classes (with the parity correction for doubled
/// moduli), invariance of the side of 2 along prime powers, class sizes,
/// disjointness and cover of the units, and reduction from doubled to odd
/// moduli.
LemmaReport check_structural_lemmas(const CyclotomicSystem& system);

}  // namespace cycloseq
