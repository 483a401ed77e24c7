#pragma once

#include "glab/matrix.hpp"

#include <optional>
#include <vector>

namespace glab {

/// Invariant-factor decomposition of an integer matrix.
///
/// left * original * right is diagonal with `factors` on the diagonal,
/// each factor is nonnegative, divides the next, zeros come last, and
/// both transforms are unimodular. `left_inv` and `right_inv` are the
/// exact inverses, maintained during the reduction.
struct SnfCertificate {
  ZMat left, left_inv;
  ZMat right, right_inv;
  std::vector<Int> factors;

  index_t rank() const {
    index_t r = 0;
    for (const Int& d : factors)
      if (d != 0) ++r;
    return r;
  }
  ZMat diagonal(index_t rows, index_t cols) const;
};

/// Smith normal form over Z with deterministic pivoting: smallest absolute
/// value, lowest row-major index on ties. Throws on a nonzero modulus.
SnfCertificate smith_normal_form(const ZMat& m, const Ring& ring = ring_z());

/// Columns generate {v : m v = 0} over the ring. Over Z the result is a
/// basis of the (saturated) kernel lattice; over Z/n it is a canonical
/// generating set of the kernel module.
ZMat kernel_basis(const ZMat& m, const Ring& ring = ring_z());

/// Some x with m x = v exactly over the ring, if one exists.
std::optional<ZVec> solve(const ZMat& m, const ZVec& v, const Ring& ring = ring_z());

/// Factorization cache for repeated solves against one matrix.
class Solver {
 public:
  Solver(ZMat m, const Ring& ring);
  std::optional<ZVec> solve(const ZVec& v) const;

 private:
  Ring ring_;
  index_t cols_ = 0;       // columns of the original matrix
  index_t lifted_cols_ = 0;
  SnfCertificate cert_;    // of the (possibly modulus-lifted) matrix
};

/// Alias for solve: a preimage certificate for "v lies in the image of m".
inline std::optional<ZVec> image_membership(const ZMat& m, const ZVec& v,
                                            const Ring& ring = ring_z()) {
  return solve(m, v, ring);
}

/// Invariant factors of coker(m) = Z^rows / im(m): the SNF diagonal padded
/// with zeros up to the row count. Surjective iff all factors are 1.
std::vector<Int> cokernel_structure(const ZMat& m);

/// Canonical column Hermite basis of the column lattice of m (over Z).
/// Echelon by rows, positive pivots, entries left of a pivot reduced.
/// Zero columns are dropped.
ZMat hermite_basis(const ZMat& m);

/// Canonical basis of the saturation of the column lattice: the smallest
/// pure sublattice containing im(m).
ZMat saturate(const ZMat& m);

/// Structure of a finitely generated module presented by generator
/// columns inside ring^ambient_rows. Over Z the torsion list is empty.
struct ModuleStructure {
  index_t free_rank = 0;
  std::vector<Int> torsion;  // nontrivial invariant factors, each > 1

  /// Minimal number of generators.
  index_t n_generators() const { return free_rank + static_cast<index_t>(torsion.size()); }
  bool operator==(const ModuleStructure&) const = default;
};

ModuleStructure module_structure(const ZMat& generators, const Ring& ring = ring_z());

/// True when every column of b lies in the span of a over the ring.
bool lattice_contains(const ZMat& a, const ZMat& b, const Ring& ring = ring_z());

bool lattice_eq(const ZMat& a, const ZMat& b, const Ring& ring = ring_z());

/// Canonical generators of im(a) + im(b).
ZMat lattice_sum(const ZMat& a, const ZMat& b, const Ring& ring = ring_z());

/// Canonical basis of im(a) ∩ im(b) over Z.
ZMat lattice_intersect(const ZMat& a, const ZMat& b);

/// Invariant factors of the quotient (ambient lattice)/(im m) restricted to
/// the saturation: the finite part of the cokernel, i.e. the nontrivial
/// factors of the SNF. Convenience for torsion bound computations.
std::vector<Int> finite_cokernel_factors(const ZMat& m);

}  // namespace glab
