#pragma once

#include "glab/grosshans.hpp"

#include <functional>

namespace glab {

/// Degree-truncated commutative algebra with equivariant multiplication.
/// degree[d] is the degree-d module for 0 <= d <= truncation; mult(d, e)
/// maps tensor(degree[d], degree[e]) onto coordinates of degree[d+e], with
/// tensor index i * rank(e) + j. Every theorem-level statement about such
/// an algebra is checked within the truncation only.
struct GradedGAlgebra {
  RootDatum datum;
  Ring ring;
  long truncation = 0;
  std::vector<GModule> degree;
  std::vector<ZMat> mult_table;  // index d * (truncation + 1) + e, d + e <= truncation
  /// Grosshans height per basis vector, per degree; empty when the algebra
  /// is not height-bigraded (only gr algebras carry it).
  std::vector<std::vector<long>> heights;

  const ZMat& mult(long d, long e) const { return mult_table[d * (truncation + 1) + e]; }
  ZMat& mult(long d, long e) { return mult_table[d * (truncation + 1) + e]; }

  /// Multiply homogeneous vectors of degrees d and e.
  ZVec multiply(long d, const ZVec& a, long e, const ZVec& b) const;
  /// x^k for homogeneous x of degree d; requires k*d <= truncation.
  ZVec power(long d, const ZVec& x, long k) const;

  ValidationReport check_axioms() const;
};

/// Truncated symmetric algebra of a module.
GradedGAlgebra sym_algebra(const GModule& m, long truncation);

/// G-stable ideal spanned degreewise, closed under multiplication within
/// the truncation. Not saturated: an ideal like (2) must stay (2).
struct EquivariantIdeal {
  std::vector<std::pair<long, ZVec>> generators;  // (degree, vector)
  std::vector<ZMat> closure;                      // per degree 0..truncation
};

EquivariantIdeal ideal_closure(const GradedGAlgebra& a, const std::vector<std::pair<long, ZVec>>& gens);

/// Per-degree quotient by an equivariant ideal. Handles the two shapes the
/// fixtures need: saturated ideals (free quotient over the same ring) and
/// ideals meeting degree zero in (n) (base change to Z/n, with the prime
/// case allowing further generators).
struct AlgebraQuotient {
  GradedGAlgebra algebra;
  std::vector<ZMat> projection;  // per degree: a.degree[d] coords -> algebra.degree[d] coords
  std::vector<ZMat> section;     // per degree: a lift of the quotient basis back to a.degree[d]
};
AlgebraQuotient quotient(const GradedGAlgebra& a, const std::vector<std::pair<long, ZVec>>& gens);

/// Per-degree invariants plus greedy lowest-degree-first generator
/// extraction: a degree-d invariant is new exactly when it falls outside
/// the span of products of lower-degree generators.
struct InvariantSubalgebra {
  std::vector<InvariantLattice> per_degree;       // 0..truncation
  std::vector<std::pair<long, ZVec>> generators;  // (degree, ambient vector)
  std::vector<ZMat> generated_span;               // per degree, inside the invariants
  std::vector<std::string> generator_labels;
};
InvariantSubalgebra invariant_subalgebra(const GradedGAlgebra& a, SubgroupTag h);

/// The height-associated graded algebra: per polynomial degree, the direct
/// sum of the Grosshans pieces, multiplication induced on classes. The
/// result carries the height bigrading.
struct GrosshansGradedAlgebra {
  GradedGAlgebra algebra;
  std::vector<GrosshansFiltration> filtrations;  // per degree
};
GrosshansGradedAlgebra grosshans_graded_algebra(const GradedGAlgebra& a);

/// The hull algebra: per degree the hull of the degree module, with
/// multiplication assembled from Cartan maps on the costandard factors and
/// the invariant multiplication on the multiplicity spaces; plus the
/// degreewise embedding of the Grosshans graded algebra, an injective
/// algebra map.
struct HullAlgebra {
  GradedGAlgebra algebra;
  GrosshansGradedAlgebra gr;
  std::vector<HullEmbedding> embeddings;  // per degree
  std::vector<ZMat> embedding_matrix;     // per degree: gr_d -> hull_d
};
HullAlgebra hull_algebra(const GradedGAlgebra& a);

/// lcm over degrees <= truncation of the finite cokernel factors of the
/// hull embedding; throws TorsionBoundError if some cokernel has free rank.
struct TorsionBound {
  Int bound = 1;
  std::vector<std::vector<Int>> factors_per_degree;
};
struct TorsionBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
TorsionBound torsion_bound(const GradedGAlgebra& a);
TorsionBound torsion_bound(const HullAlgebra& h);

/// The pair S(lambda) inside S'(lambda): S'_d is the costandard module of
/// d*lambda under Cartan multiplication, S_d the degree-d part of the
/// subalgebra generated by the standard lattice in degree one.
struct SchurConePair {
  GradedGAlgebra s_prime;
  std::vector<ZMat> s_lattice;  // per degree, columns in S'_d coordinates
  Int t = 1;                    // lcm of the cokernel factors of S_d in S'_d
  std::vector<std::vector<Int>> factors_per_degree;
  /// minimal monic-relation degree over S for each degree-one basis vector
  std::vector<long> relation_degree;
};
SchurConePair schur_cone_pair(const Weight& lambda, long truncation, long exponent_bound);

/// Truncated model of the multicone: degrees in the submonoid generated by
/// the given dominant weights carry the costandard module, products are
/// Cartan maps (all surjective).
GradedGAlgebra multicone(const std::vector<long>& generators, long truncation, const Ring& ring);

/// Labels of the degree-d basis vectors (monomial expressions).
std::string basis_label(const GradedGAlgebra& a, long d, index_t i);
std::string vector_label(const GradedGAlgebra& a, long d, const ZVec& v);

}  // namespace glab
