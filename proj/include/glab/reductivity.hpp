#pragma once

#include "glab/galgebra.hpp"

namespace glab {

/// A cyclic module with trivial group action: Z for modulus 0, Z/n else.
struct CyclicTarget {
  Int modulus = 0;
  std::string generator_label = "b";
};

/// Equivariant surjection from a module onto a cyclic target, given by its
/// coefficient row.
struct CyclicSurjection {
  GModule source;
  CyclicTarget target;
  ZVec row;
};

/// Empty when phi is surjective and equivariant for the chosen subgroup
/// (coefficients vanish on every weight space the subgroup's torus part
/// sees, and compose to zero with the subgroup's unipotent operators).
std::vector<std::string> cyclic_surjection_errors(const CyclicSurjection& phi, SubgroupTag subgroup);

struct PowerReductivityResult {
  long witness_degree = -1;  // minimal d with a surjection on invariants; -1 = inconclusive
  ZVec witness_invariant;    // invariant of S^d(source) hitting a generator of S^d(target)
  /// per degree 1..d_max: the cokernel order of (S^d M)^H -> S^d L
  /// (1 = surjective, 0 = cokernel is all of Z)
  std::vector<Int> cokernel_order;
};

/// Searches d = 1..d_max for the first degree where the invariants of the
/// d-th symmetric power surject onto the d-th power of the target.
PowerReductivityResult check_power_reductivity(const CyclicSurjection& phi, long d_max,
                                               SubgroupTag subgroup = SubgroupTag::FullG);

/// Per-degree homomorphism between truncated algebras.
struct AlgebraMap {
  GradedGAlgebra source, target;
  std::vector<ZMat> matrix;  // per degree 0..truncation

  long truncation() const { return std::min(source.truncation, target.truncation); }
  /// Violations of multiplicativity / unit preservation within truncation.
  std::vector<std::string> algebra_map_errors() const;
};

AlgebraMap hull_inclusion_map(const HullAlgebra& h);

struct PowerTestElement {
  long degree = 0;
  ZVec element;  // in target degree coordinates
  std::string label;
};

/// Graded basis vectors up to max_degree plus a seeded sample of pairwise
/// sums. Power-surjectivity is not linear, so checking a spanning set is a
/// heuristic; callers can extend the set.
std::vector<PowerTestElement> default_test_set(const GradedGAlgebra& target, long max_degree,
                                               unsigned seed, long pair_cap_per_degree = 24);

struct SearchBounds {
  long max_test_degree = 4;  // certify elements of degree <= this
  long exponent_bound = 8;   // s_max
};

struct PowerWitness {
  PowerTestElement element;
  long exponent = -1;  // minimal exponent found; -1 = none within bounds
};

struct PowerSurjectivityVerdict {
  bool proven_within_bounds = false;
  std::vector<PowerWitness> witnesses;
  SearchBounds bounds;

  long max_exponent() const {
    long m = 0;
    for (const auto& w : witnesses) m = std::max(m, w.exponent);
    return m;
  }
};

/// For each test element, the minimal s with element^s in the image of f,
/// searching by increasing total degree then exponent. Powers are taken
/// inside the target's truncation: elements of degree d are searched up to
/// exponent floor(truncation / d).
PowerSurjectivityVerdict power_surjectivity(const AlgebraMap& f,
                                            const std::vector<PowerTestElement>& test_set,
                                            const SearchBounds& bounds);

/// Exponents restricted to powers of p.
PowerSurjectivityVerdict p_power_surjectivity(const AlgebraMap& f, const Int& p,
                                              const std::vector<PowerTestElement>& test_set,
                                              const SearchBounds& bounds);

/// Combined certificate: if t * target lies in the image degreewise and
/// the reduction mod every prime p | t is p-power-surjective within
/// bounds, the map is universally power-surjective within bounds.
struct UniversalityCertificate {
  Int t = 0;  // 0 when some cokernel has free rank (no certificate)
  std::vector<Int> primes;
  std::vector<PowerSurjectivityVerdict> per_prime;
  bool universal_within_bounds = false;
};
UniversalityCertificate universal_power_surjectivity(const AlgebraMap& f, const SearchBounds& bounds,
                                                     unsigned seed = 1);

/// Reduce an algebra map modulo a prime: both sides base-changed.
AlgebraMap reduce_map_mod(const AlgebraMap& f, const Int& p);

/// Lifting of invariants along A^G -> (A/J)^G: for every invariant basis
/// vector of the quotient in degrees <= bounds, the minimal exponent whose
/// power lifts to an invariant of A.
struct LiftWitness {
  long degree = 0;
  ZVec element;  // quotient coordinates
  std::string label;
  long exponent = -1;
};
struct LiftVerdict {
  bool proven_within_bounds = false;
  std::vector<LiftWitness> witnesses;
  SearchBounds bounds;
};
LiftVerdict lift_invariants(const GradedGAlgebra& a, const std::vector<std::pair<long, ZVec>>& ideal_gens,
                            const SearchBounds& bounds);

/// Monic integral relations: for every quotient invariant b of degree d, a
/// monic polynomial x^s + c_1 x^(s-1) + ... + c_s vanishing on b with each
/// c_i in the image of the degree-(d i) invariants of A.
struct IntegralityWitness {
  long degree = 0;
  ZVec element;
  std::string label;
  long relation_degree = -1;                     // s; -1 = none within bounds
  std::vector<std::pair<long, ZVec>> coefficients;  // (i, invariant of A in degree d*i)
};
struct IntegralityVerdict {
  bool proven_within_bounds = false;
  std::vector<IntegralityWitness> witnesses;
  SearchBounds bounds;
};
IntegralityVerdict int_property_witness(const GradedGAlgebra& a,
                                        const std::vector<std::pair<long, ZVec>>& ideal_gens,
                                        const SearchBounds& bounds);

/// The comparison map gr A -> gr(A/pA) with its power-surjectivity verdict
/// (p-power exponents).
struct GrModPComparison {
  AlgebraMap map;
  PowerSurjectivityVerdict verdict;
};
GrModPComparison gr_mod_p_comparison(const GradedGAlgebra& a, const Int& p, const SearchBounds& bounds,
                                     unsigned seed = 1);

}  // namespace glab
