#pragma once

#include "glab/gmodule.hpp"

namespace glab {

/// Costandard module for A1: the m-th symmetric power of the standard
/// representation, with monomial basis x^m, x^(m-1)y, ..., y^m, so the
/// highest vector sits at index 0. Zero module for non-dominant weights.
struct CostandardModule {
  GModule underlying;
  Weight highest_weight;
  index_t highest_vector_index = 0;

  index_t rank() const { return underlying.rank; }
};

/// Standard module realized as the dual of the costandard one, identified
/// inside it by the unique equivariant map normalized to +1 on the top
/// line. The embedding is injective with finite cokernel.
struct StandardModule {
  GModule underlying;
  Weight highest_weight;
  GMap embedding;  // underlying -> costandard(highest_weight).underlying
};

CostandardModule costandard(const Weight& lambda, const Ring& ring);

/// Throws on non-dominant weights.
StandardModule standard_module(const Weight& lambda, const Ring& ring);

/// Projection of the costandard module onto its highest weight line; a
/// torus map only, not equivariant. Restriction to the line is the
/// identity.
struct TMap {
  ZMat matrix;  // 1 x rank row
  Weight weight;
};
TMap evaluation_map(const Weight& lambda, const Ring& ring);

/// Entrywise reduction mod n (n >= 2). For the shipped constructors this
/// agrees with constructing over Z/n directly, basis for basis.
GModule base_change(const GModule& m, const Int& n);

/// The canonical map Delta_lambda ⊗ (weight-lambda part of M^{U+}) -> M
/// restricting to the identity on the lambda line, with the two
/// contract checks reported alongside.
struct UniversalWeylMap {
  GMap map;                          // tensor(Delta, trivial(w)) -> M
  index_t multiplicity = 0;          // rank of the lambda weight space used
  bool kernel_has_lower_weights = false;
  bool lambda_not_in_cokernel = false;
};
UniversalWeylMap universal_weyl_map(const Weight& lambda, const GModule& m);

/// Invariant-factor structures of Hom_G(Delta_lambda, M) and
/// Hom_{B+}(lambda, M); the two must agree.
std::pair<ModuleStructure, ModuleStructure> hom_group_comparison(const Weight& lambda,
                                                                 const GModule& m);

/// Polynomial multiplication nabla_a ⊗ nabla_b -> nabla_{a+b}; equivariant
/// and surjective over any ring (every target monomial is a product).
GMap cartan_multiply(const CostandardModule& a, const CostandardModule& b);

}  // namespace glab
