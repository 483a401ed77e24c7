#pragma once

#include "glab/induction.hpp"

namespace glab {

/// One graded piece of the height filtration, as a module of its own with
/// the maps identifying it as a subquotient: lift picks a basis of the
/// level modulo the previous one, projection is a retraction defined on
/// the level's span.
struct GrosshansPiece {
  long height = 0;
  GModule piece;
  ZMat lift;        // ambient_rank x rank(piece)
  ZMat projection;  // rank(piece) x ambient_rank
};

struct GrosshansFiltration {
  GModule base;
  /// cumulative levels at each occurring height >= 0 (ascending)
  std::vector<std::pair<long, InvariantLattice>> levels;
  std::vector<GrosshansPiece> pieces;  // nonzero pieces, ascending height
  GModule total;                       // direct sum of the pieces
  std::vector<index_t> offsets;        // column offset of each piece in total

  long piece_index_of_height(long height) const;  // -1 if absent
};

/// The largest sub-lattice stable under all operators whose weights all
/// have height <= i; computed by downward closure from the full weight
/// spaces of height <= i. Saturated over Z; prime moduli supported.
InvariantLattice filtration_level(const GModule& m, long i);

GrosshansFiltration graded(const GModule& m);

struct HullSummand {
  Weight lambda;
  long height = 0;
  CostandardModule nabla;
  ZMat w_basis;   // ambient columns of (M^{U+})_lambda
  GModule block;  // tensor(nabla.underlying, trivial(rank w_basis))
};

/// Direct sum over the dominant weights of M^{U+} of the costandard module
/// tensored with the corresponding weight space.
struct HullModule {
  std::vector<HullSummand> summands;
  GModule total;
  std::vector<index_t> offsets;
};

HullModule hull(const GModule& m);

/// The graded module, its hull, and the canonical degree-preserving
/// embedding between their totals, normalized to the identity on each
/// highest-weight line. Injectivity is a theorem; tests assert it.
struct HullEmbedding {
  GrosshansFiltration gr;
  HullModule h;
  GMap map;  // gr.total -> h.total
};

HullEmbedding hull_embedding(const GModule& m);
/// Variant reusing an already computed filtration of m.
HullEmbedding hull_embedding(const GModule& m, GrosshansFiltration gr);

struct GoodFiltrationVerdict {
  bool good = false;
  std::vector<Int> cokernel_factors;  // certificate (Z: full list; Z/p: empty iff good)
};

/// True iff the hull embedding is an isomorphism over the ring.
GoodFiltrationVerdict has_good_filtration(const GModule& m);

/// Shared helper: T with T * s = identity over the ring, when s has a
/// left inverse (columns a basis of a saturated sublattice / independent
/// columns over a field).
std::optional<ZMat> left_inverse(const ZMat& s, const Ring& ring);

}  // namespace glab
