#pragma once

#include "glab/root_data.hpp"
#include "glab/snf.hpp"

#include <map>
#include <string>
#include <vector>

namespace glab {

enum class SubgroupTag { FullG, Torus, UPlus, UMinus, BorelPlus, BorelMinus };

std::string to_string(SubgroupTag tag);

/// Weight-graded free module with divided-power operator action.
///
/// For each simple root alpha the module stores explicit matrices for the
/// divided-power levels E_alpha^(n), F_alpha^(n), 1 <= n < nilpotency[alpha];
/// levels at or beyond the bound act as zero. Levels are independent data:
/// over Z/p the level-p operator is not determined by level 1.
///
/// The operator data is the Kostant-form shadow of the group action. The
/// shipped constructors are honest representations; user-supplied modules
/// are checked against the identities in validate(), which is necessary
/// but not sufficient for integrability in pathological cases.
struct GModule {
  RootDatum datum;
  Ring ring;
  index_t rank = 0;
  std::vector<Weight> weights;                  // one per basis index
  std::vector<std::vector<ZMat>> raising;       // [alpha][n-1] = E_alpha^(n)
  std::vector<std::vector<ZMat>> lowering;      // [alpha][n-1] = F_alpha^(n)
  std::vector<long> nilpotency;                 // per alpha; ops vanish at >= bound
  std::vector<std::string> basis_labels;        // optional, for reports

  long n_alpha() const { return datum.rank(); }
  long stored_levels(long alpha) const { return nilpotency[alpha] - 1; }

  /// E_alpha^(n); zero matrix when n >= nilpotency bound. n >= 1.
  ZMat raising_op(long alpha, long n) const;
  ZMat lowering_op(long alpha, long n) const;
  const ZMat* raising_ptr(long alpha, long n) const;
  const ZMat* lowering_ptr(long alpha, long n) const;

  std::map<Weight, std::vector<index_t>> weight_spaces() const;
  std::string label(index_t i) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the four module identities exhaustively up to the nilpotency
/// bounds: weight shifts, divided-power composition, level-1 sl2
/// commutation, and vanishing beyond the bound.
ValidationReport validate(const GModule& m);

/// Equivariant map packaged with its endpoints.
struct GMap {
  GModule source, target;
  ZMat matrix;
};

/// Empty when the matrix commutes with every stored operator and preserves
/// weights over the common ring; otherwise one line per violated identity.
std::vector<std::string> equivariance_errors(const GModule& source, const GModule& target,
                                             const ZMat& matrix);
inline bool is_equivariant(const GMap& f) {
  return equivariance_errors(f.source, f.target, f.matrix).empty();
}

// Constructors ---------------------------------------------------------

GModule trivial_rep(const RootDatum& d, const Ring& ring, index_t rank);
GModule zero_module(const RootDatum& d, const Ring& ring);

/// Rank 2, weights {+1,-1}, E x2 = x1, F x1 = x2. A1 only.
GModule standard_rep(const RootDatum& d, const Ring& ring);

/// sl2 with basis (X, H, Y), weights (2, 0, -2), E H = -2X, E Y = H,
/// F X = -H, F H = 2Y, and the level-2 divided powers E'' Y = -X,
/// F'' X = -Y.
GModule adjoint_sl2(const Ring& ring);

/// Coordinate functions (a, b, c, d) of a 2x2 matrix under conjugation:
/// the dual of End(V) as a module, realized as dual(V) tensor V with the
/// basis relabeled. Weights (0, -2, 2, 0).
GModule conjugation_dual(const Ring& ring);

// Functorial constructions ---------------------------------------------

/// Weights negated; level-n operators act by (-1)^n times the transpose
/// of the same-name operator. This is the antipode convention; it is the
/// unique sign choice under which raising operators still raise weights
/// and validate() passes, and it makes dual(dual(M)) equal to M on the
/// nose.
GModule dual(const GModule& m);

/// Basis e_i ⊗ f_j at index i * rank(n) + j; weights add; divided powers
/// act by the comultiplication rule E^(n) = sum E^(i) ⊗ E^(j).
GModule tensor(const GModule& m, const GModule& n);

GModule direct_sum(const GModule& m, const GModule& n);

/// Monomial basis of degree d (non-decreasing index tuples, lexicographic,
/// so index 0 is the pure power of basis vector 0). Operators are induced
/// from the tensor power through the symmetrization quotient, exactly.
GModule sym_power(const GModule& m, long d);

/// The monomial index tuples of sym_power(m, d), in basis order.
std::vector<std::vector<int>> sym_monomials(index_t rank, long d);

// Maps ------------------------------------------------------------------

GMap tensor_map(const GMap& f, const GMap& g);
GMap sym_power_map(const GMap& f, long d);

// Invariants and Hom ----------------------------------------------------

/// Saturated weight-homogeneous sublattice (over Z; canonical generating
/// set over Z/n) with one weight per column.
struct InvariantLattice {
  ZMat basis;                       // columns in ambient coordinates
  std::vector<Weight> col_weights;  // per column

  index_t count() const { return basis.cols(); }
  /// Columns of the given weight, in order.
  ZMat of_weight(const Weight& w) const;
};

/// Vectors killed by the chosen subgroup: FullG = weight 0 and killed by
/// all E and F levels; UPlus = killed by all E levels; Torus = weight 0;
/// Borel variants intersect the torus and unipotent conditions.
InvariantLattice invariants(const GModule& m, SubgroupTag tag);

/// The FullG invariant lattice as a trivial module with its inclusion.
GMap invariants_inclusion(const GModule& m);

/// Basis of the lattice of equivariant maps m -> n, realized through the
/// full invariants of dual(m) ⊗ n.
std::vector<ZMat> hom_g(const GModule& m, const GModule& n);

/// Weight multiset with multiplicities.
std::map<Weight, long> character(const GModule& m);

}  // namespace glab
