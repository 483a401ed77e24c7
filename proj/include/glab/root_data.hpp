#pragma once

#include "glab/arith.hpp"

#include <string>
#include <vector>

namespace glab {

/// Weight of the maximal torus, stored in the fundamental-weight basis.
/// The coordinates are then exactly the pairings with the simple coroots,
/// so dominance is coordinatewise nonnegativity.
struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}

  long rank() const { return static_cast<long>(coords.size()); }
  bool is_zero() const {
    for (long c : coords)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return coords < o.coords; }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (long& c : r.coords) c = -c;
    return r;
  }
  Weight operator*(long k) const {
    Weight r = *this;
    for (long& c : r.coords) c *= k;
    return r;
  }
  /// Max-norm in the fundamental-weight basis; stands in for a
  /// Weyl-invariant length when bounding weight spreads.
  long max_norm() const {
    long m = 0;
    for (long c : coords) m = std::max(m, std::abs(c));
    return m;
  }
};

/// Rank-1 convenience: the A1 weight m (m times the fundamental weight).
inline Weight weight1(long m) { return Weight({m}); }

/// Root datum for a split simple group, type A fully constructed. The
/// datum is a plain value; other types can be supplied by hand. Convention:
/// the standard Borel has the negative roots, its opposite the positive
/// ones; raising operators move weights up by positive roots.
struct RootDatum {
  std::string type_label;  // e.g. "A1", "A2"
  long rank_ = 0;
  /// positive roots, in the fundamental-weight basis
  std::vector<Weight> positive_roots;
  /// row alpha -> pairings <., alpha^vee> of each positive root as a linear
  /// functional on weight coordinates (0/1 incidence for type A)
  std::vector<std::vector<long>> positive_coroot_functionals;

  long rank() const { return rank_; }
  const Weight& simple_root(long i) const { return positive_roots[i]; }

  /// Sum of the fundamental weights.
  Weight rho() const { return Weight(std::vector<long>(rank_, 1)); }
};

/// Type A_n root datum (n = rank). A1 is fully supported by the module
/// layer; higher ranks ship the weight combinatorics.
RootDatum root_datum_a(long rank);

inline bool is_dominant(const RootDatum& d, const Weight& w) {
  (void)d;
  for (long c : w.coords)
    if (c < 0) return false;
  return true;
}

/// hgt(gamma) = sum over positive roots of <gamma, alpha^vee>. Additive.
long grosshans_height(const RootDatum& d, const Weight& w);

/// sigma_r = (p^r - 1) rho for prime p, r*rho in characteristic zero.
/// Throws on negative or composite p.
Weight steinberg_weight(const RootDatum& d, long r, const Int& p);

}  // namespace glab
