#include "glab/gmodule.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace glab {

std::string to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::FullG: return "full-g";
    case SubgroupTag::Torus: return "torus";
    case SubgroupTag::UPlus: return "u-plus";
    case SubgroupTag::UMinus: return "u-minus";
    case SubgroupTag::BorelPlus: return "borel-plus";
    case SubgroupTag::BorelMinus: return "borel-minus";
  }
  return "?";
}

const ZMat* GModule::raising_ptr(long alpha, long n) const {
  if (n < 1 || n >= nilpotency[alpha]) return nullptr;
  return &raising[alpha][n - 1];
}

const ZMat* GModule::lowering_ptr(long alpha, long n) const {
  if (n < 1 || n >= nilpotency[alpha]) return nullptr;
  return &lowering[alpha][n - 1];
}

ZMat GModule::raising_op(long alpha, long n) const {
  const ZMat* p = raising_ptr(alpha, n);
  return p ? *p : ZMat(ZMat::Zero(rank, rank));
}

ZMat GModule::lowering_op(long alpha, long n) const {
  const ZMat* p = lowering_ptr(alpha, n);
  return p ? *p : ZMat(ZMat::Zero(rank, rank));
}

std::map<Weight, std::vector<index_t>> GModule::weight_spaces() const {
  std::map<Weight, std::vector<index_t>> spaces;
  for (index_t i = 0; i < rank; ++i) spaces[weights[i]].push_back(i);
  return spaces;
}

std::string GModule::label(index_t i) const {
  if (i < static_cast<index_t>(basis_labels.size())) return basis_labels[i];
  return "e" + std::to_string(i);
}

namespace {

long pairing_with_simple(const Weight& w, long alpha) { return w.coords[alpha]; }

/// Nilpotency bound from the weight spread: one past the largest feasible
/// level shift along alpha.
long weight_spread_bound(const RootDatum& d, const std::vector<Weight>& weights, long alpha) {
  (void)d;
  if (weights.empty()) return 1;
  long lo = pairing_with_simple(weights[0], alpha), hi = lo;
  for (const Weight& w : weights) {
    lo = std::min(lo, pairing_with_simple(w, alpha));
    hi = std::max(hi, pairing_with_simple(w, alpha));
  }
  return 1 + std::max(0L, (hi - lo) / 2);
}

GModule make_skeleton(const RootDatum& d, const Ring& ring, std::vector<Weight> weights) {
  GModule m;
  m.datum = d;
  m.ring = ring;
  m.rank = static_cast<index_t>(weights.size());
  m.weights = std::move(weights);
  m.raising.resize(d.rank());
  m.lowering.resize(d.rank());
  m.nilpotency.resize(d.rank());
  for (long a = 0; a < d.rank(); ++a) {
    m.nilpotency[a] = weight_spread_bound(d, m.weights, a);
    m.raising[a].assign(m.nilpotency[a] - 1, ZMat::Zero(m.rank, m.rank));
    m.lowering[a].assign(m.nilpotency[a] - 1, ZMat::Zero(m.rank, m.rank));
  }
  return m;
}

void reduce_ops(GModule& m) {
  if (m.ring.is_z()) return;
  for (auto& per_alpha : m.raising)
    for (ZMat& op : per_alpha) op = reduced(op, m.ring);
  for (auto& per_alpha : m.lowering)
    for (ZMat& op : per_alpha) op = reduced(op, m.ring);
}

}  // namespace

// Constructors -----------------------------------------------------------

GModule trivial_rep(const RootDatum& d, const Ring& ring, index_t rank) {
  return make_skeleton(d, ring, std::vector<Weight>(rank, Weight(std::vector<long>(d.rank(), 0))));
}

GModule zero_module(const RootDatum& d, const Ring& ring) { return trivial_rep(d, ring, 0); }

GModule standard_rep(const RootDatum& d, const Ring& ring) {
  if (d.rank() != 1) throw std::invalid_argument("standard_rep: only the A1 datum is supported");
  GModule m = make_skeleton(d, ring, {weight1(1), weight1(-1)});
  m.raising[0][0](0, 1) = 1;
  m.lowering[0][0](1, 0) = 1;
  m.basis_labels = {"x", "y"};
  reduce_ops(m);
  return m;
}

GModule adjoint_sl2(const Ring& ring) {
  GModule m = make_skeleton(root_datum_a(1), ring, {weight1(2), weight1(0), weight1(-2)});
  ZMat& e1 = m.raising[0][0];
  ZMat& e2 = m.raising[0][1];
  ZMat& f1 = m.lowering[0][0];
  ZMat& f2 = m.lowering[0][1];
  e1(0, 1) = -2;  // E H = -2X
  e1(1, 2) = 1;   // E Y = H
  e2(0, 2) = -1;  // E'' Y = -X
  f1(1, 0) = -1;  // F X = -H
  f1(2, 1) = 2;   // F H = 2Y
  f2(2, 0) = -1;  // F'' X = -Y
  m.basis_labels = {"X", "H", "Y"};
  reduce_ops(m);
  return m;
}

GModule conjugation_dual(const Ring& ring) {
  GModule m = tensor(dual(standard_rep(root_datum_a(1), ring)), standard_rep(root_datum_a(1), ring));
  m.basis_labels = {"a", "b", "c", "d"};
  return m;
}

// Functors ----------------------------------------------------------------

GModule dual(const GModule& m) {
  GModule r = m;
  for (Weight& w : r.weights) w = -w;
  for (long a = 0; a < m.n_alpha(); ++a)
    for (long n = 1; n < m.nilpotency[a]; ++n) {
      Int sign = (n % 2 == 0) ? 1 : -1;
      r.raising[a][n - 1] = reduced(sign * m.raising[a][n - 1].transpose(), m.ring);
      r.lowering[a][n - 1] = reduced(sign * m.lowering[a][n - 1].transpose(), m.ring);
    }
  if (!m.basis_labels.empty()) {
    r.basis_labels.clear();
    for (const auto& l : m.basis_labels) r.basis_labels.push_back(l + "'");
  }
  return r;
}

GModule tensor(const GModule& m, const GModule& n) {
  if (!(m.datum.type_label == n.datum.type_label && m.ring == n.ring))
    throw std::invalid_argument("tensor: datum/ring mismatch");
  std::vector<Weight> weights;
  weights.reserve(m.rank * n.rank);
  for (index_t i = 0; i < m.rank; ++i)
    for (index_t j = 0; j < n.rank; ++j) weights.push_back(m.weights[i] + n.weights[j]);
  GModule t = make_skeleton(m.datum, m.ring, std::move(weights));

  ZMat idm = ZMat::Identity(m.rank, m.rank);
  ZMat idn = ZMat::Identity(n.rank, n.rank);
  auto assemble = [&](bool raise, long a, long level) {
    ZMat op = ZMat::Zero(t.rank, t.rank);
    for (long i = 0; i <= level; ++i) {
      long j = level - i;
      const ZMat* mi = (i == 0) ? &idm : (raise ? m.raising_ptr(a, i) : m.lowering_ptr(a, i));
      const ZMat* nj = (j == 0) ? &idn : (raise ? n.raising_ptr(a, j) : n.lowering_ptr(a, j));
      if (!mi || !nj) continue;
      op += kron(*mi, *nj);
    }
    return reduced(op, t.ring);
  };
  for (long a = 0; a < t.n_alpha(); ++a) {
    long top = m.nilpotency[a] + n.nilpotency[a] - 1;
    for (long level = 1; level < top; ++level) {
      ZMat e = assemble(true, a, level);
      ZMat f = assemble(false, a, level);
      if (level < t.nilpotency[a]) {
        t.raising[a][level - 1] = std::move(e);
        t.lowering[a][level - 1] = std::move(f);
      } else {
        assert(is_zero(e) && is_zero(f));
      }
    }
  }
  if (!m.basis_labels.empty() || !n.basis_labels.empty()) {
    for (index_t i = 0; i < m.rank; ++i)
      for (index_t j = 0; j < n.rank; ++j)
        t.basis_labels.push_back("(" + m.label(i) + "*" + n.label(j) + ")");
  }
  return t;
}

GModule direct_sum(const GModule& m, const GModule& n) {
  if (!(m.datum.type_label == n.datum.type_label && m.ring == n.ring))
    throw std::invalid_argument("direct_sum: datum/ring mismatch");
  std::vector<Weight> weights = m.weights;
  weights.insert(weights.end(), n.weights.begin(), n.weights.end());
  GModule s = make_skeleton(m.datum, m.ring, std::move(weights));
  for (long a = 0; a < s.n_alpha(); ++a)
    for (long level = 1; level < s.nilpotency[a]; ++level) {
      s.raising[a][level - 1] = block_diag(m.raising_op(a, level), n.raising_op(a, level));
      s.lowering[a][level - 1] = block_diag(m.lowering_op(a, level), n.lowering_op(a, level));
    }
  for (index_t i = 0; i < m.rank; ++i) s.basis_labels.push_back(m.label(i));
  for (index_t j = 0; j < n.rank; ++j) s.basis_labels.push_back(n.label(j) + "~");
  return s;
}

std::vector<std::vector<int>> sym_monomials(index_t rank, long d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo, long left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = lo; i < rank; ++i) {
      cur.push_back(i);
      self(self, i, left - 1);
      cur.pop_back();
    }
  };
  if (d < 0) throw std::invalid_argument("sym_monomials: negative degree");
  rec(rec, 0, d);
  return out;
}

namespace {

using SparseVec = std::map<std::vector<int>, Int>;

/// Multiply the running symmetric product by a linear factor given as a
/// column over the module basis.
void sym_multiply_factor(SparseVec& acc, const ZVec& factor) {
  SparseVec next;
  for (const auto& [mon, coeff] : acc)
    for (index_t i = 0; i < factor.size(); ++i) {
      if (factor(i) == 0) continue;
      std::vector<int> m2 = mon;
      m2.insert(std::upper_bound(m2.begin(), m2.end(), static_cast<int>(i)), static_cast<int>(i));
      next[m2] += coeff * factor(i);
    }
  acc = std::move(next);
}

std::string power_label(const GModule& m, const std::vector<int>& mon) {
  std::ostringstream out;
  bool first = true;
  size_t i = 0;
  while (i < mon.size()) {
    size_t j = i;
    while (j < mon.size() && mon[j] == mon[i]) ++j;
    if (!first) out << "*";
    out << m.label(mon[i]);
    if (j - i > 1) out << "^" << (j - i);
    first = false;
    i = j;
  }
  if (first) out << "1";
  return out.str();
}

}  // namespace

GModule sym_power(const GModule& m, long d) {
  if (d < 0) throw std::invalid_argument("sym_power: negative degree");
  auto monomials = sym_monomials(m.rank, d);
  std::map<std::vector<int>, index_t> index_of;
  std::vector<Weight> weights;
  for (index_t k = 0; k < static_cast<index_t>(monomials.size()); ++k) {
    index_of[monomials[k]] = k;
    Weight w(std::vector<long>(m.datum.rank(), 0));
    for (int i : monomials[k]) w = w + m.weights[i];
    weights.push_back(w);
  }
  GModule s = make_skeleton(m.datum, m.ring, std::move(weights));

  // E^(n) on a monomial: sum over all distributions of the level across the
  // d slots of the product of the slotwise divided powers.
  auto build = [&](bool raise, long a, long level) {
    ZMat op = ZMat::Zero(s.rank, s.rank);
    for (index_t col = 0; col < s.rank; ++col) {
      const auto& mon = monomials[col];
      // enumerate compositions of `level` over d slots, each part < bound
      auto rec = [&](auto&& self, size_t slot, long left, SparseVec acc) -> void {
        if (acc.empty()) return;
        if (slot == mon.size()) {
          if (left != 0) return;
          for (const auto& [target, coeff] : acc) op(index_of.at(target), col) += coeff;
          return;
        }
        long remaining_slots = static_cast<long>(mon.size() - slot - 1);
        for (long part = 0; part <= left; ++part) {
          if (part >= m.nilpotency[a] && part > 0) break;
          if (left - part > remaining_slots * (m.nilpotency[a] - 1)) continue;
          const ZMat* f = nullptr;
          if (part > 0) {
            f = raise ? m.raising_ptr(a, part) : m.lowering_ptr(a, part);
            if (!f) continue;
          }
          SparseVec acc2 = acc;
          ZVec factor(m.rank);
          if (part == 0) {
            factor = ZVec::Zero(m.rank);
            factor(mon[slot]) = 1;
          } else {
            factor = f->col(mon[slot]);
          }
          sym_multiply_factor(acc2, factor);
          self(self, slot + 1, left - part, std::move(acc2));
        }
      };
      SparseVec unit;
      unit[{}] = 1;
      rec(rec, 0, level, std::move(unit));
    }
    return reduced(op, s.ring);
  };

  for (long a = 0; a < s.n_alpha(); ++a) {
    long reach = d * (m.nilpotency[a] - 1) + 1;
    for (long level = 1; level < reach; ++level) {
      ZMat e = build(true, a, level);
      ZMat f = build(false, a, level);
      if (level < s.nilpotency[a]) {
        s.raising[a][level - 1] = std::move(e);
        s.lowering[a][level - 1] = std::move(f);
      } else {
        assert(is_zero(e) && is_zero(f));
      }
    }
  }
  if (!m.basis_labels.empty() || d == 0) {
    for (const auto& mon : monomials) s.basis_labels.push_back(power_label(m, mon));
  }
  return s;
}

// Maps ---------------------------------------------------------------------

GMap tensor_map(const GMap& f, const GMap& g) {
  GMap r;
  r.source = tensor(f.source, g.source);
  r.target = tensor(f.target, g.target);
  r.matrix = reduced(kron(f.matrix, g.matrix), r.target.ring);
  return r;
}

GMap sym_power_map(const GMap& f, long d) {
  GMap r;
  r.source = sym_power(f.source, d);
  r.target = sym_power(f.target, d);
  auto src_mons = sym_monomials(f.source.rank, d);
  auto tgt_mons = sym_monomials(f.target.rank, d);
  std::map<std::vector<int>, index_t> tgt_index;
  for (index_t k = 0; k < static_cast<index_t>(tgt_mons.size()); ++k) tgt_index[tgt_mons[k]] = k;
  r.matrix = ZMat::Zero(static_cast<index_t>(tgt_mons.size()), static_cast<index_t>(src_mons.size()));
  for (index_t col = 0; col < static_cast<index_t>(src_mons.size()); ++col) {
    SparseVec acc;
    acc[{}] = 1;
    for (int i : src_mons[col]) sym_multiply_factor(acc, ZVec(f.matrix.col(i)));
    for (const auto& [mon, coeff] : acc) r.matrix(tgt_index.at(mon), col) += coeff;
  }
  r.matrix = reduced(r.matrix, r.target.ring);
  return r;
}

// Validation ----------------------------------------------------------------

namespace {

void check_weight_shift(const GModule& m, bool raise, long a, long n, const ZMat& op,
                        std::vector<std::string>& out) {
  Weight shift = m.datum.simple_root(a) * (raise ? n : -n);
  for (index_t j = 0; j < m.rank; ++j)
    for (index_t i = 0; i < m.rank; ++i) {
      if (reduce(op(i, j), m.ring) == 0) continue;
      if (!(m.weights[i] == m.weights[j] + shift)) {
        std::ostringstream s;
        s << (raise ? "E" : "F") << "^(" << n << ") alpha=" << a << " entry (" << i << "," << j
          << ") breaks the weight shift";
        out.push_back(s.str());
        return;
      }
    }
}

}  // namespace

ValidationReport validate(const GModule& m) {
  ValidationReport rep;
  for (long a = 0; a < m.n_alpha(); ++a) {
    if (m.nilpotency[a] < 1) {
      rep.violations.push_back("nilpotency bound must be >= 1");
      continue;
    }
    for (long n = 1; n < m.nilpotency[a]; ++n) {
      check_weight_shift(m, true, a, n, m.raising[a][n - 1], rep.violations);
      check_weight_shift(m, false, a, n, m.lowering[a][n - 1], rep.violations);
    }
    // divided-power composition, including vanishing past the bound
    for (long i = 1; i < m.nilpotency[a]; ++i)
      for (long j = 1; j < m.nilpotency[a]; ++j) {
        Int binom = binomial(static_cast<unsigned long>(i + j), static_cast<unsigned long>(i));
        ZMat lhs_e = m.raising_op(a, i) * m.raising_op(a, j);
        ZMat lhs_f = m.lowering_op(a, i) * m.lowering_op(a, j);
        if (!eq_mod(lhs_e, binom * m.raising_op(a, i + j), m.ring)) {
          std::ostringstream s;
          s << "E^(" << i << ")E^(" << j << ") != binom * E^(" << i + j << ") alpha=" << a;
          rep.violations.push_back(s.str());
        }
        if (!eq_mod(lhs_f, binom * m.lowering_op(a, i + j), m.ring)) {
          std::ostringstream s;
          s << "F^(" << i << ")F^(" << j << ") != binom * F^(" << i + j << ") alpha=" << a;
          rep.violations.push_back(s.str());
        }
      }
    // sl2 commutation at level 1 on weight vectors
    ZMat e = m.raising_op(a, 1), f = m.lowering_op(a, 1);
    ZMat comm = e * f - f * e;
    ZMat expected = ZMat::Zero(m.rank, m.rank);
    for (index_t i = 0; i < m.rank; ++i) expected(i, i) = pairing_with_simple(m.weights[i], a);
    if (!eq_mod(comm, expected, m.ring)) {
      std::ostringstream s;
      s << "level-1 sl2 commutation fails for alpha=" << a;
      rep.violations.push_back(s.str());
    }
  }
  return rep;
}

std::vector<std::string> equivariance_errors(const GModule& source, const GModule& target,
                                             const ZMat& matrix) {
  std::vector<std::string> errs;
  if (matrix.rows() != target.rank || matrix.cols() != source.rank) {
    errs.push_back("dimension mismatch");
    return errs;
  }
  if (!(source.ring == target.ring)) errs.push_back("ring mismatch");
  const Ring& ring = target.ring;
  for (index_t j = 0; j < source.rank; ++j)
    for (index_t i = 0; i < target.rank; ++i)
      if (reduce(matrix(i, j), ring) != 0 && !(target.weights[i] == source.weights[j])) {
        errs.push_back("weight not preserved at entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
        i = target.rank;
        j = source.rank;
      }
  for (long a = 0; a < source.n_alpha(); ++a) {
    long top = std::max(source.nilpotency[a], target.nilpotency[a]);
    for (long n = 1; n < top; ++n) {
      if (!eq_mod(matrix * source.raising_op(a, n), target.raising_op(a, n) * matrix, ring))
        errs.push_back("does not commute with E^(" + std::to_string(n) + ")");
      if (!eq_mod(matrix * source.lowering_op(a, n), target.lowering_op(a, n) * matrix, ring))
        errs.push_back("does not commute with F^(" + std::to_string(n) + ")");
    }
  }
  return errs;
}

// Invariants -----------------------------------------------------------------

ZMat InvariantLattice::of_weight(const Weight& w) const {
  std::vector<index_t> idx;
  for (index_t j = 0; j < basis.cols(); ++j)
    if (col_weights[j] == w) idx.push_back(j);
  return select_cols(basis, idx);
}

InvariantLattice invariants(const GModule& m, SubgroupTag tag) {
  const bool need_zero_weight = tag == SubgroupTag::FullG || tag == SubgroupTag::Torus ||
                                tag == SubgroupTag::BorelPlus || tag == SubgroupTag::BorelMinus;
  const bool kill_raising = tag == SubgroupTag::FullG || tag == SubgroupTag::UPlus ||
                            tag == SubgroupTag::BorelPlus;
  const bool kill_lowering = tag == SubgroupTag::FullG || tag == SubgroupTag::UMinus ||
                             tag == SubgroupTag::BorelMinus;

  InvariantLattice out;
  out.basis = ZMat(m.rank, 0);
  Weight zero(std::vector<long>(m.datum.rank(), 0));
  for (const auto& [w, idx] : m.weight_spaces()) {
    if (need_zero_weight && !(w == zero)) continue;
    // stack every operator condition, restricted to this weight space
    ZMat conditions(0, static_cast<index_t>(idx.size()));
    auto add_ops = [&](const std::vector<std::vector<ZMat>>& ops) {
      for (const auto& per_alpha : ops)
        for (const ZMat& op : per_alpha) conditions = vstack(conditions, select_cols(op, idx));
    };
    if (kill_raising) add_ops(m.raising);
    if (kill_lowering) add_ops(m.lowering);
    ZMat k = conditions.rows() == 0 ? ZMat(ZMat::Identity(idx.size(), idx.size()))
                                    : kernel_basis(conditions, m.ring);
    for (index_t j = 0; j < k.cols(); ++j) {
      ZVec v = ZVec::Zero(m.rank);
      for (size_t t = 0; t < idx.size(); ++t) v(idx[t]) = k(t, j);
      out.basis = hstack(out.basis, ZMat(v));
      out.col_weights.push_back(w);
    }
  }
  return out;
}

GMap invariants_inclusion(const GModule& m) {
  InvariantLattice inv = invariants(m, SubgroupTag::FullG);
  GMap incl;
  incl.source = trivial_rep(m.datum, m.ring, inv.count());
  incl.target = m;
  incl.matrix = inv.basis;
  return incl;
}

std::vector<ZMat> hom_g(const GModule& m, const GModule& n) {
  if (!(m.datum.type_label == n.datum.type_label && m.ring == n.ring))
    throw std::invalid_argument("hom_g: datum/ring mismatch");
  // The lattice of invariants of dual(m) ⊗ n, computed directly as the
  // weight-preserving commutant: unknowns are the weight-matched entries,
  // equations come from commuting with every stored operator level.
  std::vector<std::pair<index_t, index_t>> unknowns;  // (row in n, col in m)
  ZMat uidx = ZMat::Zero(n.rank, m.rank);             // 1-based position, 0 = forced zero
  for (index_t j = 0; j < m.rank; ++j)
    for (index_t i = 0; i < n.rank; ++i)
      if (n.weights[i] == m.weights[j]) {
        unknowns.emplace_back(i, j);
        uidx(i, j) = static_cast<long>(unknowns.size());
      }
  const index_t u = static_cast<index_t>(unknowns.size());

  std::vector<ZVec> rows;
  auto add_op_equations = [&](const ZMat& op_m, const ZMat& op_n) {
    // (A op_m - op_n A)(r, c) = 0
    for (index_t c = 0; c < m.rank; ++c)
      for (index_t r = 0; r < n.rank; ++r) {
        ZVec row = ZVec::Zero(u);
        bool nonzero = false;
        for (index_t j = 0; j < m.rank; ++j)
          if (op_m(j, c) != 0 && uidx(r, j) != 0) {
            row(uidx(r, j).get_si() - 1) += op_m(j, c);
            nonzero = true;
          }
        for (index_t i = 0; i < n.rank; ++i)
          if (op_n(r, i) != 0 && uidx(i, c) != 0) {
            row(uidx(i, c).get_si() - 1) -= op_n(r, i);
            nonzero = true;
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  };
  long levels = std::max(m.nilpotency[0], n.nilpotency[0]);
  for (long a = 0; a < m.n_alpha(); ++a) {
    levels = std::max(m.nilpotency[a], n.nilpotency[a]);
    for (long lvl = 1; lvl < levels; ++lvl) {
      add_op_equations(m.raising_op(a, lvl), n.raising_op(a, lvl));
      add_op_equations(m.lowering_op(a, lvl), n.lowering_op(a, lvl));
    }
  }
  ZMat system(static_cast<index_t>(rows.size()), u);
  for (size_t r = 0; r < rows.size(); ++r) system.row(static_cast<index_t>(r)) = rows[r].transpose();
  ZMat k = system.rows() == 0 ? ZMat(ZMat::Identity(u, u)) : kernel_basis(system, m.ring);

  std::vector<ZMat> maps;
  for (index_t c = 0; c < k.cols(); ++c) {
    ZMat a = ZMat::Zero(n.rank, m.rank);
    for (index_t t = 0; t < u; ++t) a(unknowns[t].first, unknowns[t].second) = k(t, c);
    maps.push_back(std::move(a));
  }
  return maps;
}

std::map<Weight, long> character(const GModule& m) {
  std::map<Weight, long> chi;
  for (const Weight& w : m.weights) ++chi[w];
  return chi;
}

}  // namespace glab
