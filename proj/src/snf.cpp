#include "glab/snf.hpp"

#include <algorithm>
#include <cassert>

namespace glab {

ZMat SnfCertificate::diagonal(index_t rows, index_t cols) const {
  ZMat d = ZMat::Zero(rows, cols);
  for (index_t i = 0; i < static_cast<index_t>(factors.size()) && i < rows && i < cols; ++i)
    d(i, i) = factors[i];
  return d;
}

namespace {

// Row/column elementary operations, mirrored into the transforms and
// their inverses so that left * original * right stays equal to work.
// Either transform pair can be skipped when the caller does not need it.
struct SnfWork {
  ZMat a;
  ZMat left, left_inv, right, right_inv;
  bool track_left, track_right;

  SnfWork(const ZMat& m, bool with_left, bool with_right)
      : a(m), track_left(with_left), track_right(with_right) {
    if (track_left) {
      left = ZMat::Identity(m.rows(), m.rows());
      left_inv = left;
    }
    if (track_right) {
      right = ZMat::Identity(m.cols(), m.cols());
      right_inv = right;
    }
  }

  void swap_rows(index_t i, index_t j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    if (!track_left) return;
    left.row(i).swap(left.row(j));
    left_inv.col(i).swap(left_inv.col(j));
  }
  void swap_cols(index_t i, index_t j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    if (!track_right) return;
    right.col(i).swap(right.col(j));
    right_inv.row(i).swap(right_inv.row(j));
  }
  void negate_row(index_t i) {
    a.row(i) = -a.row(i);
    if (!track_left) return;
    left.row(i) = -left.row(i);
    left_inv.col(i) = -left_inv.col(i);
  }
  // row i += q * row j
  void add_row(index_t i, index_t j, const Int& q) {
    if (q == 0) return;
    a.row(i) += q * a.row(j);
    if (!track_left) return;
    left.row(i) += q * left.row(j);
    left_inv.col(j) -= q * left_inv.col(i);
  }
  // col i += q * col j
  void add_col(index_t i, index_t j, const Int& q) {
    if (q == 0) return;
    a.col(i) += q * a.col(j);
    if (!track_right) return;
    right.col(i) += q * right.col(j);
    right_inv.row(j) -= q * right_inv.row(i);
  }
};

// Smallest nonzero |entry| in the trailing submatrix, row-major tiebreak.
bool find_pivot(const ZMat& a, index_t k, index_t& pi, index_t& pj) {
  bool found = false;
  Int best;
  for (index_t i = k; i < a.rows(); ++i)
    for (index_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

namespace {

SnfCertificate snf_core(const ZMat& m, bool with_left, bool with_right) {
  SnfWork w(m, with_left, with_right);
  const index_t n = std::min(m.rows(), m.cols());

  for (index_t k = 0; k < n; ++k) {
    index_t pi, pj;
    if (!find_pivot(w.a, k, pi, pj)) break;
    w.swap_rows(k, pi);
    w.swap_cols(k, pj);

    for (;;) {
      // Clear column k below the pivot by floor-division remainders.
      bool dirty = false;
      for (index_t i = k + 1; i < w.a.rows(); ++i) {
        if (w.a(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a(i, k).get_mpz_t(), w.a(k, k).get_mpz_t());
        w.add_row(i, k, -q);
        if (w.a(i, k) != 0) {
          w.swap_rows(k, i);  // strictly smaller pivot
          dirty = true;
        }
      }
      if (dirty) continue;
      for (index_t j = k + 1; j < w.a.cols(); ++j) {
        if (w.a(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a(k, j).get_mpz_t(), w.a(k, k).get_mpz_t());
        w.add_col(j, k, -q);
        if (w.a(k, j) != 0) {
          w.swap_cols(k, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot now alone in its row and column. Enforce divisibility of the
      // trailing submatrix; merging a bad row shrinks the pivot to a gcd.
      bool divides_all = true;
      for (index_t i = k + 1; i < w.a.rows() && divides_all; ++i)
        for (index_t j = k + 1; j < w.a.cols() && divides_all; ++j)
          if (w.a(i, j) % w.a(k, k) != 0) {
            w.add_row(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (w.a(k, k) < 0) w.negate_row(k);
  }

  SnfCertificate cert;
  cert.left = std::move(w.left);
  cert.left_inv = std::move(w.left_inv);
  cert.right = std::move(w.right);
  cert.right_inv = std::move(w.right_inv);
  cert.factors.resize(n);
  for (index_t i = 0; i < n; ++i) cert.factors[i] = w.a(i, i);
  return cert;
}

}  // namespace

SnfCertificate smith_normal_form(const ZMat& m, const Ring& ring) {
  if (!ring.is_z())
    throw std::invalid_argument("smith_normal_form: only supported over Z (modulus 0)");
  return snf_core(m, true, true);
}

ZMat hermite_basis(const ZMat& m) {
  ZMat h = m;
  index_t pc = 0;  // next pivot column
  for (index_t row = 0; row < h.rows() && pc < h.cols(); ++row) {
    // gcd-reduce the entries of this row among columns pc..
    for (;;) {
      index_t best = -1;
      for (index_t j = pc; j < h.cols(); ++j) {
        if (h(row, j) == 0) continue;
        if (best < 0 || abs(h(row, j)) < abs(h(row, best))) best = j;
      }
      if (best < 0) break;
      if (best != pc) h.col(pc).swap(h.col(best));
      bool clean = true;
      for (index_t j = pc + 1; j < h.cols(); ++j) {
        if (h(row, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, pc).get_mpz_t());
        h.col(j) -= q * h.col(pc);
        if (h(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, pc) == 0) continue;  // row has no pivot
    if (h(row, pc) < 0) h.col(pc) = -h.col(pc);
    // canonical: reduce this row's entries in earlier pivot columns
    for (index_t j = 0; j < pc; ++j) {
      if (h(row, j) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, pc).get_mpz_t());
      h.col(j) -= q * h.col(pc);
    }
    ++pc;
  }
  return h.leftCols(pc);
}

namespace {

// Kernel basis over Z: columns of the right transform at zero diagonal
// positions. Saturated because the transform is unimodular.
ZMat kernel_z(const ZMat& m) {
  SnfCertificate c = snf_core(m, false, true);
  std::vector<index_t> idx;
  for (index_t j = 0; j < m.cols(); ++j) {
    Int d = (j < static_cast<index_t>(c.factors.size())) ? c.factors[j] : Int(0);
    if (d == 0) idx.push_back(j);
  }
  return select_cols(c.right, idx);
}

// [m | nI] trick: v solves m v = 0 over Z/n iff (v, w) solves over Z.
ZMat lift_with_modulus(const ZMat& m, const Int& n) {
  ZMat nid = ZMat::Identity(m.rows(), m.rows());
  nid *= n;
  return hstack(m, nid);
}

Int mod_inverse(const Int& a, const Int& p) {
  Int u, v;
  Int g = gcdext(a, p, u, v);
  assert(g == 1);
  return reduce(u, p);
}

// Kernel over a prime field via reduced row echelon form: one canonical
// generator per free column. Much cheaper than the modulus lift when the
// condition stack has many rows.
ZMat kernel_field(const ZMat& m, const Int& p) {
  ZMat a = reduced(m, Ring(p));
  const index_t rows = a.rows(), cols = a.cols();
  std::vector<index_t> pivot_row_of;  // per pivot, the column
  std::vector<bool> is_pivot(cols, false);
  index_t r = 0;
  for (index_t c = 0; c < cols && r < rows; ++c) {
    index_t pr = -1;
    for (index_t i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) a.row(pr).swap(a.row(r));
    Int inv = mod_inverse(a(r, c), p);
    for (index_t j = c; j < cols; ++j) a(r, j) = reduce(a(r, j) * inv, p);
    for (index_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Int f = a(i, c);
      for (index_t j = c; j < cols; ++j) a(i, j) = reduce(a(i, j) - f * a(r, j), p);
    }
    pivot_row_of.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::vector<index_t> free_cols;
  for (index_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ZMat k = ZMat::Zero(cols, static_cast<index_t>(free_cols.size()));
  for (size_t t = 0; t < free_cols.size(); ++t) {
    k(free_cols[t], static_cast<index_t>(t)) = 1;
    for (index_t pr2 = 0; pr2 < static_cast<index_t>(pivot_row_of.size()); ++pr2)
      k(pivot_row_of[pr2], static_cast<index_t>(t)) = reduce(-a(pr2, free_cols[t]), p);
  }
  return k;
}

}  // namespace

ZMat kernel_basis(const ZMat& m, const Ring& ring) {
  if (ring.is_z()) return kernel_z(m);
  const Int& n = ring.modulus;
  if (is_prime(n)) return kernel_field(m, n);
  ZMat k = kernel_z(lift_with_modulus(reduced(m, ring), n));
  ZMat v = k.topRows(m.cols());
  // canonical generators of the Z/n module: Hermite of im(v) + n Z^c, mod n
  ZMat nid = ZMat::Identity(m.cols(), m.cols());
  nid *= n;
  ZMat h = reduced(hermite_basis(hstack(v, nid)), ring);
  std::vector<index_t> nonzero;
  for (index_t j = 0; j < h.cols(); ++j)
    if (!is_zero(h.col(j))) nonzero.push_back(j);
  return select_cols(h, nonzero);
}

Solver::Solver(ZMat m, const Ring& ring) : ring_(ring), cols_(m.cols()) {
  ZMat work = ring.is_z() ? std::move(m) : lift_with_modulus(reduced(m, ring), ring.modulus);
  lifted_cols_ = work.cols();
  cert_ = snf_core(work, true, true);
}

std::optional<ZVec> Solver::solve(const ZVec& v) const {
  ZVec vr = v;
  if (!ring_.is_z())
    for (index_t i = 0; i < vr.size(); ++i) vr(i) = reduce(vr(i), ring_.modulus);
  ZVec rhs = cert_.left * vr;
  ZVec y = ZVec::Zero(lifted_cols_);
  const index_t n = static_cast<index_t>(cert_.factors.size());
  for (index_t i = 0; i < rhs.size(); ++i) {
    Int d = (i < n) ? cert_.factors[i] : Int(0);
    if (d == 0) {
      if (rhs(i) != 0) return std::nullopt;
    } else {
      if (rhs(i) % d != 0) return std::nullopt;
      if (i < lifted_cols_) y(i) = rhs(i) / d;
    }
  }
  ZVec x = cert_.right * y;
  ZVec top = x.head(cols_);
  if (!ring_.is_z())
    for (index_t i = 0; i < top.size(); ++i) top(i) = reduce(top(i), ring_.modulus);
  return top;
}

std::optional<ZVec> solve(const ZMat& m, const ZVec& v, const Ring& ring) {
  return Solver(m, ring).solve(v);
}

std::vector<Int> cokernel_structure(const ZMat& m) {
  SnfCertificate c = snf_core(m, false, false);
  std::vector<Int> out;
  for (index_t i = 0; i < m.rows(); ++i)
    out.push_back(i < static_cast<index_t>(c.factors.size()) ? c.factors[i] : Int(0));
  return out;
}

ZMat saturate(const ZMat& m) {
  SnfCertificate c = snf_core(m, true, false);
  std::vector<index_t> idx;
  for (index_t i = 0; i < c.rank(); ++i) idx.push_back(i);
  return hermite_basis(select_cols(c.left_inv, idx));
}

ModuleStructure module_structure(const ZMat& generators, const Ring& ring) {
  ModuleStructure s;
  if (ring.is_z()) {
    s.free_rank = snf_core(generators, false, false).rank();
    return s;
  }
  const Int& n = ring.modulus;
  const index_t k = generators.rows();
  ZMat nid = ZMat::Identity(k, k);
  nid *= n;
  ZMat h = hermite_basis(hstack(reduced(generators, ring), nid));
  assert(h.cols() == k);  // contains n Z^k, so full rank
  // n Z^k = h * x inside the lattice spanned by h; quotient = coker(x)
  ZMat x(k, k);
  for (index_t j = 0; j < k; ++j) {
    auto col = solve(h, ZVec(nid.col(j)), ring_z());
    assert(col);
    x.col(j) = *col;
  }
  for (const Int& d : cokernel_structure(x)) {
    assert(d != 0);
    if (d != 1) s.torsion.push_back(d);
  }
  return s;
}

bool lattice_contains(const ZMat& a, const ZMat& b, const Ring& ring) {
  Solver s(a, ring);
  for (index_t j = 0; j < b.cols(); ++j)
    if (!s.solve(ZVec(b.col(j)))) return false;
  return true;
}

bool lattice_eq(const ZMat& a, const ZMat& b, const Ring& ring) {
  return lattice_contains(a, b, ring) && lattice_contains(b, a, ring);
}

ZMat lattice_sum(const ZMat& a, const ZMat& b, const Ring& ring) {
  ZMat s = hstack(a, b);
  if (ring.is_z()) return hermite_basis(s);
  ZMat nid = ZMat::Identity(s.rows(), s.rows());
  nid *= ring.modulus;
  ZMat h = reduced(hermite_basis(hstack(s, nid)), ring);
  std::vector<index_t> nonzero;
  for (index_t j = 0; j < h.cols(); ++j)
    if (!is_zero(h.col(j))) nonzero.push_back(j);
  return select_cols(h, nonzero);
}

ZMat lattice_intersect(const ZMat& a, const ZMat& b) {
  if (a.cols() == 0 || b.cols() == 0) return ZMat(a.rows(), 0);
  ZMat k = kernel_z(hstack(a, ZMat(-b)));
  ZMat x = k.topRows(a.cols());
  return hermite_basis(a * x);
}

std::vector<Int> finite_cokernel_factors(const ZMat& m) {
  std::vector<Int> out;
  for (const Int& d : cokernel_structure(m))
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace glab
