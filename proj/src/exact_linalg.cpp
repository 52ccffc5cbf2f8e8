#include "latb/exact_linalg.hpp"

namespace latb {

IMat mat_mul(const IMat& a, const IMat& b) {
  if (a.cols() != b.rows())
    fail("DimensionMismatch", "product of " + std::to_string(a.rows()) + "x" +
                                  std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                  "x" + std::to_string(b.cols()));
  return a * b;
}

IMat triangular_inverse(const IMat& s) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n) fail("NotUnitUpperTriangular", "matrix is not square");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s(i, i) != 1) fail("NotUnitUpperTriangular", "diagonal entry is not 1");
    for (Eigen::Index j = 0; j < i; ++j)
      if (s(i, j) != 0) fail("NotUnitUpperTriangular", "nonzero entry below the diagonal");
  }
  IMat inv = identity(n);
  // back substitution, column by column of the inverse
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      Int acc(0);
      for (Eigen::Index k = i + 1; k <= j; ++k) acc += s(i, k) * inv(k, j);
      inv(i, j) = -acc;
    }
  return inv;
}

Int trace(const IMat& m) {
  Int t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

IntPoly char_poly(const IMat& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) fail("NonSquare", "characteristic polynomial of a non-square matrix");
  std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
  c[static_cast<size_t>(n)] = 1;
  if (n == 0) return IntPoly(std::move(c));
  IMat work = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Int t = trace(work);
    // Newton's identities make this division exact over Z
    Int ck;
    mpz_divexact(ck.get_mpz_t(), t.get_mpz_t(), Int(static_cast<long>(k)).get_mpz_t());
    if (ck * k != t) fail("Internal", "Faddeev-LeVerrier trace not divisible");
    ck = -ck;
    c[static_cast<size_t>(n - k)] = ck;
    if (k < n) {
      for (Eigen::Index d = 0; d < n; ++d) work(d, d) += ck;
      work = m * work;
    }
  }
  return IntPoly(std::move(c));
}

Int det(const IMat& m) {
  IntPoly p = char_poly(m);
  Int d = p.coeff_or_zero(0);  // det(tI - m) at t=0 is (-1)^n det(m)
  return (m.rows() % 2 == 0) ? d : -d;
}

std::string definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::PositiveSemidefiniteDegenerate:
      return "positive_semidefinite_degenerate";
    default: return "other";
  }
}

Definiteness definiteness(const IMat& g) {
  const Eigen::Index n = g.rows();
  if (g.cols() != n) fail("NotSymmetric", "definiteness of a non-square matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) fail("NotSymmetric", "definiteness of a non-symmetric matrix");
  IntPoly p = char_poly(g);
  // det(tI-g) = sum_k (-1)^k E_k t^{n-k}, E_k = sum of k x k principal minors
  bool all_positive = true, all_nonnegative = true;
  Int e_n(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Int ek = p.coeff_or_zero(static_cast<long>(n - k));
    if (k % 2 == 1) ek = -ek;
    if (ek <= 0) all_positive = false;
    if (ek < 0) all_nonnegative = false;
    if (k == n) e_n = ek;
  }
  if (all_positive) return Definiteness::PositiveDefinite;
  if (all_nonnegative && e_n == 0) return Definiteness::PositiveSemidefiniteDegenerate;
  return Definiteness::Other;
}

KernelSplit integer_kernel_with_complement(const IMat& g, int pass) {
  const Eigen::Index rows = g.rows(), n = g.cols();
  IMat a = g;
  IMat u = identity(n);
  Eigen::Index r = 0;  // columns 0..r-1 hold pivots
  for (Eigen::Index step = 0; step < rows && r < n; ++step) {
    // pivoting order varies with `pass` so callers can get a second completion
    Eigen::Index i = (pass % 2 == 0) ? step : rows - 1 - step;
    // clear row i across columns r..n-1 by gcd column operations
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = r; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (best < 0 || abs(a(i, j)) < abs(a(i, best))) best = j;
      }
      if (best < 0) break;
      if (best != r) {
        a.col(r).swap(a.col(best));
        u.col(r).swap(u.col(best));
      }
      bool reduced = true;
      for (Eigen::Index j = r + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(i, r).get_mpz_t());
        if (q != 0) {
          a.col(j) -= (IVec(a.col(r)) * q).eval();
          u.col(j) -= (IVec(u.col(r)) * q).eval();
        }
        if (a(i, j) != 0) reduced = false;
      }
      if (reduced) {
        if (a(i, r) < 0) {
          a.col(r) = -a.col(r);
          u.col(r) = -u.col(r);
        }
        ++r;
        break;
      }
    }
  }
  KernelSplit split;
  split.kernel = u.rightCols(n - r);
  split.complement = u.leftCols(r);
  return split;
}

std::vector<IVec> integer_kernel(const IMat& g) {
  KernelSplit s = integer_kernel_with_complement(g);
  std::vector<IVec> basis;
  basis.reserve(static_cast<size_t>(s.kernel.cols()));
  for (Eigen::Index j = 0; j < s.kernel.cols(); ++j) basis.push_back(s.kernel.col(j));
  return basis;
}

QVec rational_solve(const QMat& a, const QVec& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) fail("DimensionMismatch", "rational_solve shapes");
  QMat work(n, n + 1);
  work.leftCols(n) = a;
  work.col(n) = b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (work(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail("Singular", "matrix is singular");
    if (piv != col) work.row(piv).swap(work.row(col));
    Rat inv = rat(work(col, col).get_den(), work(col, col).get_num());
    work.row(col) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || work(i, col) == 0) continue;
      Rat f = work(i, col);
      work.row(i) -= (work.row(col) * f).eval();
    }
  }
  return work.col(n);
}

QMat rational_inverse(const QMat& a) {
  const Eigen::Index n = a.rows();
  QMat inv(n, n);
  QVec e = QVec::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e(j) = 1;
    inv.col(j) = rational_solve(a, e);
    e(j) = 0;
  }
  return inv;
}

IMat unimodular_inverse(const IMat& u) {
  Int d = det(u);
  if (d != 1 && d != -1) fail("NotUnimodular", "matrix determinant is not +-1");
  return to_integer(rational_inverse(to_rational(u)));
}

}  // namespace latb
