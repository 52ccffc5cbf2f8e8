#include "latb/lattice.hpp"

#include <sstream>

namespace latb {

TriangularSeed validate_seed(const IMat& raw) {
  const Eigen::Index n = raw.rows();
  if (n == 0 || raw.cols() != n)
    fail("NotUnitUpperTriangular", "seed must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (raw(i, i) != 1) fail("NotUnitUpperTriangular", "diagonal entry is not 1");
    for (Eigen::Index j = 0; j < i; ++j)
      if (raw(i, j) != 0) fail("NotUnitUpperTriangular", "nonzero entry below the diagonal");
  }
  return TriangularSeed(raw);
}

IMat l_matrix(const TriangularSeed& seed) { return seed.s().transpose(); }

Int l_pair(const TriangularSeed& seed, const IVec& a, const IVec& b) {
  if (a.rows() != seed.n() || b.rows() != seed.n())
    fail("DimensionMismatch", "vector length does not match seed rank");
  return (a.transpose() * l_matrix(seed) * b)(0, 0);
}

IMat monodromy(const TriangularSeed& seed) {
  return triangular_inverse(seed.s()) * seed.s().transpose();
}

IMat intersection_form(const TriangularSeed& seed, int k) {
  if (k != 0 && k != 1) fail("BadFormIndex", "k must be 0 or 1");
  IMat st = seed.s().transpose();
  return (k == 0) ? IMat(seed.s() + st) : IMat(seed.s() - st);
}

CoxeterDynkinDiagram cdd(const TriangularSeed& seed) {
  CoxeterDynkinDiagram d;
  d.n = seed.n();
  for (Eigen::Index i = 0; i < d.n; ++i)
    for (Eigen::Index j = i + 1; j < d.n; ++j)
      if (seed.s()(i, j) != 0)
        d.edges.push_back({static_cast<int>(i), static_cast<int>(j), seed.s()(i, j)});
  return d;
}

bool is_connected(const CoxeterDynkinDiagram& d) {
  if (d.n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<size_t>(d.n));
  for (const auto& e : d.edges) {
    adj[static_cast<size_t>(e.i)].push_back(e.j);
    adj[static_cast<size_t>(e.j)].push_back(e.i);
  }
  std::vector<bool> seen(static_cast<size_t>(d.n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == static_cast<size_t>(d.n);
}

std::string to_dot(const CoxeterDynkinDiagram& d) {
  std::ostringstream out;
  out << "graph cdd {\n";
  for (Eigen::Index v = 0; v < d.n; ++v) out << "  v" << (v + 1) << " [label=\"" << (v + 1) << "\"];\n";
  for (const auto& e : d.edges) {
    out << "  v" << (e.i + 1) << " -- v" << (e.j + 1) << " [label=\"" << e.weight.get_str()
        << "\"";
    if (e.weight > 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

IVec apply_reflection(const TriangularSeed& seed, int k, const IVec& a, const IVec& b) {
  IMat form = intersection_form(seed, k);
  if (k == 0) {
    Int norm = (a.transpose() * form * a)(0, 0);
    if (norm != 2) fail("NotARoot", "k=0 reflection center must satisfy I0(a,a)=2");
  }
  Int pairing = (a.transpose() * form * b)(0, 0);
  return b - a * pairing;
}

IMat reflection_matrix(const TriangularSeed& seed, int k, const IVec& a) {
  IMat form = intersection_form(seed, k);
  if (k == 0) {
    Int norm = (a.transpose() * form * a)(0, 0);
    if (norm != 2) fail("NotARoot", "k=0 reflection center must satisfy I0(a,a)=2");
  }
  // s(b) = b - (a^t F b) a  =>  matrix  I - a (F a)^t ... careful: I^(k)(a,b)
  // reads the form row through a, i.e. (F^t a)^t b; F symmetric or skew.
  IMat m = identity(seed.n());
  IVec row = form.transpose() * a;  // I^(k)(a, e_j) as j-th entry
  m -= a * row.transpose();
  return m;
}

IMat basis_reflection_matrix(const TriangularSeed& seed, int k, Eigen::Index i) {
  IVec e = IVec::Zero(seed.n());
  e(i) = 1;
  return reflection_matrix(seed, k, e);
}

bool reflection_product_check(const TriangularSeed& seed, int k) {
  const Eigen::Index n = seed.n();
  IMat prod = identity(n);
  for (Eigen::Index i = 0; i < n; ++i) prod = prod * basis_reflection_matrix(seed, k, i);
  IMat target = monodromy(seed);
  if (k == 0) target = -target;
  return mat_eq(prod, target);
}

}  // namespace latb
