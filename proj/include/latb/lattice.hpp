#pragma once

#include "latb/exact_linalg.hpp"

namespace latb {

/// A unit upper-triangular integer matrix S; the root object of every
/// analysis.  In the basis it encodes, the bilinear form L has coordinate
/// matrix S^t (this transpose convention is fixed here, once, for all
/// modules).
class TriangularSeed {
 public:
  const IMat& s() const { return s_; }
  Eigen::Index n() const { return s_.rows(); }

 private:
  friend TriangularSeed validate_seed(const IMat& raw);
  explicit TriangularSeed(IMat s) : s_(std::move(s)) {}
  IMat s_;
};

/// Error("NotUnitUpperTriangular") unless raw qualifies.
TriangularSeed validate_seed(const IMat& raw);

/// Coordinate matrix of L: S^t.
IMat l_matrix(const TriangularSeed& seed);

/// L(a, b) = a^t S^t b.
Int l_pair(const TriangularSeed& seed, const IVec& a, const IVec& b);

/// The monodromy matrix S^{-1} S^t.
IMat monodromy(const TriangularSeed& seed);

/// S + S^t (k=0, symmetric, "even") or S - S^t (k=1, skew, "odd").
IMat intersection_form(const TriangularSeed& seed, int k);

struct CoxeterDynkinDiagram {
  struct Edge {
    int i, j;  // 0-based, i < j
    Int weight;
  };
  Eigen::Index n = 0;
  std::vector<Edge> edges;
};

CoxeterDynkinDiagram cdd(const TriangularSeed& seed);
bool is_connected(const CoxeterDynkinDiagram& d);
/// DOT export; solid edges carry negative weights, dashed edges positive ones.
std::string to_dot(const CoxeterDynkinDiagram& d);

/// s^(k)_a(b) = b - I^(k)(a,b) a.  For k=0, a must satisfy I^(0)(a,a) = 2.
IVec apply_reflection(const TriangularSeed& seed, int k, const IVec& a, const IVec& b);

/// Matrix of the reflection/transvection in the vector a (coordinates act
/// from the left).  Same root condition as apply_reflection for k=0.
IMat reflection_matrix(const TriangularSeed& seed, int k, const IVec& a);
IMat basis_reflection_matrix(const TriangularSeed& seed, int k, Eigen::Index i);

/// s^(k)_{e_1} ... s^(k)_{e_n} == (-1)^{k+1} M, as matrices.
bool reflection_product_check(const TriangularSeed& seed, int k);

}  // namespace latb
