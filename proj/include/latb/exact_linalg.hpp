#pragma once

#include "latb/numeric.hpp"
#include "latb/polynomial.hpp"

namespace latb {

/// Exact product, with an explicit dimension check.
IMat mat_mul(const IMat& a, const IMat& b);

/// Integer inverse of a unit upper-triangular matrix (back substitution).
IMat triangular_inverse(const IMat& s);

/// Monic characteristic polynomial det(tI - m), exact integer coefficients.
/// Faddeev-LeVerrier; every trace division is exact and asserted.
IntPoly char_poly(const IMat& m);

Int trace(const IMat& m);
Int det(const IMat& m);

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteDegenerate, Other };
std::string definiteness_name(Definiteness d);

/// Exact verdict for symmetric g via signs of principal-minor sums
/// (coefficients of the characteristic polynomial; symmetric matrices are
/// real-rooted, so the sign pattern decides).
Definiteness definiteness(const IMat& g);

/// Basis of the primitive sublattice {x in Z^n : g x = 0}.
std::vector<IVec> integer_kernel(const IMat& g);

/// Kernel basis together with a completion: the columns of [kernel|complement]
/// form a Z-basis of Z^n.  kernel has one column per kernel basis vector.
struct KernelSplit {
  IMat kernel;
  IMat complement;
};
/// `pass` permutes the pivoting order; any value gives a valid (possibly
/// different) completion of the same primitive kernel.
KernelSplit integer_kernel_with_complement(const IMat& g, int pass = 0);

/// Solve a x = b over the rationals; Error("Singular") if no unique solution.
QVec rational_solve(const QMat& a, const QVec& b);
QMat rational_inverse(const QMat& a);

/// Inverse of a unimodular integer matrix, exact and integral.
IMat unimodular_inverse(const IMat& u);

}  // namespace latb
