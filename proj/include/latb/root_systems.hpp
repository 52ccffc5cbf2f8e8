#pragma once

#include "latb/cyclotomic.hpp"

namespace latb {

struct ADEType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;
  std::string name() const { return std::string(1, family) + "_" + std::to_string(rank); }
  bool operator==(const ADEType& o) const { return family == o.family && rank == o.rank; }
};

/// Classify an irreducible positive definite root-lattice Gram matrix by rank
/// and determinant: A_n <-> n+1, D_n <-> 4 (n >= 4), E_6/E_7/E_8 <-> 3/2/1.
/// The rank-3 determinant-4 case is A_3.  Error("NotARootLattice") otherwise.
ADEType recognize_ade(const IMat& g);

/// All integer vectors v with v^t g v = 2, for positive definite g.
/// Stored up to sign (first nonzero coordinate positive).
struct RootSet {
  std::vector<IVec> reps;
  size_t full_count() const { return 2 * reps.size(); }
  std::vector<IVec> all() const;
};
RootSet enumerate_roots(const IMat& g);

/// A conjugacy class of quasi-Coxeter elements, identified by the
/// characteristic polynomial of the Weyl group element w.
struct CarterClass {
  std::string symbol;  // "A_3", "D_5(a_1)", "E_7(a_2)", ...
  IntPoly char_poly;   // of w, degree = rank
  Int trace;           // of w
  bool is_coxeter() const { return symbol.find('(') == std::string::npos; }
};

/// Every class for the given type, Coxeter row first; D_n(a_j) rows are
/// instantiated from the closed form (t^{n-1-j}+1)(t^{j+1}+1).
std::vector<CarterClass> carter_classes(const ADEType& type);

/// The unique class whose polynomial matches char poly of -M;
/// Error("UnknownClass") when no row matches (-M not quasi-Coxeter).
CarterClass carter_class(const TriangularSeed& seed);

struct DefiniteReport {
  ADEType type;
  Int trace;           // of M = S^{-1} S^t
  IntPoly w_char;      // char poly of -M
  CarterClass cls;
  Spectrum sp;
  Rat var;             // Var(Sp)
  Rat bound;           // (alpha_n - alpha_1)/12
  bool distinguished;  // trace == 1  <=>  var == bound  <=>  Coxeter class
};

/// Positive definite, connected seeds: trace test and variance test computed
/// independently and cross-asserted (Error("Internal") on disagreement).
DefiniteReport classify_definite(const TriangularSeed& seed);

}  // namespace latb
