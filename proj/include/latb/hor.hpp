#pragma once

#include "latb/moments.hpp"

#include <optional>

namespace latb {

/// A palindromic unit-circle-rooted integer polynomial of the banded family,
/// restricted to cyclotomic products (the exact-arithmetic regime): p monic of
/// degree n with p_{n-j} = (-1)^{b-1} p_j, all roots unit roots, written
/// p(x) = prod_j (x - e^{-2 pi i beta_j}) with sorted betas in [0,1],
/// beta_1 = 0 if b = 2 and beta_j + beta_{n+b-j} = 1.
struct HorPolynomial {
  int b = 1;  // 1 or 2
  IntPoly p;
  CycloFactorization fact;
  std::vector<Rat> betas;  // sorted ascending
  long n() const { return p.degree(); }
  /// Free beta parameters after the symmetry pairing (simplex dimension).
  long dof() const;
};

/// Errors: NotPalindromic, NotQuasiunipotent, MissingRootAtOne (b=2).
HorPolynomial hor_validate(const IntPoly& p, int b);

/// Companion matrix with first row -p_{n-1} ... -p_0; char poly is p.
IMat companion_matrix(const HorPolynomial& hp);

/// Banded unit upper-triangular matrix with constant superdiagonals
/// S_{i,i+d} = p_{n-d}.
TriangularSeed banded_seed(const HorPolynomial& hp);

/// (-1)^b S^{-1} S^t == R^n, exactly.
bool companion_power_identity(const HorPolynomial& hp);

/// Recognize a seed of the banded family: Toeplitz superdiagonals and a
/// validating polynomial for one of the two palindromy signs.
std::optional<HorPolynomial> recognize_banded(const TriangularSeed& seed);

/// alpha~_j = n beta_j - (j - b/2), symmetry asserted before sorting
/// (Error("SymmetryViolated") on failure), then sorted ascending.
Spectrum hor_spectrum(const HorPolynomial& hp);

/// True iff the multiset can be ordered so that the b-symmetries hold,
/// alpha~_{j+1} >= alpha~_j - 1, and (b=1) alpha~_1 >= -1/2.  Searches the
/// symmetry-respecting orderings with pruning; meant for small tuples
/// (about n <= 12 unless values repeat heavily).
bool hor_realizable(std::vector<Rat> values, int b);

/// Exponents of x_0^{a_0} + sum_i x_{i-1} x_i^{a_i} with the derived data.
struct ChainTypeSpec {
  std::vector<long> a;       // a_0 >= 2, a_i >= 1
  std::vector<Int> r;        // r[k] = a_0 ... a_{k-1}; r[0] = 1  (= r_{k-1})
  int b = 1;                 // b == m+1 mod 2
  Int milnor;                // alternating sum of the r_l
  std::vector<Rat> weights;  // w_0 = 1/a_0, w_i = (1 - w_{i-1})/a_i
  Rat nu;                    // m+1 - 2 sum w_i
  long m() const { return static_cast<long>(a.size()) - 1; }
};

/// Derives and checks the chain data; Error("WeightOutOfRange") when a weight
/// leaves (0, 1/2], Error("BadExponents") for malformed exponents.
ChainTypeSpec make_chain_spec(const std::vector<long>& exponents);

/// p = prod_l (x^{r_l} - 1)^{(-1)^{m-l}} with exact division, validated with
/// the derived b; the Milnor number must equal deg p.
HorPolynomial chain_type(const ChainTypeSpec& spec);

/// The three embedded indefinite banded examples (n = 22, 24, 25) with their
/// frozen reference data; any mismatch throws Error("ExampleMismatch").
struct IndefiniteExample {
  int index = 1;
  int b = 2;
  std::vector<long> phi_factors;
  HorPolynomial hp;
  Int trace;
  Spectrum sp;
  Rat var;
  Rat bound;           // (alpha_n - alpha_1)/12
  bool variance_equal; // var == bound (strict < otherwise)
};
IndefiniteExample indefinite_example(int index);
std::vector<IndefiniteExample> reproduce_indefinite_examples();

}  // namespace latb
