#pragma once

#include "latb/lattice.hpp"

#include <map>

namespace latb {

/// Phi_m, by iterated exact division of x^m - 1 by Phi_d over proper
/// divisors d.
IntPoly cyclotomic_poly(long m);

/// Complete factorization of a monic integer polynomial into cyclotomics.
struct CycloFactorization {
  std::map<long, long> phi;  // m -> multiplicity
  IntPoly reconstruct() const;
  long degree() const;
  long multiplicity(long m) const;
  std::string str() const;
  bool operator==(const CycloFactorization& o) const { return phi == o.phi; }
};

/// Error("NotQuasiunipotent") if a nonconstant remainder survives the scan
/// (m runs to 2 deg^2 + 6, which covers every m with phi(m) <= deg).
CycloFactorization factor_quasiunipotent(const IntPoly& p);
bool is_quasiunipotent(const IntPoly& p);

/// Sorted rationals symmetric about 0 (alpha_i + alpha_{n+1-i} = 0).
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts and checks the symmetry; Error("SpectrumNotSymmetric") otherwise.
  explicit Spectrum(std::vector<Rat> alphas);
  const std::vector<Rat>& alphas() const { return a_; }
  size_t size() const { return a_.size(); }
  const Rat& operator[](size_t i) const { return a_[i]; }
  bool operator==(const Spectrum& o) const { return a_ == o.a_; }

 private:
  std::vector<Rat> a_;
};

Rat nn_variance(const Spectrum& sp);  // sum alpha_j^2
Rat variance(const Spectrum& sp);     // nnVar / n
Rat spread(const Spectrum& sp);       // alpha_n - alpha_1

/// Spectrum of a seed whose even form is positive (semi)definite: rationals
/// alpha in [-1/2,1/2] with e^{-2 pi i alpha_j} the eigenvalues of the
/// monodromy, eigenvalue -1 split evenly between -1/2 and +1/2.
Spectrum spectrum_from_monodromy(const TriangularSeed& seed);

/// Spectrum of a unit-root polynomial g: e^{-2 pi i (alpha_j + 1/2)} are the
/// roots of g, with the multiplicity of 1 as a root split evenly between
/// -1/2 and 1/2.  (Matches spectrum_from_monodromy on g = char poly of -M.)
Spectrum spectrum_of_polynomial(const IntPoly& g);

/// Spectrum of a cyclotomic factorization read as eigenvalues of M.
Spectrum spectrum_from_factorization(const CycloFactorization& f);

}  // namespace latb
