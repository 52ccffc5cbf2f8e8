#pragma once

#include "latb/numeric.hpp"

namespace latb {

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int v);
  /// x^k
  static IntPoly monomial(long k, Int lead = Int(1));
  /// x^m - 1
  static IntPoly x_pow_minus_one(long m);
  /// x^m + 1
  static IntPoly x_pow_plus_one(long m);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Int& operator[](long k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const { return c_.back(); }
  Int coeff_or_zero(long k) const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;
  IntPoly operator-() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  /// Horner evaluation at a square matrix.
  IMat eval(const IMat& m) const;

  /// p(-x)
  IntPoly reflect() const;
  /// p(x^k)
  IntPoly substitute_power(long k) const;
  IntPoly pow(long e) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Quotient and remainder for a monic divisor; exact integer arithmetic.
void divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot, IntPoly& rem);
/// Exact quotient; Error("InexactDivision") if den does not divide num.
IntPoly div_exact(const IntPoly& num, const IntPoly& den);
bool divides(const IntPoly& den, const IntPoly& num);

/// char poly of -m from char poly of m:  det(tI + m) = (-1)^n p(-t).
IntPoly char_poly_negated(const IntPoly& p);

}  // namespace latb
