#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace latb {

/// Arbitrary-precision signed integer.
using Int = mpz_class;
/// Exact rational, always reduced with positive denominator.
using Rat = mpq_class;

}  // namespace latb

namespace Eigen {

template <>
struct NumTraits<latb::Int> : GenericNumTraits<latb::Int> {
  using Real = latb::Int;
  using NonInteger = latb::Rat;
  using Nested = latb::Int;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40
  };
};

template <>
struct NumTraits<latb::Rat> : GenericNumTraits<latb::Rat> {
  using Real = latb::Rat;
  using NonInteger = latb::Rat;
  using Nested = latb::Rat;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace latb {

using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Error with a stable machine-readable code ("NotUnitUpperTriangular", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& what) {
  throw Error(code, what);
}

/// Reduced rational p/q with positive denominator.
inline Rat rat(const Int& p, const Int& q) {
  if (q == 0) fail("ZeroDenominator", "rational with zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Rat rat(long p, long q) { return rat(Int(p), Int(q)); }

std::string to_string(const Rat& r);  // "p" or "p/q"
std::string to_string(const Int& n);
Rat parse_rat(const std::string& s);

bool mat_eq(const IMat& a, const IMat& b);
bool mat_eq(const QMat& a, const QMat& b);
bool is_zero(const IMat& a);

QMat to_rational(const IMat& a);
/// Exact conversion back; every entry must be integral.
IMat to_integer(const QMat& a);

IMat identity(Eigen::Index n);

Int binomial(long n, long k);
Int factorial(long n);
/// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);
long euler_phi(long m);

/// Largest integer x with x <= r + sqrt(t); t >= 0.
Int floor_plus_sqrt(const Rat& r, const Rat& t);
/// Smallest integer x with x >= r - sqrt(t); t >= 0.
Int ceil_minus_sqrt(const Rat& r, const Rat& t);

}  // namespace latb
