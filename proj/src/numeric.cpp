#include "latb/numeric.hpp"

namespace latb {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return rat(Int(s), Int(1));
    return rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail("BadRational", "cannot parse rational '" + s + "'");
  }
}

bool mat_eq(const IMat& a, const IMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool mat_eq(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const IMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

QMat to_rational(const IMat& a) {
  QMat q(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
  return q;
}

IMat to_integer(const QMat& a) {
  IMat m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1)
        fail("NotIntegral", "matrix entry " + to_string(a(i, j)) + " is not an integer");
      m(i, j) = a(i, j).get_num();
    }
  return m;
}

IMat identity(Eigen::Index n) {
  IMat m = IMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Int binomial(long n, long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int isqrt_floor(const Int& n) {
  if (n < 0) fail("NegativeSqrt", "isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// x <= r + sqrt(t)  <=>  x - r <= 0  or  (x - r)^2 <= t
bool le_plus_sqrt(const Int& x, const Rat& r, const Rat& t) {
  Rat d = Rat(x) - r;
  return d <= 0 || d * d <= t;
}

// x >= r - sqrt(t)  <=>  x - r >= 0  or  (x - r)^2 <= t
bool ge_minus_sqrt(const Int& x, const Rat& r, const Rat& t) {
  Rat d = Rat(x) - r;
  return d >= 0 || d * d <= t;
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace

Int floor_plus_sqrt(const Rat& r, const Rat& t) {
  if (t < 0) fail("NegativeSqrt", "sqrt of negative rational");
  // start near floor(r) + floor(sqrt(t)) and fix up with the exact predicate
  Int s = isqrt_floor(t.get_num() * t.get_den()) / t.get_den();
  Int x = rat_floor(r) + s;
  while (le_plus_sqrt(x + 1, r, t)) x += 1;
  while (!le_plus_sqrt(x, r, t)) x -= 1;
  return x;
}

Int ceil_minus_sqrt(const Rat& r, const Rat& t) {
  if (t < 0) fail("NegativeSqrt", "sqrt of negative rational");
  Int s = isqrt_floor(t.get_num() * t.get_den()) / t.get_den();
  Int x = rat_floor(r) - s - 1;
  while (!ge_minus_sqrt(x, r, t)) x += 1;
  while (ge_minus_sqrt(x - 1, r, t)) x -= 1;
  return x;
}

}  // namespace latb
