#include "latb/polynomial.hpp"

#include <sstream>

namespace latb {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
  IntPoly p;
  p.c_.push_back(std::move(v));
  p.trim();
  return p;
}

IntPoly IntPoly::monomial(long k, Int lead) {
  IntPoly p;
  p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
  p.c_.back() = std::move(lead);
  p.trim();
  return p;
}

IntPoly IntPoly::x_pow_minus_one(long m) {
  IntPoly p = monomial(m);
  p.c_[0] = -1;
  return p;
}

IntPoly IntPoly::x_pow_plus_one(long m) {
  IntPoly p = monomial(m);
  p.c_[0] = 1;
  return p;
}

Int IntPoly::coeff_or_zero(long k) const {
  if (k < 0 || k > degree()) return Int(0);
  return c_[static_cast<size_t>(k)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<Int> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
  std::vector<Int> r = c_;
  for (auto& v : r) v *= s;
  return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
  return acc;
}

IMat IntPoly::eval(const IMat& m) const {
  if (m.rows() != m.cols()) fail("NonSquare", "polynomial of a non-square matrix");
  const Eigen::Index n = m.rows();
  IMat acc = IMat::Zero(n, n);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * m;
    for (Eigen::Index d = 0; d < n; ++d) acc(d, d) += c_[i];
  }
  return acc;
}

IntPoly IntPoly::reflect() const {
  std::vector<Int> r = c_;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::substitute_power(long k) const {
  if (is_zero()) return IntPoly();
  std::vector<Int> r(static_cast<size_t>(degree()) * k + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] = c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(long e) const {
  IntPoly acc = IntPoly::constant(Int(1));
  for (long i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Int& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    if (!first) out << (a > 0 ? " + " : " - ");
    else if (a < 0) out << "-";
    Int mag = abs(a);
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

void divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot, IntPoly& rem) {
  if (!den.is_monic()) fail("NotMonic", "divisor must be monic");
  std::vector<Int> r = num.coeffs();
  long dn = den.degree();
  long dq = num.degree() - dn;
  if (dq < 0) {
    quot = IntPoly();
    rem = num;
    return;
  }
  std::vector<Int> q(static_cast<size_t>(dq) + 1, Int(0));
  for (long k = dq; k >= 0; --k) {
    Int lead = r[static_cast<size_t>(k + dn)];
    if (lead == 0) continue;
    q[static_cast<size_t>(k)] = lead;
    for (long j = 0; j <= dn; ++j) r[static_cast<size_t>(k + j)] -= lead * den[j];
  }
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly q, r;
  divmod_monic(num, den, q, r);
  if (!r.is_zero())
    fail("InexactDivision", den.str() + " does not divide " + num.str());
  return q;
}

bool divides(const IntPoly& den, const IntPoly& num) {
  IntPoly q, r;
  divmod_monic(num, den, q, r);
  return r.is_zero();
}

IntPoly char_poly_negated(const IntPoly& p) {
  long n = p.degree();
  IntPoly q = p.reflect();
  return (n % 2 == 0) ? q : -q;
}

}  // namespace latb
