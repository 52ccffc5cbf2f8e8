#pragma once

#include "latb/verification.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>

namespace latb::testing {

inline IMat mk(std::initializer_list<std::initializer_list<long>> rows) {
  IMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IVec vec(std::initializer_list<long> entries) {
  IVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = x;
  return v;
}

inline std::vector<Rat> rats(std::initializer_list<long> nums, long den) {
  std::vector<Rat> out;
  for (long v : nums) out.push_back(rat(v, den));
  return out;
}

/// y with basis * y == target and y integral; false if target is outside the
/// integer span.
inline bool in_integer_span(const IMat& basis, const IVec& target) {
  if (basis.cols() == 0) return is_zero(IMat(target));
  QMat b = to_rational(basis);
  QMat gram = b.transpose() * b;
  QVec rhs = b.transpose() * to_rational(IMat(target)).col(0);
  QVec y = rational_solve(gram, rhs);
  for (Eigen::Index i = 0; i < y.rows(); ++i)
    if (y(i).get_den() != 1) return false;
  return mat_eq(QMat(b * y), to_rational(IMat(target)));
}

inline std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace latb::testing
