#include "latb/root_systems.hpp"

#include <functional>

namespace latb {

ADEType recognize_ade(const IMat& g) {
  const long n = static_cast<long>(g.rows());
  Int d = det(g);
  if (d == n + 1) return {'A', static_cast<int>(n)};
  if (d == 4 && n == 3) return {'A', 3};
  if (d == 4 && n >= 4) return {'D', static_cast<int>(n)};
  if (d == 3 && n == 6) return {'E', 6};
  if (d == 2 && n == 7) return {'E', 7};
  if (d == 1 && n == 8) return {'E', 8};
  fail("NotARootLattice",
       "rank " + std::to_string(n) + ", determinant " + d.get_str() + " matches no ADE row");
}

std::vector<IVec> RootSet::all() const {
  std::vector<IVec> out;
  out.reserve(2 * reps.size());
  for (const auto& v : reps) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

RootSet enumerate_roots(const IMat& g) {
  if (definiteness(g) != Definiteness::PositiveDefinite)
    fail("NotPositiveDefinite", "root enumeration needs a positive definite form");
  const Eigen::Index n = g.rows();
  // square-root-free decomposition q(x) = sum_i d_i (x_i + sum_{j>i} w_ij x_j)^2
  QMat a = to_rational(g);
  std::vector<Rat> d(static_cast<size_t>(n));
  QMat w = QMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d[static_cast<size_t>(i)] = a(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) w(i, j) = a(i, j) / a(i, i);
    for (Eigen::Index r = i + 1; r < n; ++r)
      for (Eigen::Index c = i + 1; c < n; ++c) a(r, c) -= a(i, r) * a(i, c) / a(i, i);
  }

  RootSet roots;
  IVec x = IVec::Zero(n);
  // backtrack from the last coordinate; budget is what remains of q(x) = 2
  std::function<void(Eigen::Index, Rat)> descend = [&](Eigen::Index i, Rat budget) {
    if (i < 0) {
      if (budget == 0) {
        for (Eigen::Index k = 0; k < n; ++k) {
          if (x(k) == 0) continue;
          if (x(k) > 0) roots.reps.push_back(x);
          return;
        }
      }
      return;
    }
    Rat c(0);
    for (Eigen::Index j = i + 1; j < n; ++j) c += w(i, j) * Rat(x(j));
    Rat t = budget / d[static_cast<size_t>(i)];
    Int lo = ceil_minus_sqrt(-c, t), hi = floor_plus_sqrt(-c, t);
    for (Int v = lo; v <= hi; v += 1) {
      x(i) = v;
      Rat y = Rat(v) + c;
      descend(i - 1, budget - d[static_cast<size_t>(i)] * y * y);
    }
    x(i) = 0;
  };
  descend(n - 1, Rat(2));
  return roots;
}

namespace {

CarterClass make_class(std::string symbol, IntPoly poly) {
  Int tr = -poly.coeff_or_zero(poly.degree() - 1);
  return {std::move(symbol), std::move(poly), tr};
}

IntPoly t_pow_plus(long b) { return IntPoly::x_pow_plus_one(b); }
IntPoly t_pow_minus(long b) { return IntPoly::x_pow_minus_one(b); }

}  // namespace

std::vector<CarterClass> carter_classes(const ADEType& type) {
  std::vector<CarterClass> rows;
  const long n = type.rank;
  if (type.family == 'A') {
    rows.push_back(make_class(type.name(), div_exact(t_pow_minus(n + 1), t_pow_minus(1))));
  } else if (type.family == 'D') {
    rows.push_back(make_class(type.name(), t_pow_plus(n - 1) * t_pow_plus(1)));
    for (long j = 1; 2 * j + 1 < n; ++j)
      rows.push_back(make_class("D_" + std::to_string(n) + "(a_" + std::to_string(j) + ")",
                                t_pow_plus(n - 1 - j) * t_pow_plus(j + 1)));
  } else if (type.rank == 6) {
    rows.push_back(make_class(
        "E_6", div_exact(t_pow_plus(6) * t_pow_minus(3), t_pow_plus(2) * t_pow_minus(1))));
    rows.push_back(make_class("E_6(a_1)", div_exact(t_pow_minus(9), t_pow_minus(3))));
    rows.push_back(make_class(
        "E_6(a_2)", div_exact(t_pow_minus(6) * t_pow_plus(3), t_pow_minus(2) * t_pow_plus(1))));
  } else if (type.rank == 7) {
    rows.push_back(make_class("E_7", div_exact(t_pow_plus(9) * t_pow_plus(1), t_pow_plus(3))));
    rows.push_back(make_class("E_7(a_1)", t_pow_plus(7)));
    rows.push_back(make_class("E_7(a_2)", div_exact(t_pow_plus(6) * t_pow_plus(3), t_pow_plus(2))));
    rows.push_back(make_class("E_7(a_3)", div_exact(t_pow_plus(5) * t_pow_plus(3), t_pow_plus(1))));
    rows.push_back(
        make_class("E_7(a_4)", div_exact(t_pow_plus(3).pow(3), t_pow_plus(1).pow(2))));
  } else if (type.rank == 8) {
    rows.push_back(make_class(
        "E_8", div_exact(t_pow_plus(15) * t_pow_plus(1), t_pow_plus(5) * t_pow_plus(3))));
    rows.push_back(make_class("E_8(a_1)", div_exact(t_pow_plus(12), t_pow_plus(4))));
    rows.push_back(make_class("E_8(a_2)", div_exact(t_pow_plus(10), t_pow_plus(2))));
    rows.push_back(
        make_class("E_8(a_3)", div_exact(t_pow_plus(6).pow(2), t_pow_plus(2).pow(2))));
    rows.push_back(make_class("E_8(a_4)", div_exact(t_pow_plus(9), t_pow_plus(1))));
    rows.push_back(make_class(
        "E_8(a_5)", div_exact(t_pow_minus(15) * t_pow_minus(1), t_pow_minus(5) * t_pow_minus(3))));
    rows.push_back(
        make_class("E_8(a_6)", div_exact(t_pow_plus(5).pow(2), t_pow_plus(1).pow(2))));
    rows.push_back(make_class("E_8(a_7)", div_exact(t_pow_plus(6) * t_pow_plus(3).pow(2),
                                                    t_pow_plus(2) * t_pow_plus(1).pow(2))));
    rows.push_back(
        make_class("E_8(a_8)", div_exact(t_pow_plus(3).pow(4), t_pow_plus(1).pow(4))));
  } else {
    fail("NotARootLattice", "no such E-type rank");
  }
  for (const auto& row : rows)
    if (row.char_poly.degree() != n) fail("Internal", "class table degree mismatch");
  return rows;
}

CarterClass carter_class(const TriangularSeed& seed) {
  IMat g = intersection_form(seed, 0);
  ADEType type = recognize_ade(g);
  IntPoly w_char = char_poly_negated(char_poly(monodromy(seed)));
  for (auto& row : carter_classes(type))
    if (row.char_poly == w_char) return row;
  fail("UnknownClass",
       "char poly " + w_char.str() + " is not quasi-Coxeter for " + type.name());
}

DefiniteReport classify_definite(const TriangularSeed& seed) {
  IMat g = intersection_form(seed, 0);
  if (!is_connected(cdd(seed))) fail("NotConnected", "classification needs a connected diagram");
  if (definiteness(g) != Definiteness::PositiveDefinite)
    fail("NotPositiveDefinite", "classification needs a positive definite even form");

  DefiniteReport rep;
  rep.type = recognize_ade(g);
  IMat m = monodromy(seed);
  rep.trace = trace(m);
  rep.w_char = char_poly_negated(char_poly(m));
  rep.cls = carter_class(seed);
  rep.sp = spectrum_from_monodromy(seed);
  rep.var = variance(rep.sp);
  rep.bound = spread(rep.sp) / 12;

  bool by_trace = rep.trace == 1;
  bool by_variance = rep.var == rep.bound;
  bool by_class = rep.cls.is_coxeter();
  if (by_trace != by_variance || by_trace != by_class)
    fail("Internal", "trace, variance and class tests disagree on " + rep.type.name());
  rep.distinguished = by_trace;
  return rep;
}

}  // namespace latb
