#include "helpers.hpp"

#include "latb/builtin.hpp"

using namespace latb;
using namespace latb::testing;

TEST_CASE("mat_mul") {
  IMat a = mk({{1, 1}, {1, 0}});
  IMat b = mk({{1, -1}, {0, 1}});
  CHECK(mat_eq(mat_mul(identity(2), a), a));
  CHECK(mat_eq(mat_mul(a, b), mk({{1, 0}, {1, -1}})));
  CHECK(is_zero(mat_mul(a, IMat::Zero(2, 3))));
  CHECK(error_code([&] { mat_mul(a, IMat::Zero(3, 2)); }) == "DimensionMismatch");
}

TEST_CASE("triangular_inverse examples") {
  CHECK(mat_eq(triangular_inverse(mk({{1, -1}, {0, 1}})), mk({{1, 1}, {0, 1}})));
  CHECK(mat_eq(triangular_inverse(identity(4)), identity(4)));
  CHECK(mat_eq(triangular_inverse(mk({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}})),
               mk({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})));
  CHECK(error_code([] { triangular_inverse(mk({{1, 0}, {1, 1}})); }) ==
        "NotUnitUpperTriangular");
  CHECK(error_code([] { triangular_inverse(mk({{2, 0}, {0, 1}})); }) ==
        "NotUnitUpperTriangular");
}

TEST_CASE("triangular_inverse property") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
    TriangularSeed s = random_seed(n, 9, rng);
    CHECK(mat_eq(IMat(s.s() * triangular_inverse(s.s())), identity(n)));
    CHECK(mat_eq(IMat(triangular_inverse(s.s()) * s.s()), identity(n)));
  }
}

TEST_CASE("char_poly examples") {
  IMat m = mk({{0, 1}, {-1, 1}});  // monodromy of the A_2 seed
  CHECK(char_poly(m) == IntPoly({Int(1), Int(-1), Int(1)}));
  CHECK(char_poly(identity(3)) == IntPoly({Int(-1), Int(3), Int(-3), Int(1)}));
  IMat a3 = mk({{0, 0, 1}, {-1, 0, 1}, {0, -1, 1}});
  CHECK(char_poly(a3) == IntPoly({Int(-1), Int(1), Int(-1), Int(1)}));
  CHECK(error_code([] { char_poly(IMat::Zero(2, 3)); }) == "NonSquare");
}

TEST_CASE("char_poly satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 8);
    IMat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(is_zero(char_poly(m).eval(m)));
  }
}

TEST_CASE("det") {
  CHECK(det(mk({{2, -1}, {-1, 2}})) == 3);
  CHECK(det(identity(5)) == 1);
  CHECK(det(mk({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("definiteness examples") {
  CHECK(definiteness(mk({{2, -1}, {-1, 2}})) == Definiteness::PositiveDefinite);
  IMat d4t_gram = intersection_form(tubular_seed(TubularType::D4), 0);
  CHECK(definiteness(d4t_gram) == Definiteness::PositiveSemidefiniteDegenerate);
  CHECK(definiteness(mk({{2, -3}, {-3, 2}})) == Definiteness::Other);
  CHECK(error_code([] { definiteness(mk({{1, 2}, {0, 1}})); }) == "NotSymmetric");
}

namespace {

// exact oracle: recursive symmetric elimination (Schur complements)
Definiteness definiteness_oracle(QMat a) {
  bool degenerate = false;
  while (a.rows() > 0) {
    const Eigen::Index n = a.rows();
    if (a(0, 0) < 0) return Definiteness::Other;
    if (a(0, 0) == 0) {
      for (Eigen::Index j = 1; j < n; ++j)
        if (a(0, j) != 0) return Definiteness::Other;
      degenerate = true;
      a = QMat(a.bottomRightCorner(n - 1, n - 1));
      continue;
    }
    QMat next(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 1; j < n; ++j) next(i - 1, j - 1) = a(i, j) - a(0, i) * a(0, j) / a(0, 0);
    a = next;
  }
  return degenerate ? Definiteness::PositiveSemidefiniteDegenerate
                    : Definiteness::PositiveDefinite;
}

}  // namespace

TEST_CASE("definiteness agrees with the elimination oracle and box sampling") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 6);
    IMat g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      g(i, i) = entry(rng);
      for (Eigen::Index j = i + 1; j < n; ++j) g(i, j) = g(j, i) = entry(rng);
    }
    Definiteness got = definiteness(g);
    CHECK(got == definiteness_oracle(to_rational(g)));

    // necessary direction: x^t g x over a small integer box
    if (n <= 4) {
      bool negative_found = false, zero_nontrivial = false;
      IVec x = IVec::Zero(n);
      std::function<void(Eigen::Index)> scan = [&](Eigen::Index i) {
        if (i == n) {
          Int q = (x.transpose() * g * x)(0, 0);
          if (q < 0) negative_found = true;
          else if (q == 0 && !is_zero(IMat(x))) zero_nontrivial = true;
          return;
        }
        for (long v = -3; v <= 3; ++v) {
          x(i) = v;
          scan(i + 1);
        }
        x(i) = 0;
      };
      scan(0);
      if (got == Definiteness::PositiveDefinite) {
        CHECK_FALSE(negative_found);
        CHECK_FALSE(zero_nontrivial);
      }
      if (got == Definiteness::PositiveSemidefiniteDegenerate) CHECK_FALSE(negative_found);
    }
  }
}

TEST_CASE("integer_kernel examples") {
  CHECK(integer_kernel(mk({{2, -1}, {-1, 2}})).empty());

  IMat gram = intersection_form(tubular_seed(TubularType::D4), 0);
  KernelSplit split = integer_kernel_with_complement(gram);
  CHECK(split.kernel.cols() == 2);
  IVec f1 = vec({0, 0, 0, 0, 1, -1});
  IVec f2 = vec({1, 1, 1, 1, 1, 1});
  CHECK(is_zero(IMat(gram * f1)));
  CHECK(is_zero(IMat(gram * f2)));
  CHECK(in_integer_span(split.kernel, f1));
  CHECK(in_integer_span(split.kernel, f2));

  auto basis = integer_kernel(IMat::Zero(2, 2));
  REQUIRE(basis.size() == 2);
  IMat b(2, 2);
  b.col(0) = basis[0];
  b.col(1) = basis[1];
  CHECK(mat_eq(b, identity(2)));
}

TEST_CASE("integer_kernel is primitive and complements complete a basis") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 5);
    Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng() % 6);
    IMat g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = entry(rng);
    KernelSplit split = integer_kernel_with_complement(g, static_cast<int>(rng() % 2));

    for (Eigen::Index j = 0; j < split.kernel.cols(); ++j)
      CHECK(is_zero(IMat(g * split.kernel.col(j))));

    IMat u(cols, cols);
    u.leftCols(split.kernel.cols()) = split.kernel;
    u.rightCols(split.complement.cols()) = split.complement;
    Int d = det(u);
    CHECK((d == 1 || d == -1));

    // saturation: integer vectors in the rational span lie in the integer span
    if (split.kernel.cols() > 0) {
      IVec combo = IVec::Zero(cols);
      for (Eigen::Index j = 0; j < split.kernel.cols(); ++j)
        combo += split.kernel.col(j) * Int(static_cast<long>(rng() % 7) - 3);
      CHECK(in_integer_span(split.kernel, combo));
    }
  }
}
