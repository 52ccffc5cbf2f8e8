#include "helpers.hpp"

#include "latb/builtin.hpp"

using namespace latb;
using namespace latb::testing;

namespace {

TriangularSeed a2() { return validate_seed(mk({{1, -1}, {0, 1}})); }
TriangularSeed a3() { return validate_seed(mk({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}})); }

}  // namespace

TEST_CASE("validate_seed") {
  CHECK(validate_seed(mk({{1, -1}, {0, 1}})).n() == 2);
  CHECK(error_code([] { validate_seed(mk({{1, 0}, {1, 1}})); }) == "NotUnitUpperTriangular");
  CHECK(error_code([] { validate_seed(mk({{2, 0}, {0, 1}})); }) == "NotUnitUpperTriangular");
}

TEST_CASE("monodromy examples") {
  IMat m2 = monodromy(a2());
  CHECK(mat_eq(m2, mk({{0, 1}, {-1, 1}})));
  CHECK(trace(m2) == 1);
  CHECK(mat_eq(monodromy(validate_seed(identity(3))), identity(3)));
  IMat m3 = monodromy(a3());
  CHECK(mat_eq(m3, mk({{0, 0, 1}, {-1, 0, 1}, {0, -1, 1}})));
  CHECK(trace(m3) == 1);
}

TEST_CASE("intersection forms") {
  CHECK(mat_eq(intersection_form(a2(), 0), mk({{2, -1}, {-1, 2}})));
  CHECK(mat_eq(intersection_form(a2(), 1), mk({{0, -1}, {1, 0}})));
  CHECK(mat_eq(intersection_form(validate_seed(identity(2)), 0), IMat(identity(2) * Int(2))));
}

TEST_CASE("monodromy preserves both forms and has determinant 1") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    TriangularSeed s = random_seed(2 + static_cast<Eigen::Index>(rng() % 5), 3, rng);
    IMat m = monodromy(s);
    CHECK(det(m) == 1);
    for (int k : {0, 1}) {
      IMat form = intersection_form(s, k);
      CHECK(mat_eq(IMat(m.transpose() * form * m), form));
    }
    CHECK(trace(intersection_form(s, 0)) == 2 * s.n());
  }
}

TEST_CASE("bilinear form identity I^(k) = L((M + (-1)^k id) . , . )") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    TriangularSeed s = random_seed(2 + static_cast<Eigen::Index>(rng() % 5), 3, rng);
    IMat m = monodromy(s);
    for (int k : {0, 1}) {
      IMat shifted = m;
      for (Eigen::Index d = 0; d < s.n(); ++d) shifted(d, d) += (k == 0 ? 1 : -1);
      CHECK(mat_eq(IMat(shifted.transpose() * l_matrix(s)), intersection_form(s, k)));
    }
  }
}

TEST_CASE("diagram and connectivity") {
  CoxeterDynkinDiagram d3 = cdd(a3());
  CHECK(d3.edges.size() == 2);
  CHECK(is_connected(d3));

  CoxeterDynkinDiagram flat = cdd(validate_seed(identity(2)));
  CHECK(flat.edges.empty());
  CHECK_FALSE(is_connected(flat));

  CoxeterDynkinDiagram tub = cdd(tubular_seed(TubularType::D4));
  CHECK(is_connected(tub));
  bool found56 = false;
  for (const auto& e : tub.edges)
    if (e.i == 4 && e.j == 5) {
      found56 = true;
      CHECK(e.weight == 2);
    }
  CHECK(found56);
}

TEST_CASE("dot export styles edges by sign") {
  std::string dot = to_dot(cdd(tubular_seed(TubularType::D4)));
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("label=\"-1\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
}

TEST_CASE("apply_reflection examples") {
  IVec e1 = vec({1, 0}), e2 = vec({0, 1});
  CHECK(mat_eq(IMat(apply_reflection(a2(), 0, e1, e2)), IMat(vec({1, 1}))));
  CHECK(mat_eq(IMat(apply_reflection(a2(), 0, e1, e1)), IMat(vec({-1, 0}))));
  CHECK(mat_eq(IMat(apply_reflection(a2(), 1, e1, e2)), IMat(vec({1, 1}))));
  CHECK(error_code([&] { apply_reflection(a2(), 0, vec({1, -1}), e2); }) == "NotARoot");
}

TEST_CASE("even reflections are involutions") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 5);
    TriangularSeed s = random_seed(n, 3, rng);
    Eigen::Index i = static_cast<Eigen::Index>(rng() % static_cast<uint64_t>(n));
    IVec a = IVec::Zero(n);
    a(i) = 1;  // basis vectors are roots: I0(e_i, e_i) = 2
    IVec b(n);
    for (Eigen::Index j = 0; j < n; ++j) b(j) = entry(rng);
    IVec once = apply_reflection(s, 0, a, b);
    IVec twice = apply_reflection(s, 0, a, once);
    CHECK(mat_eq(IMat(twice), IMat(b)));
  }
}

TEST_CASE("reflection product equals (-1)^{k+1} times the monodromy") {
  CHECK(reflection_product_check(a2(), 0));
  CHECK(reflection_product_check(a3(), 1));
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    TriangularSeed s = random_seed(1 + static_cast<Eigen::Index>(rng() % 7), 3, rng);
    CHECK(reflection_product_check(s, 0));
    CHECK(reflection_product_check(s, 1));
  }
}
