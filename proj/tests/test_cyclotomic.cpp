#include "helpers.hpp"

#include "latb/builtin.hpp"

using namespace latb;
using namespace latb::testing;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly({Int(-1), Int(1)}));
  CHECK(cyclotomic_poly(6) == IntPoly({Int(1), Int(-1), Int(1)}));
  CHECK(cyclotomic_poly(12) == IntPoly({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
  CHECK(cyclotomic_poly(105).degree() == euler_phi(105));
}

TEST_CASE("factor_quasiunipotent examples") {
  CycloFactorization f =
      factor_quasiunipotent(IntPoly({Int(-1), Int(1), Int(-1), Int(1)}));  // t^3-t^2+t-1
  CHECK(f.phi == std::map<long, long>{{1, 1}, {4, 1}});

  // char poly of the first indefinite banded example's monodromy
  IntPoly p = cyclotomic_poly(3);
  IntPoly x8m1 = IntPoly::x_pow_minus_one(8);
  IntPoly target = x8m1 * x8m1 * p * cyclotomic_poly(6) * cyclotomic_poly(6);
  CycloFactorization g = factor_quasiunipotent(target);
  CHECK(g.phi == std::map<long, long>{{1, 2}, {2, 2}, {3, 1}, {4, 2}, {6, 2}, {8, 2}});

  CHECK(error_code([] {
          factor_quasiunipotent(IntPoly({Int(1), Int(-3), Int(1)}));  // t^2-3t+1
        }) == "NotQuasiunipotent");
}

TEST_CASE("factorization reconstructs its input") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = IntPoly::constant(Int(1));
    long deg = 0;
    while (deg < 12) {
      long m = 1 + static_cast<long>(rng() % 16);
      p = p * cyclotomic_poly(m);
      deg += euler_phi(m);
    }
    CycloFactorization f = factor_quasiunipotent(p);
    CHECK(f.reconstruct() == p);
    CHECK(f.degree() == p.degree());
  }
}

TEST_CASE("spectrum_from_monodromy examples") {
  TriangularSeed a2 = validate_seed(mk({{1, -1}, {0, 1}}));
  CHECK(spectrum_from_monodromy(a2).alphas() == rats({-1, 1}, 6));

  TriangularSeed a3 = validate_seed(mk({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}));
  CHECK(spectrum_from_monodromy(a3).alphas() == rats({-1, 0, 1}, 4));

  TriangularSeed indef = validate_seed(mk({{1, -3}, {0, 1}}));
  CHECK(error_code([&] { spectrum_from_monodromy(indef); }) == "NotSemidefinite");
}

TEST_CASE("spectrum of the 22-dimensional banded example") {
  IntPoly p = IntPoly::constant(Int(1));
  for (long m : {1, 2, 3, 4, 8, 12, 16}) p = p * cyclotomic_poly(m);
  HorPolynomial hp = hor_validate(p, 2);
  TriangularSeed s = banded_seed(hp);
  // the even form is indefinite here, so the [-1/2,1/2]-normalized spectrum
  // does not apply; the banded-family spectrum is the correct one
  CHECK(error_code([&] { spectrum_from_monodromy(s); }) == "NotSemidefinite");
  CHECK(hor_spectrum(hp).alphas() ==
        rats({-21, -12, -9, -9, -8, -6, -6, -4, -4, -3, 0, 0, 3, 4, 4, 6, 6, 8, 9, 9, 12, 21},
             24));
}

TEST_CASE("spectrum_of_polynomial examples") {
  CHECK(spectrum_of_polynomial(IntPoly::x_pow_plus_one(3)).alphas() == rats({-1, 0, 1}, 3));
  IntPoly half = div_exact(IntPoly::x_pow_minus_one(3), IntPoly::x_pow_minus_one(1));
  CHECK(spectrum_of_polynomial(half).alphas() == rats({-1, 1}, 6));
  IntPoly square = IntPoly::x_pow_minus_one(1) * IntPoly::x_pow_minus_one(1);
  CHECK(spectrum_of_polynomial(square).alphas() == rats({-1, 1}, 2));
  CHECK(error_code([] { spectrum_of_polynomial(IntPoly::x_pow_minus_one(1)); }) ==
        "OddUnitMultiplicity");
}

TEST_CASE("spectrum symmetry and the monodromy/polynomial consistency") {
  std::mt19937_64 rng(42);
  int accepted = 0;
  for (int trial = 0; trial < 600 && accepted < 100; ++trial) {
    TriangularSeed s = random_seed(2 + static_cast<Eigen::Index>(rng() % 4), 1, rng);
    if (definiteness(intersection_form(s, 0)) == Definiteness::Other) continue;
    ++accepted;
    Spectrum sp = spectrum_from_monodromy(s);
    const auto& a = sp.alphas();
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] + a[a.size() - 1 - i] == 0);
    Spectrum other = spectrum_of_polynomial(char_poly_negated(char_poly(monodromy(s))));
    CHECK(sp == other);
  }
  CHECK(accepted == 100);
}

TEST_CASE("odd -1 multiplicity is rejected") {
  CycloFactorization f;
  f.phi = {{2, 3}};
  CHECK(error_code([&] { spectrum_from_factorization(f); }) == "OddMinusOneMultiplicity");
}

TEST_CASE("degree bookkeeping") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    HorPolynomial hp = random_hor_polynomial(1 + static_cast<int>(rng() % 2), 18, rng);
    CHECK(hp.fact.degree() == hp.p.degree());
  }
}
