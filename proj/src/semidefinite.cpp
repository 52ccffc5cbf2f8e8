#include "latb/semidefinite.hpp"

#include "latb/builtin.hpp"

namespace latb {

SemidefReport semidef_decompose(const TriangularSeed& seed, int pass) {
  if (!is_connected(cdd(seed))) fail("NotConnected", "decomposition needs a connected diagram");
  IMat g = intersection_form(seed, 0);
  if (definiteness(g) != Definiteness::PositiveSemidefiniteDegenerate)
    fail("NotSemidefinite", "decomposition needs a degenerate positive semidefinite form");

  SemidefReport rep;
  rep.seed = seed.s();
  const Eigen::Index n = seed.n();
  IMat m = monodromy(seed);
  rep.trace = trace(m);

  KernelSplit split = integer_kernel_with_complement(g, pass);
  rep.radical = split.kernel;
  rep.complement = split.complement;
  const Eigen::Index r = rep.radical.cols();
  rep.nbar = static_cast<long>(n - r);

  // Rad I^(0) = ker(M + id): M acts as -id on the radical
  if (!mat_eq(m * rep.radical, IMat(-rep.radical)))
    fail("Internal", "radical is not the (-1)-eigenspace of the monodromy");

  rep.quotient_gram = rep.complement.transpose() * g * rep.complement;
  rep.quotient_type = recognize_ade(rep.quotient_gram);

  // write M in the basis [radical | complement]; the radical block must stay
  // closed for the quotient action to be defined
  IMat u(n, n);
  u.leftCols(r) = rep.radical;
  u.rightCols(n - r) = rep.complement;
  IMat x = unimodular_inverse(u) * m * u;
  if (!is_zero(IMat(x.bottomLeftCorner(n - r, r))))
    fail("Internal", "monodromy does not preserve the radical");
  rep.quotient_monodromy = x.bottomRightCorner(n - r, n - r);

  rep.wbar_char = char_poly_negated(char_poly(rep.quotient_monodromy));
  rep.wbar_fact = factor_quasiunipotent(rep.wbar_char);
  rep.k_a = rep.wbar_fact.multiplicity(1);

  CycloFactorization full = factor_quasiunipotent(char_poly_negated(char_poly(m)));
  long unit_mult = full.multiplicity(1);
  if (unit_mult % 2 != 0) fail("Internal", "odd unit multiplicity in -M");
  rep.k_b = unit_mult / 2 - rep.k_a;

  if (static_cast<long>(r) != rep.k_a + 2 * rep.k_b)
    fail("Internal", "radical rank != k_a + 2 k_b");
  return rep;
}

namespace {

// char poly of the Coxeter element of D_b for b >= 2 (D_2 = A_1+A_1,
// D_3 = A_3 give the same closed form).
IntPoly d_coxeter_poly(long b) {
  return IntPoly::x_pow_plus_one(b - 1) * IntPoly::x_pow_plus_one(1);
}

IntPoly a_coxeter_poly(long c) {
  return div_exact(IntPoly::x_pow_minus_one(c + 1), IntPoly::x_pow_minus_one(1));
}

IntPoly phi_power(long m, long e) { return cyclotomic_poly(m).pow(e); }

}  // namespace

TraceCheck trace_table_check(const SemidefReport& rep) {
  TraceCheck check;
  if (rep.trace < 1) return check;
  check.trace_at_least_one = true;

  const long nbar = rep.nbar;
  const std::string q = rep.quotient_type.name();
  std::optional<std::string> matched;
  auto try_row = [&](bool fits, const std::string& id) {
    if (!fits) return;
    if (matched) fail("Internal", "trace table rows overlap: " + *matched + " / " + id);
    matched = id;
  };

  if (rep.quotient_type.family == 'D') {
    // quotient D_{2r3}, -Mbar a product of r3 D_2-Coxeter elements
    if (nbar % 2 == 0) {
      long r3 = nbar / 2;
      try_row(r3 >= 2 && rep.k_a == 0 && rep.k_b == r3 - 1 && rep.trace == 2 &&
                  rep.wbar_char == phi_power(2, 2 * r3),
              q + " / " + std::to_string(r3) + "D_2");
    }
    // quotient D_{2r4+b}, -Mbar = r4 D_2-Coxeter factors + one D_b Coxeter
    for (long b = 3; b <= nbar - 2; ++b) {
      if ((nbar - b) % 2 != 0) continue;
      long r4 = (nbar - b) / 2;
      try_row(r4 >= 1 && rep.k_a == 0 && rep.k_b == r4 && rep.trace == 1 &&
                  rep.wbar_char == phi_power(2, 2 * r4) * d_coxeter_poly(b),
              q + " / " + std::to_string(r4) + "D_2+D_" + std::to_string(b));
    }
    // quotient D_{c+1+2r3}, -Mbar = A_c Coxeter + r3 D_2-Coxeter factors + a
    // fixed line (k_a = 1)
    for (long r3 = 1; 2 * r3 + 2 <= nbar; ++r3) {
      long c = nbar - 1 - 2 * r3;
      if (c < 1) continue;
      try_row(rep.k_a == 1 && rep.k_b == r3 - 1 && rep.trace == 1 &&
                  rep.wbar_char ==
                      phi_power(1, 1) * a_coxeter_poly(c) * phi_power(2, 2 * r3),
              q + " / A_" + std::to_string(c) + "+" + std::to_string(r3) + "D_2");
    }
  } else if (rep.quotient_type.family == 'E') {
    if (nbar == 6) {
      try_row(rep.k_a == 0 && rep.k_b == 1 && rep.trace == 1 && rep.wbar_char == phi_power(3, 3),
              "E_6 / 3A_2");
      try_row(rep.k_a == 1 && rep.k_b == 0 && rep.trace == 1 &&
                  rep.wbar_char == phi_power(1, 1) * phi_power(3, 2) * phi_power(2, 1),
              "E_6 / 2A_2+A_1");
    } else if (nbar == 7) {
      try_row(rep.k_a == 0 && rep.k_b == 1 && rep.trace == 1 &&
                  rep.wbar_char == phi_power(2, 3) * phi_power(4, 2),
              "E_7 / 2A_3+A_1");
      try_row(rep.k_a == 0 && rep.k_b == 3 && rep.trace == 1 && rep.wbar_char == phi_power(2, 7),
              "E_7 / 7A_1");
      try_row(rep.k_a == 1 && rep.k_b == 0 && rep.trace == 1 &&
                  rep.wbar_char == phi_power(1, 1) * a_coxeter_poly(3) * a_coxeter_poly(2) *
                                       phi_power(2, 1),
              "E_7 / A_3+A_2+A_1");
    } else if (nbar == 8) {
      try_row(rep.k_a == 0 && rep.k_b == 1 && rep.trace == 1 &&
                  rep.wbar_char == a_coxeter_poly(5) * a_coxeter_poly(2) * phi_power(2, 1),
              "E_8 / A_5+A_2+A_1");
      try_row(rep.k_a == 1 && rep.k_b == 0 && rep.trace == 1 &&
                  rep.wbar_char == phi_power(1, 1) * a_coxeter_poly(4) * a_coxeter_poly(2) *
                                       phi_power(2, 1),
              "E_8 / A_4+A_2+A_1");
    }
  }
  if (!matched)
    fail("NoRowMatches", "tr(M) = " + rep.trace.get_str() + " with quotient " + q +
                             " and -Mbar " + rep.wbar_fact.str() +
                             " matches no trace-table row");
  check.row = *matched;
  return check;
}

std::string semidef_verdict_name(SemidefVerdict v) {
  switch (v) {
    case SemidefVerdict::E6Elliptic: return "E~6";
    case SemidefVerdict::E7Elliptic: return "E~7";
    case SemidefVerdict::E8Elliptic: return "E~8";
    case SemidefVerdict::D4Tubular: return "D4 tubular";
    default: return "not distinguished";
  }
}

SemidefClassification classify_semidefinite(const TriangularSeed& seed) {
  SemidefClassification out;
  out.rep = semidef_decompose(seed);
  out.sp = spectrum_from_monodromy(seed);
  out.var = variance(out.sp);
  out.bound = spread(out.sp) / 12;
  if (out.var > out.bound) {
    out.verdict = SemidefVerdict::NotDistinguished;
    return out;
  }

  const SemidefReport& r = out.rep;
  auto matches = [&](char fam, int rank, const IntPoly& wbar) {
    return r.quotient_type == ADEType{fam, rank} && r.k_a == 0 && r.k_b == 1 &&
           r.wbar_char == wbar;
  };
  if (matches('D', 4, phi_power(2, 4))) {
    if (r.trace != 2) fail("Internal", "D4 tubular row requires trace 2");
    out.verdict = SemidefVerdict::D4Tubular;
    out.row = "D_4 / 2D_2";
  } else if (matches('E', 6, phi_power(3, 3))) {
    if (r.trace != 1) fail("Internal", "E~6 row requires trace 1");
    out.verdict = SemidefVerdict::E6Elliptic;
    out.row = "E_6 / 3A_2";
  } else if (matches('E', 7, phi_power(2, 3) * phi_power(4, 2))) {
    if (r.trace != 1) fail("Internal", "E~7 row requires trace 1");
    out.verdict = SemidefVerdict::E7Elliptic;
    out.row = "E_7 / 2A_3+A_1";
  } else if (matches('E', 8, phi_power(2, 2) * phi_power(3, 2) * phi_power(6, 1))) {
    if (r.trace != 1) fail("Internal", "E~8 row requires trace 1");
    out.verdict = SemidefVerdict::E8Elliptic;
    out.row = "E_8 / A_5+A_2+A_1";
  } else {
    fail("VarianceHoldsButNoRow", "variance bound holds but quotient " +
                                      r.quotient_type.name() + " with -Mbar " +
                                      r.wbar_fact.str() + " matches no row");
  }
  if (out.var != out.bound)
    fail("Internal", "matched row must achieve exact variance equality");
  return out;
}

IMat d4_tubular_transpose_automorphism() {
  // g(e_i) = e_i + (e_5 - e_6) for i <= 4, g(e_5) = -2 e_5 + 3 e_6,
  // g(e_6) = -e_5 + 2 e_6; columns are images in the basis e.
  IMat g = identity(6);
  for (Eigen::Index i = 0; i < 4; ++i) {
    g(4, i) = 1;
    g(5, i) = -1;
  }
  g(4, 4) = -2;
  g(5, 4) = 3;
  g(4, 5) = -1;
  g(5, 5) = 2;
  return g;
}

bool transpose_automorphism_check(const TriangularSeed& seed, const IMat& g) {
  IMat form = intersection_form(seed, 0);
  if (!mat_eq(IMat(g.transpose() * form * g), form)) return false;
  IMat m = monodromy(seed);
  if (!mat_eq(IMat(g * m), IMat(m * g))) return false;
  Int d = det(g);
  if (d != 1 && d != -1) return false;
  return mat_eq(IMat(g.transpose() * seed.s() * g), IMat(seed.s().transpose()));
}

}  // namespace latb
