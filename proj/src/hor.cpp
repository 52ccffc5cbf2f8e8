#include "latb/hor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace latb {

long HorPolynomial::dof() const {
  // pairs {beta_j, 1 - beta_j} carry one parameter each; beta = 1/2 is fixed,
  // and for b=2 one zero is pinned at 0
  long free_pairs = (b == 1) ? n() / 2 : (n() - 1) / 2;
  return free_pairs;
}

HorPolynomial hor_validate(const IntPoly& p, int b) {
  if (b != 1 && b != 2) fail("BadIndex", "b must be 1 or 2");
  if (p.is_zero() || !p.is_monic()) fail("NotPalindromic", "polynomial must be monic");
  const long n = p.degree();
  for (long j = 0; j <= n; ++j) {
    Int rhs = p.coeff_or_zero(j);
    if (b == 2) rhs = -rhs;
    if (p.coeff_or_zero(n - j) != rhs)
      fail("NotPalindromic", "coefficient symmetry p_{n-j} = (-1)^{b-1} p_j fails at j = " +
                                 std::to_string(j));
  }
  HorPolynomial hp;
  hp.b = b;
  hp.p = p;
  hp.fact = factor_quasiunipotent(p);

  long unit_mult = hp.fact.multiplicity(1);
  if (b == 2 && unit_mult % 2 == 0)
    fail("MissingRootAtOne", "b=2 requires an odd multiplicity of the root 1");
  if (b == 1 && unit_mult % 2 != 0)
    fail("NotPalindromic", "b=1 requires an even multiplicity of the root 1");

  // roots written e^{-2 pi i beta}: Phi_m contributes beta = j/m over j
  // coprime to m; the root 1 splits between beta = 0 and beta = 1 so that the
  // multiset is symmetric under beta -> 1 - beta (minus one pinned 0 if b=2)
  long zeros = (unit_mult + (b == 2 ? 1 : 0)) / 2;
  for (long c = 0; c < zeros; ++c) hp.betas.emplace_back(0);
  for (long c = 0; c < unit_mult - zeros; ++c) hp.betas.emplace_back(1);
  for (const auto& [m, mult] : hp.fact.phi) {
    if (m == 1) continue;
    for (long j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      for (long c = 0; c < mult; ++c) hp.betas.push_back(rat(j, m));
    }
  }
  std::sort(hp.betas.begin(), hp.betas.end());
  return hp;
}

IMat companion_matrix(const HorPolynomial& hp) {
  const long n = hp.n();
  IMat r = IMat::Zero(n, n);
  for (long j = 0; j < n; ++j) r(0, j) = -hp.p.coeff_or_zero(n - 1 - j);
  for (long i = 1; i < n; ++i) r(i, i - 1) = 1;
  return r;
}

TriangularSeed banded_seed(const HorPolynomial& hp) {
  const long n = hp.n();
  IMat s = identity(n);
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) s(i, j) = hp.p.coeff_or_zero(n - (j - i));
  return validate_seed(s);
}

std::optional<HorPolynomial> recognize_banded(const TriangularSeed& seed) {
  const long n = static_cast<long>(seed.n());
  std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
  coeffs[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    Int c = seed.s()(0, d);
    for (long i = 0; i + d < n; ++i)
      if (seed.s()(i, i + d) != c) return std::nullopt;
    coeffs[static_cast<size_t>(n - d)] = c;
  }
  for (int b : {1, 2}) {
    coeffs[0] = (b == 1) ? 1 : -1;
    try {
      HorPolynomial hp = hor_validate(IntPoly(coeffs), b);
      if (mat_eq(banded_seed(hp).s(), seed.s())) return hp;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

bool companion_power_identity(const HorPolynomial& hp) {
  TriangularSeed s = banded_seed(hp);
  IMat lhs = monodromy(s);
  if (hp.b % 2 == 1) lhs = -lhs;
  IMat r = companion_matrix(hp);
  IMat power = identity(hp.n());
  for (long i = 0; i < hp.n(); ++i) power = power * r;
  return mat_eq(lhs, power);
}

Spectrum hor_spectrum(const HorPolynomial& hp) {
  const long n = hp.n();
  std::vector<Rat> tilde(static_cast<size_t>(n));
  for (long j = 1; j <= n; ++j)
    tilde[static_cast<size_t>(j - 1)] =
        Rat(n) * hp.betas[static_cast<size_t>(j - 1)] - (Rat(j) - rat(hp.b, 2));
  if (hp.b == 1) {
    for (long j = 1; j <= n; ++j)
      if (tilde[static_cast<size_t>(j - 1)] + tilde[static_cast<size_t>(n - j)] != 0)
        fail("SymmetryViolated", "alpha~_j + alpha~_{n+1-j} != 0");
  } else {
    if (tilde[0] != 0) fail("SymmetryViolated", "alpha~_1 != 0 for b=2");
    for (long j = 2; j <= n; ++j)
      if (tilde[static_cast<size_t>(j - 1)] + tilde[static_cast<size_t>(n + 1 - j)] != 0)
        fail("SymmetryViolated", "alpha~_j + alpha~_{n+2-j} != 0");
  }
  return Spectrum(std::move(tilde));
}

namespace {

struct RealizableSearch {
  std::map<Rat, long> pool;  // value -> remaining count
  std::vector<Rat> seq;      // positions 1..n as built
  long n;
  int b;

  bool take(const Rat& v) {
    auto it = pool.find(v);
    if (it == pool.end() || it->second == 0) return false;
    --it->second;
    return true;
  }
  void put(const Rat& v) { ++pool[v]; }

  // positions are filled in mirror pairs from the outside in
  bool search(long pos) {
    long mirror = (b == 1) ? n + 1 - pos : n + 2 - pos;
    if (pos > (b == 1 ? (n + 1) / 2 : (n + 2) / 2) || pos > mirror) return full_check();
    if (pos == mirror) {  // middle position pairs with itself: value 0
      if (!take(Rat(0))) return false;
      seq[static_cast<size_t>(pos - 1)] = 0;
      if (full_check()) return true;
      put(Rat(0));
      return false;
    }
    std::vector<Rat> candidates;
    for (const auto& [v, c] : pool)
      if (c > 0) candidates.push_back(v);
    for (const auto& v : candidates) {
      Rat mv = -v;
      if (!take(v)) continue;
      if (v != mv && !take(mv)) {
        put(v);
        continue;
      }
      if (v == mv && !take(mv)) {  // needs two zeros
        put(v);
        continue;
      }
      seq[static_cast<size_t>(pos - 1)] = v;
      seq[static_cast<size_t>(mirror - 1)] = mv;
      bool ok = true;
      if (b == 1 && pos == 1 && v < rat(-1, 2)) ok = false;
      if (ok && pos >= 2 && seq[static_cast<size_t>(pos - 1)] < seq[static_cast<size_t>(pos - 2)] - 1)
        ok = false;
      if (ok && search(pos + 1)) return true;
      put(v);
      put(mv);
    }
    return false;
  }

  bool full_check() {
    for (const auto& [v, c] : pool)
      if (c != 0) return false;
    for (size_t i = 1; i < seq.size(); ++i)
      if (seq[i] < seq[i - 1] - 1) return false;
    if (b == 1 && n >= 1 && seq[0] < rat(-1, 2)) return false;
    return true;
  }
};

}  // namespace

bool hor_realizable(std::vector<Rat> values, int b) {
  if (b != 1 && b != 2) fail("BadIndex", "b must be 1 or 2");
  const long n = static_cast<long>(values.size());
  if (n == 0) return false;
  RealizableSearch s;
  s.n = n;
  s.b = b;
  s.seq.assign(static_cast<size_t>(n), Rat(0));
  for (auto& v : values) ++s.pool[v];
  if (b == 2) {  // alpha~_1 = 0 is pinned
    if (!s.take(Rat(0))) return false;
    s.seq[0] = 0;
    return s.search(2);
  }
  return s.search(1);
}

ChainTypeSpec make_chain_spec(const std::vector<long>& exponents) {
  if (exponents.empty() || exponents[0] < 2) fail("BadExponents", "need a_0 >= 2");
  for (size_t i = 1; i < exponents.size(); ++i)
    if (exponents[i] < 1) fail("BadExponents", "need a_i >= 1");
  ChainTypeSpec spec;
  spec.a = exponents;
  const long m = spec.m();
  spec.r.assign(static_cast<size_t>(m) + 2, Int(1));  // r[k+1] = r_k = a_0..a_k
  for (long k = 0; k <= m; ++k)
    spec.r[static_cast<size_t>(k) + 1] = spec.r[static_cast<size_t>(k)] * exponents[static_cast<size_t>(k)];
  spec.b = ((m + 1) % 2 == 0) ? 2 : 1;
  spec.milnor = 0;
  for (long l = -1; l <= m; ++l) {
    Int term = spec.r[static_cast<size_t>(l + 1)];
    spec.milnor += ((m - l) % 2 == 0) ? term : -term;
  }
  if (spec.milnor <= 0) fail("BadExponents", "nonpositive Milnor number");
  Rat prev;
  for (long i = 0; i <= m; ++i) {
    Rat w = (i == 0) ? rat(1, exponents[0])
                     : (Rat(1) - prev) / Rat(exponents[static_cast<size_t>(i)]);
    if (w <= 0 || w > rat(1, 2))
      fail("WeightOutOfRange",
           "chain weight w_" + std::to_string(i) + " = " + to_string(w) + " outside (0, 1/2]");
    spec.weights.push_back(w);
    prev = w;
  }
  spec.nu = Rat(m + 1);
  for (const auto& w : spec.weights) spec.nu -= 2 * w;
  return spec;
}

HorPolynomial chain_type(const ChainTypeSpec& spec) {
  const long m = spec.m();
  IntPoly num = IntPoly::constant(Int(1));
  IntPoly den = IntPoly::constant(Int(1));
  for (long l = -1; l <= m; ++l) {
    if (spec.r[static_cast<size_t>(l + 1)].fits_slong_p() == 0)
      fail("BadExponents", "exponent product too large");
    long rl = spec.r[static_cast<size_t>(l + 1)].get_si();
    if ((m - l) % 2 == 0) num = num * IntPoly::x_pow_minus_one(rl);
    else den = den * IntPoly::x_pow_minus_one(rl);
  }
  IntPoly p = div_exact(num, den);  // InexactDivision signals bad data
  if (Int(p.degree()) != spec.milnor)
    fail("Internal", "chain polynomial degree disagrees with the Milnor number");
  return hor_validate(p, spec.b);
}

namespace {

IntPoly phi_product(const std::vector<long>& ms) {
  IntPoly p = IntPoly::constant(Int(1));
  for (long m : ms) p = p * cyclotomic_poly(m);
  return p;
}

}  // namespace

IndefiniteExample indefinite_example(int index) {
  IndefiniteExample ex;
  ex.index = index;
  switch (index) {
    case 1:
      ex.b = 2;
      ex.phi_factors = {1, 2, 3, 4, 8, 12, 16};
      break;
    case 2:
      ex.b = 1;
      ex.phi_factors = {5, 8, 15, 30};
      break;
    case 3:
      ex.b = 2;
      ex.phi_factors = {1, 6, 11, 28};
      break;
    default:
      fail("BadIndex", "example index must be 1, 2 or 3");
  }
  ex.hp = hor_validate(phi_product(ex.phi_factors), ex.b);
  TriangularSeed s = banded_seed(ex.hp);
  ex.trace = trace(monodromy(s));
  ex.sp = hor_spectrum(ex.hp);
  ex.var = variance(ex.sp);
  ex.bound = spread(ex.sp) / 12;
  ex.variance_equal = ex.var == ex.bound;
  return ex;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail("ExampleMismatch", what);
}

std::vector<Rat> scaled(const std::vector<long>& nums, long den) {
  std::vector<Rat> out;
  out.reserve(nums.size());
  for (long v : nums) out.push_back(rat(v, den));
  return out;
}

}  // namespace

std::vector<IndefiniteExample> reproduce_indefinite_examples() {
  std::vector<IndefiniteExample> out;
  for (int i : {1, 2, 3}) out.push_back(indefinite_example(i));
  const IndefiniteExample& e1 = out[0];

  require(e1.hp.n() == 22, "example 1 has n = 22");
  std::vector<Rat> beta_expected = scaled(
      {0, 3, 4, 6, 9, 12, 15, 16, 18, 20, 21, 24, 27, 28, 30, 32, 33, 36, 39, 42, 44, 45}, 48);
  require(e1.hp.betas == beta_expected, "example 1 beta list");

  std::vector<Rat> unordered_expected = scaled(
      {0, 9, -4, -6, 3, 12, 21, 8, 6, 4, -9, 0, 9, -4, -6, -8, -21, -12, -3, 6, 4, -9}, 24);
  std::vector<Rat> tilde;
  for (long j = 1; j <= 22; ++j)
    tilde.push_back(Rat(22) * e1.hp.betas[static_cast<size_t>(j - 1)] - Rat(j - 1));
  require(tilde == unordered_expected, "example 1 unordered spectral list");

  std::vector<Rat> sorted_expected = scaled(
      {-21, -12, -9, -9, -8, -6, -6, -4, -4, -3, 0, 0, 3, 4, 4, 6, 6, 8, 9, 9, 12, 21}, 24);
  require(e1.sp.alphas() == sorted_expected, "example 1 sorted spectral numbers");

  CycloFactorization m_fact =
      factor_quasiunipotent(char_poly(monodromy(banded_seed(e1.hp))));
  CycloFactorization m_expected;
  m_expected.phi = {{1, 2}, {2, 2}, {3, 1}, {4, 2}, {6, 2}, {8, 2}};
  require(m_fact == m_expected, "example 1 monodromy factorization");

  require(e1.trace == 1, "example 1 trace");
  require(e1.var == rat(7, 48), "example 1 variance 7/48");
  require(e1.variance_equal, "example 1 variance equality");

  BernoulliMomentVector bm = bernoulli_moments(e1.sp, e1.bound * 12, 2);
  require(bm.gamma[1] == 0, "example 1 Gamma_2 = 0");
  require(bm.gamma[2] == rat(7777, 23040), "example 1 Gamma_4 = 7777/23040");
  // decimal prefix 0.3375 of Gamma_4
  require(bm.gamma[2] >= rat(3375, 10000) && bm.gamma[2] < rat(3376, 10000),
          "example 1 Gamma_4 decimal prefix");
  require(bm.gamma[2] > rat(77, 480), "example 1 Gamma_4 exceeds n nu / 240");
  require(rat(77, 480) == Rat(22) * e1.bound * 12 / 240, "example 1 bound n nu / 240");

  require(out[1].hp.n() == 24 && out[1].trace == 1 && out[1].variance_equal,
          "example 2 trace and variance equality");
  require(out[2].hp.n() == 25 && out[2].trace == 1 && !out[2].variance_equal &&
              out[2].var < out[2].bound,
          "example 3 trace and strict variance inequality");
  return out;
}

}  // namespace latb
