#include "latb/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latb {

namespace {

const IntPoly& cyclotomic_memo(long m, std::map<long, IntPoly>& memo) {
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  IntPoly q = IntPoly::x_pow_minus_one(m);
  for (long d = 1; d < m; ++d)
    if (m % d == 0) q = div_exact(q, cyclotomic_memo(d, memo));
  return memo.emplace(m, std::move(q)).first->second;
}

}  // namespace

IntPoly cyclotomic_poly(long m) {
  if (m < 1) fail("BadIndex", "cyclotomic index must be >= 1");
  std::map<long, IntPoly> memo;
  return cyclotomic_memo(m, memo);
}

IntPoly CycloFactorization::reconstruct() const {
  IntPoly p = IntPoly::constant(Int(1));
  std::map<long, IntPoly> memo;
  for (const auto& [m, mult] : phi)
    for (long i = 0; i < mult; ++i) p = p * cyclotomic_memo(m, memo);
  return p;
}

long CycloFactorization::degree() const {
  long d = 0;
  for (const auto& [m, mult] : phi) d += euler_phi(m) * mult;
  return d;
}

long CycloFactorization::multiplicity(long m) const {
  auto it = phi.find(m);
  return it == phi.end() ? 0 : it->second;
}

std::string CycloFactorization::str() const {
  if (phi.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, mult] : phi) {
    if (!first) out << " ";
    out << "Phi_" << m;
    if (mult > 1) out << "^" << mult;
    first = false;
  }
  return out.str();
}

CycloFactorization factor_quasiunipotent(const IntPoly& p) {
  if (p.is_zero() || !p.is_monic()) fail("NotMonic", "factorization expects a monic polynomial");
  CycloFactorization f;
  IntPoly rest = p;
  const long deg = p.degree();
  const long bound = 2 * deg * deg + 6;  // phi(m) >= sqrt(m/2) for m > 6
  std::map<long, IntPoly> memo;
  for (long m = 1; m <= bound && rest.degree() > 0; ++m) {
    if (euler_phi(m) > rest.degree()) continue;
    const IntPoly& phi_m = cyclotomic_memo(m, memo);
    while (divides(phi_m, rest)) {
      rest = div_exact(rest, phi_m);
      ++f.phi[m];
      if (rest.degree() == 0) break;
    }
  }
  if (rest.degree() != 0)
    fail("NotQuasiunipotent", "no cyclotomic factorization: remainder " + rest.str());
  return f;
}

bool is_quasiunipotent(const IntPoly& p) {
  try {
    factor_quasiunipotent(p);
    return true;
  } catch (const Error& e) {
    if (e.code() == "NotQuasiunipotent") return false;
    throw;
  }
}

Spectrum::Spectrum(std::vector<Rat> alphas) : a_(std::move(alphas)) {
  std::sort(a_.begin(), a_.end());
  const size_t n = a_.size();
  for (size_t i = 0; i < n; ++i)
    if (a_[i] + a_[n - 1 - i] != 0)
      fail("SpectrumNotSymmetric", "alpha_i + alpha_{n+1-i} != 0");
}

Rat nn_variance(const Spectrum& sp) {
  Rat acc(0);
  for (const auto& a : sp.alphas()) acc += a * a;
  return acc;
}

Rat variance(const Spectrum& sp) {
  if (sp.size() == 0) fail("EmptySpectrum", "variance of an empty spectrum");
  return nn_variance(sp) / Rat(static_cast<long>(sp.size()));
}

Rat spread(const Spectrum& sp) {
  if (sp.size() == 0) fail("EmptySpectrum", "spread of an empty spectrum");
  return sp[sp.size() - 1] - sp[0];
}

namespace {

// alpha == -j/m (mod 1), normalized into (-1/2, 1/2)
Rat angle_of_root(long j, long m) {
  Rat beta = rat(j, m);
  if (2 * j < m) return -beta;
  return Rat(1) - beta;
}

}  // namespace

Spectrum spectrum_from_factorization(const CycloFactorization& f) {
  std::vector<Rat> alphas;
  for (const auto& [m, mult] : f.phi) {
    if (m == 1) {
      for (long c = 0; c < mult; ++c) alphas.emplace_back(0);
    } else if (m == 2) {
      if (mult % 2 != 0)
        fail("OddMinusOneMultiplicity", "eigenvalue -1 has odd multiplicity " +
                                            std::to_string(mult));
      for (long c = 0; c < mult / 2; ++c) {
        alphas.push_back(rat(-1, 2));
        alphas.push_back(rat(1, 2));
      }
    } else {
      for (long j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        for (long c = 0; c < mult; ++c) alphas.push_back(angle_of_root(j, m));
      }
    }
  }
  return Spectrum(std::move(alphas));
}

Spectrum spectrum_from_monodromy(const TriangularSeed& seed) {
  Definiteness d = definiteness(intersection_form(seed, 0));
  if (d == Definiteness::Other)
    fail("NotSemidefinite", "spectrum requires a positive (semi)definite even form");
  return spectrum_from_factorization(factor_quasiunipotent(char_poly(monodromy(seed))));
}

Spectrum spectrum_of_polynomial(const IntPoly& g) {
  CycloFactorization f = factor_quasiunipotent(g);
  std::vector<Rat> alphas;
  for (const auto& [m, mult] : f.phi) {
    if (m == 1) {  // root 1: alpha = +-1/2, forced even split
      if (mult % 2 != 0)
        fail("OddUnitMultiplicity",
             "root 1 has odd multiplicity " + std::to_string(mult));
      for (long c = 0; c < mult / 2; ++c) {
        alphas.push_back(rat(-1, 2));
        alphas.push_back(rat(1, 2));
      }
    } else {
      for (long j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        // alpha + 1/2 == -j/m (mod 1)
        Rat alpha = -rat(j, m) - rat(1, 2);
        while (alpha <= rat(-1, 2)) alpha += 1;
        for (long c = 0; c < mult; ++c) alphas.push_back(alpha);
      }
    }
  }
  return Spectrum(std::move(alphas));
}

}  // namespace latb
