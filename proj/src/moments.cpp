#include "latb/moments.hpp"

#include <cmath>
#include <mutex>

namespace latb {

Rat bernoulli_number(long two_k) {
  if (two_k < 0 || two_k % 2 != 0) fail("BadIndex", "Bernoulli index must be even and >= 0");
  static std::mutex guard;
  static std::vector<Rat> cache;  // cache[m] = B_m, all m (odd included)
  std::lock_guard<std::mutex> lock(guard);
  if (cache.empty()) cache.push_back(Rat(1));
  for (long m = static_cast<long>(cache.size()); m <= two_k; ++m) {
    Rat acc(0);
    for (long j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * cache[static_cast<size_t>(j)];
    cache.push_back(-acc / Rat(binomial(m + 1, m)));
  }
  return cache[static_cast<size_t>(two_k)];
}

MomentVector moments(const Spectrum& sp, long K) {
  if (K < 0) fail("BadIndex", "truncation order must be >= 0");
  MomentVector mv;
  mv.v.assign(static_cast<size_t>(K) + 1, Rat(0));
  mv.v[0] = Rat(static_cast<long>(sp.size()));
  for (const auto& a : sp.alphas()) {
    Rat a2 = a * a, p = a2;
    for (long k = 1; k <= K; ++k) {
      mv.v[static_cast<size_t>(k)] += p;
      p *= a2;
    }
  }
  return mv;
}

namespace {

// series in u = t^2, coefficient k <-> t^{2k}
using USeries = std::vector<Rat>;

// log((t/2)/sinh(t/2)) = sum_{k>=1} (-B_{2k}/(2k)) t^{2k}/(2k)!
USeries log_sinh_series(long K) {
  USeries l(static_cast<size_t>(K) + 1, Rat(0));
  for (long k = 1; k <= K; ++k)
    l[static_cast<size_t>(k)] =
        -bernoulli_number(2 * k) / Rat(2 * k) / Rat(factorial(2 * k));
  return l;
}

// exp of a series with zero constant term:  E' = L' E.
USeries exp_series(const USeries& l, long K) {
  USeries e(static_cast<size_t>(K) + 1, Rat(0));
  e[0] = 1;
  for (long k = 1; k <= K; ++k) {
    Rat acc(0);
    for (long j = 1; j <= k; ++j)
      acc += Rat(j) * l[static_cast<size_t>(j)] * e[static_cast<size_t>(k - j)];
    e[static_cast<size_t>(k)] = acc / Rat(k);
  }
  return e;
}

}  // namespace

BernoulliMomentVector bernoulli_moments(const Spectrum& sp, const Rat& nu, long K) {
  if (K < 0) fail("BadIndex", "truncation order must be >= 0");
  MomentVector mv = moments(sp, K);
  USeries l = log_sinh_series(K);
  for (auto& c : l) c *= nu;
  USeries e = exp_series(l, K);
  BernoulliMomentVector out;
  out.nu = nu;
  out.gamma.assign(static_cast<size_t>(K) + 1, Rat(0));
  for (long k = 0; k <= K; ++k) {
    Rat acc(0);
    for (long j = 0; j <= k; ++j)
      acc += mv.v[static_cast<size_t>(j)] / Rat(factorial(2 * j)) *
             e[static_cast<size_t>(k - j)];
    out.gamma[static_cast<size_t>(k)] = acc * Rat(factorial(2 * k));
  }
  return out;
}

namespace {

double log_abs(const Rat& r) {
  long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
  return std::log(std::fabs(dn)) - std::log(std::fabs(dd)) +
         (static_cast<double>(en - ed)) * std::log(2.0);
}

}  // namespace

LimitSequence limit_sequence(const Spectrum& sp, const Rat& nu, long K) {
  if (nu <= 0 && nu.get_den() == 1)
    fail("NonpositiveIntegerNu", "Gamma(nu) undefined for nu in Z_{<=0}");
  BernoulliMomentVector bm = bernoulli_moments(sp, nu, K);
  double nu_d = mpq_get_d(nu.get_mpq_t());
  double gamma_nu = std::tgamma(nu_d);
  LimitSequence seq;
  for (long k = 1; k <= K; ++k) {
    const Rat& g = bm.gamma[static_cast<size_t>(k)];
    if (g == 0) {
      seq.terms.push_back(0.0);
      continue;
    }
    double log_coef = 2 * k * std::log(2 * M_PI) - std::log(2.0) -
                      std::lgamma(2.0 * k + 1.0) - (nu_d - 1.0) * std::log(2.0 * k);
    double sign = (k % 2 == 0 ? 1.0 : -1.0) * (g > 0 ? 1.0 : -1.0) *
                  (gamma_nu > 0 ? 1.0 : -1.0);
    seq.terms.push_back(sign *
                        std::exp(log_coef + log_abs(g) + std::log(std::fabs(gamma_nu))));
  }
  double target = 0.0;
  for (const auto& a : sp.alphas()) target += std::cos(2.0 * M_PI * mpq_get_d(a.get_mpq_t()));
  seq.target = target;
  return seq;
}

Rat gamma4_closed_form(const std::vector<Rat>& weights, const Int& n) {
  Rat acc(0);
  for (const auto& w : weights) {
    if (w <= 0 || w > rat(1, 2))
      fail("WeightOutOfRange", "weight " + to_string(w) + " outside (0, 1/2]");
    acc += (rat(1, 2) - w) * w * (Rat(1) - w);
  }
  return rat(1, 30) * Rat(n) * acc;
}

}  // namespace latb
