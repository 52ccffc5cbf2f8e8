#pragma once

#include "latb/cyclotomic.hpp"

namespace latb {

/// B_{2k} from the defining recurrence sum_j C(m+1,j) B_j = 0, B_0 = 1.
/// `two_k` must be even and >= 0.
Rat bernoulli_number(long two_k);

/// V_0, V_2, ..., V_{2K}: exact power sums of a symmetric spectrum.
struct MomentVector {
  std::vector<Rat> v;  // v[k] = V_{2k}
  long K() const { return static_cast<long>(v.size()) - 1; }
};
MomentVector moments(const Spectrum& sp, long K);

/// Gamma_0, Gamma_2, ..., Gamma_{2K}: coefficients (times (2k)!) of
/// V(Sp) * exp(nu * log((t/2)/sinh(t/2))) as a truncated power series.
struct BernoulliMomentVector {
  Rat nu;
  std::vector<Rat> gamma;  // gamma[k] = Gamma_{2k}
  long K() const { return static_cast<long>(gamma.size()) - 1; }
};
BernoulliMomentVector bernoulli_moments(const Spectrum& sp, const Rat& nu, long K);

/// Floating diagnostic: the normalized sequence
///   (-1)^k Gamma_{2k} (2 pi)^{2k} Gamma(nu) / (2 (2k)! (2k)^{nu-1})
/// for k = 1..K against its limit  sum_j cos(2 pi alpha_j).
/// Error("NonpositiveIntegerNu") for nu in Z_{<=0}.
struct LimitSequence {
  std::vector<double> terms;  // k = 1..K
  double target = 0.0;
};
LimitSequence limit_sequence(const Spectrum& sp, const Rat& nu, long K);

/// (1/30) n sum_i (1/2 - w_i) w_i (1 - w_i); weights must lie in (0, 1/2].
Rat gamma4_closed_form(const std::vector<Rat>& weights, const Int& n);

}  // namespace latb
