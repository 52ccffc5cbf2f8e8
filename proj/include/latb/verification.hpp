#pragma once

#include "latb/braid.hpp"
#include "latb/builtin.hpp"
#include "latb/hor.hpp"
#include "latb/semidefinite.hpp"

#include <functional>
#include <random>

namespace latb {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure
};

/// The reproduction harness: variance table, variance closed forms, tubular
/// seed classifications, the transpose-automorphism certificate, the three
/// indefinite banded examples, and the banded power-identity sweep.
std::vector<VerifyCheck> run_verification();

/// Random cyclotomic-product polynomial of the banded family with the root-1
/// parity matching b; degree in [1, max_degree].
HorPolynomial random_hor_polynomial(int b, long max_degree, std::mt19937_64& rng);

/// Random unit upper-triangular seed with off-diagonal entries in
/// [-max_entry, max_entry].
TriangularSeed random_seed(Eigen::Index n, long max_entry, std::mt19937_64& rng);

/// Random braid/sign word of the given length for rank n.
BraidWord random_word(Eigen::Index n, size_t length, std::mt19937_64& rng);

}  // namespace latb
