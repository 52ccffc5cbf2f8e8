#pragma once

#include "latb/lattice.hpp"

#include <map>

namespace latb {

/// Generator tokens of Br_n x {+-1}^n: sigma(j) / sigma(j)^{-1} for
/// 1 <= j <= n-1 and delta(j) for 1 <= j <= n.  Serialized "s3", "S3", "d2".
struct BraidToken {
  enum class Kind { Sigma, SigmaInv, Delta };
  Kind kind;
  int j;  // 1-based

  static BraidToken sigma(int j) { return {Kind::Sigma, j}; }
  static BraidToken sigma_inv(int j) { return {Kind::SigmaInv, j}; }
  static BraidToken delta(int j) { return {Kind::Delta, j}; }
  bool operator==(const BraidToken& o) const { return kind == o.kind && j == o.j; }
};

using BraidWord = std::vector<BraidToken>;

std::string token_str(const BraidToken& t);
std::string word_str(const BraidWord& w);
BraidWord parse_word(const std::string& s);

/// Ordered tuple of lattice vectors, stored as matrix columns.
using BasisTuple = IMat;

BasisTuple standard_basis_tuple(Eigen::Index n);

/// Conjugation action on the matrix; the result is asserted to be unit
/// upper-triangular again (a failure would mean a formula transcription bug).
TriangularSeed act_on_matrix(const TriangularSeed& seed, const BraidToken& t);
TriangularSeed apply_word(const TriangularSeed& seed, const BraidWord& w);

/// Hurwitz-style action on tuples of vectors of the fixed ambient lattice
/// `ambient`; tuples must stay triangular (which holds along any orbit of the
/// standard tuple).
BasisTuple act_on_tuple(const TriangularSeed& ambient, const BasisTuple& tuple,
                        const BraidToken& t);
BasisTuple apply_word_tuple(const TriangularSeed& ambient, const BasisTuple& tuple,
                            const BraidWord& w);

/// Gram-of-L matrix of a tuple: the seed matrix of the transported basis.
IMat seed_of_tuple(const TriangularSeed& ambient, const BasisTuple& tuple);

/// Tuple route and matrix route agree for the word (the actions commute with
/// taking the Gram matrix).
bool equivariance_check(const TriangularSeed& seed, const BraidWord& w);

struct OrbitBudget {
  size_t max_states = 100000;
  Int max_abs_entry = Int(1000000);
};

enum class OrbitStatus { Exhausted, BudgetExceeded };

/// BFS closure of the seed under all 3n-2 generator tokens, deterministic
/// order sigma_1..sigma_{n-1}, sigma_1^{-1}..sigma_{n-1}^{-1}, delta_1..delta_n.
struct OrbitReport {
  IMat seed;
  std::vector<IMat> matrices;  // discovery order; matrices[0] == seed
  OrbitStatus status = OrbitStatus::Exhausted;
  size_t states_expanded = 0;
  Int max_entry_seen = Int(0);

  /// First-discovered word mapping the seed to matrices[idx].
  BraidWord witness(size_t idx) const;
  size_t size() const { return matrices.size(); }

  std::vector<std::pair<long, BraidToken>> parents;  // (-1, _) for the seed
};

OrbitReport enumerate_orbit(const TriangularSeed& seed, const OrbitBudget& budget);

/// Every sign change delta_j is realized by sigma moves alone on each orbit
/// member.  Requires an exhausted orbit with all entries in {0,+-1}.
bool signs_via_braids_check(const TriangularSeed& seed, const OrbitBudget& budget);

}  // namespace latb
