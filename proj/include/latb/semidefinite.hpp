#pragma once

#include "latb/root_systems.hpp"

#include <optional>

namespace latb {

/// Radical/quotient decomposition of a connected seed whose even form is
/// positive semidefinite with nontrivial radical.
struct SemidefReport {
  IMat seed;
  IMat radical;          // columns: primitive basis of Rad I^(0) = ker(M+id)
  IMat complement;       // columns completing the radical to a basis of Z^n
  long nbar = 0;         // quotient rank
  IMat quotient_gram;    // Gram of I^(0) on the complement images
  ADEType quotient_type;
  IMat quotient_monodromy;  // induced action of M on the quotient
  IntPoly wbar_char;        // char poly of -M on the quotient
  CycloFactorization wbar_fact;
  long k_a = 0;  // multiplicity of 1 as eigenvalue of -Mbar
  long k_b = 0;  // 2(k_a+k_b) = multiplicity of 1 as gen. eigenvalue of -M
  Int trace;     // of M
};

/// `pass` selects the complement completion (any value is valid; different
/// values exercise the independence of the quotient from that choice).
SemidefReport semidef_decompose(const TriangularSeed& seed, int pass = 0);

/// Outcome of the trace table lookup for tr(M) >= 1.
struct TraceCheck {
  bool trace_at_least_one = false;
  std::string row;  // matched row id when trace_at_least_one
};

/// If tr(M) >= 1, matches the report against the embedded trace-table row
/// patterns and returns the row id; Error("NoRowMatches") when none fits
/// (that would contradict the classification and is surfaced loudly).
TraceCheck trace_table_check(const SemidefReport& rep);

enum class SemidefVerdict { E6Elliptic, E7Elliptic, E8Elliptic, D4Tubular, NotDistinguished };
std::string semidef_verdict_name(SemidefVerdict v);

struct SemidefClassification {
  SemidefReport rep;
  Spectrum sp;
  Rat var;
  Rat bound;  // (alpha_n - alpha_1)/12
  SemidefVerdict verdict = SemidefVerdict::NotDistinguished;
  std::string row;  // matched variance-table row when distinguished
};

/// The semidefinite classifier: variance inequality, then row matching with
/// cross-asserted quotient data scheme (Error("VarianceHoldsButNoRow") if the
/// variance bound holds but no row fits).
SemidefClassification classify_semidefinite(const TriangularSeed& seed);

/// The explicit non-braid automorphism of the D4 tubular lattice: fixes the
/// classes mod radical, flips the sign of e_5 - e_6, and conjugates the seed
/// matrix to its transpose.
IMat d4_tubular_transpose_automorphism();

/// G respects I^(0), commutes with M, is unimodular, and G^t S G = S^t.
bool transpose_automorphism_check(const TriangularSeed& seed, const IMat& g);

}  // namespace latb
