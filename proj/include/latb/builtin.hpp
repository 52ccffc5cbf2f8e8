#pragma once

#include "latb/root_systems.hpp"

namespace latb {

/// Seed of the standard ADE diagram: A_n a path 1-...-n; D_n a path
/// 1-...-(n-2) with n-1 and n attached to n-2; E_n a path 1-...-(n-1) with n
/// attached to the branch vertex (3, 4 resp. 5).  All edges weight -1.
TriangularSeed ade_seed(const ADEType& type);

/// The four tubular diagrams: the affine diagram of the underlying type with
/// the affine vertex doubled; the doubled pair is joined by an edge of
/// weight +2 and sits last in the numbering.
enum class TubularType { D4, E6, E7, E8 };
std::string tubular_name(TubularType t);        // "D4^(1,1)", ...
std::string tubular_verdict_name(TubularType t);  // "E~6", ..., "D4 tubular"
TriangularSeed tubular_seed(TubularType t);

/// One row of the variance table: the quasi-Coxeter class together with the
/// exact value of 12*nnVar(Sp), alpha_1 + 1/2, n*(alpha_n - alpha_1) and the
/// equality/strict-inequality verdict.
struct VarianceRow {
  ADEType type;
  CarterClass cls;
  Rat twelve_nnvar;
  Rat alpha1_plus_half;
  Rat n_spread;
  bool equality;  // 12 nnVar == n (alpha_n - alpha_1); strictly > otherwise
};

/// Expected row values from closed forms (the frozen oracle for the table).
VarianceRow expected_variance_row(const ADEType& type, const CarterClass& cls);

/// Row computed from the class polynomial via spectrum_of_polynomial.
VarianceRow computed_variance_row(const ADEType& type, const CarterClass& cls);

/// All (type, class) pairs: A_n and D_n families up to max_rank, all E rows.
std::vector<std::pair<ADEType, CarterClass>> variance_table_domain(int max_rank);

/// JSON content of the shipped data file: figure seed matrices and the
/// instantiated class-polynomial rows, regenerated from the closed forms.
std::string builtin_tables_json(int max_rank = 12);

}  // namespace latb
