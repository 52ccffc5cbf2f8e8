#include "latb/builtin.hpp"

#include <nlohmann/json.hpp>

namespace latb {

namespace {

IMat seed_from_edges(Eigen::Index n, const std::vector<std::tuple<int, int, int>>& edges) {
  IMat s = identity(n);
  for (const auto& [i, j, w] : edges) s(i - 1, j - 1) = w;
  return s;
}

}  // namespace

TriangularSeed ade_seed(const ADEType& type) {
  const int n = type.rank;
  std::vector<std::tuple<int, int, int>> edges;
  if (type.family == 'A') {
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1, -1);
  } else if (type.family == 'D') {
    if (n < 4) fail("BadRank", "D_n needs n >= 4");
    for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1, -1);
    edges.emplace_back(n - 2, n - 1, -1);
    edges.emplace_back(n - 2, n, -1);
  } else {
    if (n < 6 || n > 8) fail("BadRank", "E_n needs n in {6,7,8}");
    for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1, -1);
    edges.emplace_back(n == 6 ? 3 : (n == 7 ? 4 : 5), n, -1);
  }
  return validate_seed(seed_from_edges(n, edges));
}

std::string tubular_name(TubularType t) {
  switch (t) {
    case TubularType::D4: return "D4^(1,1)";
    case TubularType::E6: return "E6^(1,1)";
    case TubularType::E7: return "E7^(1,1)";
    default: return "E8^(1,1)";
  }
}

std::string tubular_verdict_name(TubularType t) {
  switch (t) {
    case TubularType::D4: return "D4 tubular";
    case TubularType::E6: return "E~6";
    case TubularType::E7: return "E~7";
    default: return "E~8";
  }
}

TriangularSeed tubular_seed(TubularType t) {
  std::vector<std::tuple<int, int, int>> edges;
  Eigen::Index n = 0;
  switch (t) {
    case TubularType::D4:
      n = 6;
      edges = {{1, 5, -1}, {2, 5, -1}, {3, 5, -1}, {4, 5, -1},
               {1, 6, -1}, {2, 6, -1}, {3, 6, -1}, {4, 6, -1}, {5, 6, 2}};
      break;
    case TubularType::E6:
      n = 8;
      edges = {{1, 2, -1}, {1, 7, -1}, {3, 7, -1}, {3, 4, -1}, {5, 7, -1},
               {5, 6, -1}, {1, 8, -1}, {3, 8, -1}, {5, 8, -1}, {7, 8, 2}};
      break;
    case TubularType::E7:
      n = 9;
      edges = {{2, 3, -1}, {1, 2, -1}, {1, 8, -1}, {4, 8, -1}, {4, 5, -1}, {5, 6, -1},
               {7, 8, -1}, {1, 9, -1}, {4, 9, -1}, {7, 9, -1}, {8, 9, 2}};
      break;
    default:
      n = 10;
      edges = {{4, 5, -1}, {3, 4, -1}, {2, 3, -1}, {1, 2, -1}, {1, 9, -1}, {6, 9, -1},
               {6, 7, -1}, {8, 9, -1}, {1, 10, -1}, {6, 10, -1}, {8, 10, -1}, {9, 10, 2}};
  }
  return validate_seed(seed_from_edges(n, edges));
}

namespace {

VarianceRow finish_row(const ADEType& type, const CarterClass& cls, Rat twelve_nnvar,
                       Rat alpha1_plus_half) {
  VarianceRow row;
  row.type = type;
  row.cls = cls;
  row.twelve_nnvar = std::move(twelve_nnvar);
  row.alpha1_plus_half = std::move(alpha1_plus_half);
  long n = type.rank;
  // alpha_n - alpha_1 = 1 - 2 (alpha_1 + 1/2) by the spectrum symmetry
  row.n_spread = Rat(n) * (Rat(1) - 2 * row.alpha1_plus_half);
  row.equality = row.twelve_nnvar == row.n_spread;
  return row;
}

}  // namespace

VarianceRow expected_variance_row(const ADEType& type, const CarterClass& cls) {
  const long n = type.rank;
  const std::string& sym = cls.symbol;
  if (type.family == 'A')
    return finish_row(type, cls, rat(n * (n - 1), n + 1), rat(1, n + 1));
  if (type.family == 'D') {
    if (cls.is_coxeter())
      return finish_row(type, cls, rat(n * (n - 2), n - 1), rat(1, 2 * (n - 1)));
    auto open = sym.find("(a_");
    long j = std::stol(sym.substr(open + 3, sym.size() - open - 4));
    return finish_row(type, cls, Rat(n) - rat(1, n - 1 - j) - rat(1, j + 1),
                      rat(1, 2 * (n - 1 - j)));
  }
  struct ELiteral {
    const char* symbol;
    long var_num, var_den, a_num, a_den;
  };
  // E-type literals; E_8(a_3) and E_8(a_8) carry the values forced by the
  // closed forms (26/3 and 32/3).
  static const ELiteral table[] = {
      {"E_6", 5, 1, 1, 12},        {"E_6(a_1)", 50, 9, 1, 9},   {"E_6(a_2)", 6, 1, 1, 6},
      {"E_7", 56, 9, 1, 18},       {"E_7(a_1)", 48, 7, 1, 14},  {"E_7(a_2)", 7, 1, 1, 12},
      {"E_7(a_3)", 112, 15, 1, 10}, {"E_7(a_4)", 8, 1, 1, 6},
      {"E_8", 112, 15, 1, 30},     {"E_8(a_1)", 49, 6, 1, 24},  {"E_8(a_2)", 42, 5, 1, 20},
      {"E_8(a_3)", 26, 3, 1, 12},  {"E_8(a_4)", 80, 9, 1, 18},  {"E_8(a_5)", 136, 15, 1, 15},
      {"E_8(a_6)", 48, 5, 1, 10},  {"E_8(a_7)", 29, 3, 1, 12},  {"E_8(a_8)", 32, 3, 1, 6},
  };
  for (const auto& row : table)
    if (sym == row.symbol)
      return finish_row(type, cls, rat(row.var_num, row.var_den), rat(row.a_num, row.a_den));
  fail("UnknownClass", "no variance row for " + sym);
}

VarianceRow computed_variance_row(const ADEType& type, const CarterClass& cls) {
  Spectrum sp = spectrum_of_polynomial(cls.char_poly);
  if (sp.size() != static_cast<size_t>(type.rank))
    fail("Internal", "spectrum size mismatch for " + cls.symbol);
  Rat twelve_nnvar = 12 * nn_variance(sp);
  Rat alpha1_plus_half = sp[0] + rat(1, 2);
  return finish_row(type, cls, twelve_nnvar, alpha1_plus_half);
}

std::vector<std::pair<ADEType, CarterClass>> variance_table_domain(int max_rank) {
  std::vector<std::pair<ADEType, CarterClass>> rows;
  for (int n = 1; n <= max_rank; ++n) {
    ADEType t{'A', n};
    for (auto& c : carter_classes(t)) rows.emplace_back(t, c);
  }
  for (int n = 4; n <= max_rank; ++n) {
    ADEType t{'D', n};
    for (auto& c : carter_classes(t)) rows.emplace_back(t, c);
  }
  for (int n : {6, 7, 8}) {
    ADEType t{'E', n};
    for (auto& c : carter_classes(t)) rows.emplace_back(t, c);
  }
  return rows;
}

namespace {

nlohmann::ordered_json matrix_json(const IMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json poly_json(const IntPoly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

}  // namespace

std::string builtin_tables_json(int max_rank) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  nlohmann::ordered_json seeds;
  for (int n = 1; n <= max_rank; ++n)
    seeds["A_" + std::to_string(n)] = matrix_json(ade_seed({'A', n}).s());
  for (int n = 4; n <= max_rank; ++n)
    seeds["D_" + std::to_string(n)] = matrix_json(ade_seed({'D', n}).s());
  for (int n : {6, 7, 8}) seeds["E_" + std::to_string(n)] = matrix_json(ade_seed({'E', n}).s());
  doc["ade_seeds"] = std::move(seeds);

  nlohmann::ordered_json tubular;
  for (TubularType t : {TubularType::D4, TubularType::E6, TubularType::E7, TubularType::E8})
    tubular[tubular_name(t)] = matrix_json(tubular_seed(t).s());
  doc["tubular_seeds"] = std::move(tubular);

  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const auto& [type, cls] : variance_table_domain(max_rank)) {
    nlohmann::ordered_json row;
    row["lattice"] = type.name();
    row["class"] = cls.symbol;
    row["char_poly"] = poly_json(cls.char_poly);
    row["trace"] = cls.trace.get_str();
    classes.push_back(std::move(row));
  }
  doc["quasi_coxeter_classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

}  // namespace latb
