#include "latb/braid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace latb {

std::string token_str(const BraidToken& t) {
  switch (t.kind) {
    case BraidToken::Kind::Sigma: return "s" + std::to_string(t.j);
    case BraidToken::Kind::SigmaInv: return "S" + std::to_string(t.j);
    default: return "d" + std::to_string(t.j);
  }
}

std::string word_str(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += token_str(w[i]);
  }
  return out;
}

BraidWord parse_word(const std::string& s) {
  BraidWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) fail("BadToken", "cannot parse braid token '" + tok + "'");
    int j = 0;
    try {
      j = std::stoi(tok.substr(1));
    } catch (...) {
      fail("BadToken", "cannot parse braid token '" + tok + "'");
    }
    switch (tok[0]) {
      case 's': w.push_back(BraidToken::sigma(j)); break;
      case 'S': w.push_back(BraidToken::sigma_inv(j)); break;
      case 'd': w.push_back(BraidToken::delta(j)); break;
      default: fail("BadToken", "cannot parse braid token '" + tok + "'");
    }
  }
  return w;
}

BasisTuple standard_basis_tuple(Eigen::Index n) { return identity(n); }

namespace {

void check_token_range(const TriangularSeed& seed, const BraidToken& t) {
  int limit = (t.kind == BraidToken::Kind::Delta) ? static_cast<int>(seed.n())
                                                  : static_cast<int>(seed.n()) - 1;
  if (t.j < 1 || t.j > limit)
    fail("IndexOutOfRange", "token " + token_str(t) + " for rank " + std::to_string(seed.n()));
}

}  // namespace

TriangularSeed act_on_matrix(const TriangularSeed& seed, const BraidToken& t) {
  check_token_range(seed, t);
  const Eigen::Index n = seed.n();
  IMat result = seed.s();
  const Eigen::Index p = t.j - 1;
  // the conjugating matrices differ from the identity only in rows/columns
  // j, j+1 (resp. j for the sign change), so update just those
  switch (t.kind) {
    case BraidToken::Kind::Sigma: {
      Int a = -result(p, p + 1);  // rows: (r_j, r_{j+1}) <- (a r_j + r_{j+1}, r_j)
      for (Eigen::Index col = 0; col < n; ++col) {
        Int rj = result(p, col);
        result(p, col) = a * rj + result(p + 1, col);
        result(p + 1, col) = rj;
      }
      for (Eigen::Index row = 0; row < n; ++row) {
        Int cj = result(row, p);
        result(row, p) = a * cj + result(row, p + 1);
        result(row, p + 1) = cj;
      }
      break;
    }
    case BraidToken::Kind::SigmaInv: {
      Int a = seed.s()(p, p + 1);  // block inverse [[0,1],[1,-a]]
      for (Eigen::Index col = 0; col < n; ++col) {
        Int rj = result(p, col);
        result(p, col) = result(p + 1, col);
        result(p + 1, col) = rj - a * result(p + 1, col);
      }
      for (Eigen::Index row = 0; row < n; ++row) {
        Int cj = result(row, p);
        result(row, p) = result(row, p + 1);
        result(row, p + 1) = cj - a * result(row, p + 1);
      }
      break;
    }
    default:
      for (Eigen::Index col = 0; col < n; ++col) result(p, col) = -result(p, col);
      for (Eigen::Index row = 0; row < n; ++row) result(row, p) = -result(row, p);
  }
  try {
    return validate_seed(result);
  } catch (const Error&) {
    throw std::logic_error("braid action left the triangular matrices: " + token_str(t));
  }
}

TriangularSeed apply_word(const TriangularSeed& seed, const BraidWord& w) {
  TriangularSeed cur = seed;
  for (const auto& t : w) cur = act_on_matrix(cur, t);
  return cur;
}

BasisTuple act_on_tuple(const TriangularSeed& ambient, const BasisTuple& tuple,
                        const BraidToken& t) {
  if (tuple.rows() != ambient.n() || tuple.cols() != ambient.n())
    fail("DimensionMismatch", "tuple size does not match ambient rank");
  check_token_range(ambient, t);
  BasisTuple out = tuple;
  Eigen::Index p = t.j - 1;
  switch (t.kind) {
    case BraidToken::Kind::Sigma: {
      IVec vj = tuple.col(p), vj1 = tuple.col(p + 1);
      Int l = l_pair(ambient, vj1, vj);
      out.col(p) = vj1 - vj * l;
      out.col(p + 1) = vj;
      break;
    }
    case BraidToken::Kind::SigmaInv: {
      IVec vj = tuple.col(p), vj1 = tuple.col(p + 1);
      Int l = l_pair(ambient, vj1, vj);
      out.col(p) = vj1;
      out.col(p + 1) = vj - vj1 * l;
      break;
    }
    default: out.col(p) = -tuple.col(p);
  }
  return out;
}

BasisTuple apply_word_tuple(const TriangularSeed& ambient, const BasisTuple& tuple,
                            const BraidWord& w) {
  BasisTuple cur = tuple;
  for (const auto& t : w) cur = act_on_tuple(ambient, cur, t);
  return cur;
}

IMat seed_of_tuple(const TriangularSeed& ambient, const BasisTuple& tuple) {
  return tuple.transpose() * ambient.s() * tuple;
}

bool equivariance_check(const TriangularSeed& seed, const BraidWord& w) {
  BasisTuple v = apply_word_tuple(seed, standard_basis_tuple(seed.n()), w);
  TriangularSeed direct = apply_word(seed, w);
  return mat_eq(seed_of_tuple(seed, v), direct.s());
}

namespace {

std::string orbit_key(const IMat& m) {
  std::string key;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      key += m(i, j).get_str();
      key += ',';
    }
  return key;
}

std::vector<BraidToken> generator_order(Eigen::Index n) {
  std::vector<BraidToken> gens;
  for (int j = 1; j < n; ++j) gens.push_back(BraidToken::sigma(j));
  for (int j = 1; j < n; ++j) gens.push_back(BraidToken::sigma_inv(j));
  for (int j = 1; j <= n; ++j) gens.push_back(BraidToken::delta(j));
  return gens;
}

Int max_abs_entry(const IMat& m) {
  Int best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > best) best = abs(m(i, j));
  return best;
}

}  // namespace

BraidWord OrbitReport::witness(size_t idx) const {
  BraidWord w;
  long cur = static_cast<long>(idx);
  while (cur > 0) {
    w.push_back(parents[static_cast<size_t>(cur)].second);
    cur = parents[static_cast<size_t>(cur)].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

OrbitReport enumerate_orbit(const TriangularSeed& seed, const OrbitBudget& budget) {
  OrbitReport report;
  report.seed = seed.s();
  report.max_entry_seen = max_abs_entry(seed.s());

  std::unordered_map<std::string, size_t> index;
  auto push = [&](const IMat& m, long parent, const BraidToken& tok) -> bool {
    std::string key = orbit_key(m);
    if (index.count(key)) return true;
    if (report.matrices.size() >= budget.max_states) return false;
    index.emplace(std::move(key), report.matrices.size());
    report.matrices.push_back(m);
    report.parents.emplace_back(parent, tok);
    Int entry = max_abs_entry(m);
    if (entry > report.max_entry_seen) report.max_entry_seen = entry;
    return true;
  };

  push(seed.s(), -1, BraidToken::delta(1));
  auto gens = generator_order(seed.n());
  bool exceeded = false;
  for (size_t head = 0; head < report.matrices.size(); ++head) {
    TriangularSeed cur = validate_seed(report.matrices[head]);
    ++report.states_expanded;
    for (const auto& g : gens) {
      TriangularSeed next = act_on_matrix(cur, g);
      if (max_abs_entry(next.s()) > budget.max_abs_entry) {
        exceeded = true;  // cannot claim closure once a successor is dropped
        continue;
      }
      if (!push(next.s(), static_cast<long>(head), g)) exceeded = true;
    }
  }
  report.status = exceeded ? OrbitStatus::BudgetExceeded : OrbitStatus::Exhausted;
  return report;
}

bool signs_via_braids_check(const TriangularSeed& seed, const OrbitBudget& budget) {
  OrbitReport orbit = enumerate_orbit(seed, budget);
  if (orbit.status != OrbitStatus::Exhausted)
    fail("OrbitNotExhausted", "sign check requires a fully enumerated orbit");
  for (const auto& m : orbit.matrices)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = i + 1; j < m.cols(); ++j)
        if (abs(m(i, j)) > 1)
          fail("EntriesOutOfRange", "sign check requires all orbit entries in {0,+-1}");

  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < orbit.matrices.size(); ++i) index[orbit_key(orbit.matrices[i])] = i;

  // union-find over sigma edges
  std::vector<size_t> parent(orbit.matrices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Eigen::Index n = seed.n();
  for (size_t i = 0; i < orbit.matrices.size(); ++i) {
    TriangularSeed cur = validate_seed(orbit.matrices[i]);
    for (int j = 1; j < n; ++j) {
      for (auto tok : {BraidToken::sigma(j), BraidToken::sigma_inv(j)}) {
        size_t other = index.at(orbit_key(act_on_matrix(cur, tok).s()));
        parent[find(i)] = find(other);
      }
    }
  }
  for (size_t i = 0; i < orbit.matrices.size(); ++i) {
    TriangularSeed cur = validate_seed(orbit.matrices[i]);
    for (int j = 1; j <= n; ++j) {
      size_t other = index.at(orbit_key(act_on_matrix(cur, BraidToken::delta(j)).s()));
      if (find(other) != find(i)) return false;
    }
  }
  return true;
}

}  // namespace latb
