#include "latb/report_json.hpp"

namespace latb {

Json json_matrix(const IMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_poly(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return coeffs;
}

Json json_rat(const Rat& r) { return to_string(r); }

Json json_spectrum(const Spectrum& sp) {
  Json arr = Json::array();
  for (const auto& a : sp.alphas()) arr.push_back(to_string(a));
  return arr;
}

Json json_factorization(const CycloFactorization& f) {
  Json phi = Json::object();
  for (const auto& [m, mult] : f.phi) phi[std::to_string(m)] = mult;
  Json out;
  out["phi"] = std::move(phi);
  return out;
}

Json json_orbit(const OrbitReport& orbit) {
  Json out;
  out["status"] = orbit.status == OrbitStatus::Exhausted ? "exhausted" : "budget_exceeded";
  out["size"] = orbit.size();
  out["states_expanded"] = orbit.states_expanded;
  out["max_entry_seen"] = orbit.max_entry_seen.get_str();
  Json members = Json::array();
  for (size_t i = 0; i < orbit.size(); ++i) {
    Json entry;
    entry["matrix"] = json_matrix(orbit.matrices[i]);
    entry["word"] = word_str(orbit.witness(i));
    members.push_back(std::move(entry));
  }
  out["orbit"] = std::move(members);
  return out;
}

Json json_definite(const DefiniteReport& rep) {
  Json out;
  out["case"] = "positive_definite";
  out["verdict"] = rep.distinguished ? "distinguished" : "not_distinguished";
  out["type"] = rep.type.name();
  out["carter_class"] = rep.cls.symbol;
  out["trace"] = rep.trace.get_str();
  out["char_poly_minus_m"] = json_poly(rep.w_char);
  out["spectrum"] = json_spectrum(rep.sp);
  out["variance"] = json_rat(rep.var);
  out["variance_bound"] = json_rat(rep.bound);
  out["variance_equal"] = rep.var == rep.bound;
  return out;
}

Json json_semidefinite(const SemidefClassification& c) {
  Json out;
  out["case"] = "positive_semidefinite_degenerate";
  out["verdict"] = semidef_verdict_name(c.verdict);
  if (!c.row.empty()) out["table_row"] = c.row;
  out["trace"] = c.rep.trace.get_str();
  out["radical_rank"] = static_cast<long>(c.rep.radical.cols());
  out["radical_basis"] = json_matrix(c.rep.radical);
  out["quotient_type"] = c.rep.quotient_type.name();
  out["quotient_gram"] = json_matrix(c.rep.quotient_gram);
  out["k_a"] = c.rep.k_a;
  out["k_b"] = c.rep.k_b;
  out["char_poly_minus_mbar"] = json_poly(c.rep.wbar_char);
  out["minus_mbar_factorization"] = json_factorization(c.rep.wbar_fact);
  out["spectrum"] = json_spectrum(c.sp);
  out["variance"] = json_rat(c.var);
  out["variance_bound"] = json_rat(c.bound);
  out["variance_equal"] = c.var == c.bound;
  return out;
}

Json report_envelope(const std::string& command, const std::string& input_digest,
                     Json payload) {
  Json out;
  out["schema"] = 1;
  out["command"] = command;
  out["input_digest"] = input_digest;
  out["result"] = std::move(payload);
  return out;
}

std::string digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace latb
