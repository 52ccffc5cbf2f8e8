// latb command-line interface: analyze | orbit | spectrum | moments | chain |
// hor | verify.  Exit codes: 0 success, 1 input error, 2 verification
// mismatch.

#include "latb/report_json.hpp"
#include "latb/verification.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latb;

struct FileInput {
  TriangularSeed seed;
  std::string digest_hex;
};

FileInput read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileError", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();

  std::istringstream parse(bytes);
  long n = 0;
  if (!(parse >> n) || n < 1) fail("ParseError", "first token must be the rank n >= 1");
  IMat m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      std::string tok;
      if (!(parse >> tok)) fail("ParseError", "expected " + std::to_string(n * n) + " entries");
      try {
        m(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        fail("ParseError", "bad integer '" + tok + "'");
      }
    }
  return {validate_seed(m), digest(bytes)};
}

void emit(const Json& doc, bool json_mode, const std::string& human) {
  if (json_mode) std::cout << doc.dump(2) << "\n";
  else std::cout << human;
}

std::string describe_rat(const char* label, const Rat& r) {
  return std::string(label) + " = " + to_string(r);
}

int cmd_analyze(const std::string& path, bool json_mode, bool dot_mode) {
  FileInput input = read_matrix_file(path);
  const TriangularSeed& seed = input.seed;
  if (dot_mode) {
    std::cout << to_dot(cdd(seed));
    return 0;
  }
  auto started = std::chrono::steady_clock::now();
  CoxeterDynkinDiagram diagram = cdd(seed);
  bool connected = is_connected(diagram);
  Definiteness def = definiteness(intersection_form(seed, 0));

  Json payload;
  payload["n"] = static_cast<long>(seed.n());
  payload["matrix"] = json_matrix(seed.s());
  payload["connected"] = connected;
  payload["definiteness"] = definiteness_name(def);
  std::ostringstream human;
  human << "rank " << seed.n() << ", " << (connected ? "connected" : "disconnected")
        << " diagram, even form " << definiteness_name(def) << "\n";

  if (!connected) {
    payload["verdict"] = "disconnected: classification applies to connected diagrams only";
    human << "verdict: disconnected diagram, not classified\n";
  } else if (def == Definiteness::PositiveDefinite) {
    DefiniteReport rep = classify_definite(seed);
    payload["report"] = json_definite(rep);
    human << "verdict: " << (rep.distinguished ? "distinguished " + rep.type.name()
                                               : "not distinguished (class " + rep.cls.symbol + ")")
          << "\n"
          << "  trace(M) = " << rep.trace.get_str() << ", class " << rep.cls.symbol << "\n"
          << "  " << describe_rat("Var", rep.var) << ", "
          << describe_rat("(a_n-a_1)/12", rep.bound) << "\n";
  } else if (def == Definiteness::PositiveSemidefiniteDegenerate) {
    SemidefClassification c = classify_semidefinite(seed);
    payload["report"] = json_semidefinite(c);
    human << "verdict: " << semidef_verdict_name(c.verdict) << "\n"
          << "  trace(M) = " << c.rep.trace.get_str() << ", quotient "
          << c.rep.quotient_type.name() << ", k_a = " << c.rep.k_a << ", k_b = " << c.rep.k_b
          << "\n"
          << "  " << describe_rat("Var", c.var) << ", " << describe_rat("(a_n-a_1)/12", c.bound)
          << "\n";
  } else {
    IMat m = monodromy(seed);
    IntPoly p = char_poly(m);
    Json indef;
    indef["case"] = "indefinite";
    indef["verdict"] = "indefinite: outside the classified (semi)definite cases";
    indef["note"] = "any classification here is conjectural";
    indef["trace"] = trace(m).get_str();
    indef["char_poly_m"] = json_poly(p);
    bool quasi = is_quasiunipotent(p);
    indef["quasiunipotent"] = quasi;
    if (quasi) indef["factorization"] = json_factorization(factor_quasiunipotent(p));
    payload["report"] = std::move(indef);
    human << "verdict: indefinite, outside the classified cases (conjectural territory)\n"
          << "  trace(M) = " << trace(m).get_str() << ", quasiunipotent = "
          << (quasi ? "yes" : "no") << "\n";
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  if (!json_mode) human << "  (" << elapsed.count() << " ms)\n";
  emit(report_envelope("analyze", input.digest_hex, std::move(payload)), json_mode, human.str());
  return 0;
}

int cmd_orbit(const std::string& path, bool json_mode, size_t max_states, long max_entry) {
  FileInput input = read_matrix_file(path);
  OrbitBudget budget;
  budget.max_states = max_states;
  budget.max_abs_entry = Int(max_entry);
  OrbitReport orbit = enumerate_orbit(input.seed, budget);
  std::ostringstream human;
  human << "orbit " << (orbit.status == OrbitStatus::Exhausted ? "exhausted" : "budget exceeded")
        << ", size " << orbit.size() << ", max |entry| " << orbit.max_entry_seen.get_str()
        << "\n";
  emit(report_envelope("orbit", input.digest_hex, json_orbit(orbit)), json_mode, human.str());
  return 0;
}

// Spectrum of a matrix file: the normalized one in the (semi)definite cases,
// the banded-family one when the seed is recognized as banded.
Spectrum spectrum_of_input(const TriangularSeed& seed, std::string* source = nullptr) {
  if (definiteness(intersection_form(seed, 0)) != Definiteness::Other) {
    if (source) *source = "monodromy";
    return spectrum_from_monodromy(seed);
  }
  std::optional<HorPolynomial> hp = recognize_banded(seed);
  if (!hp)
    fail("NotSemidefinite",
         "indefinite seed is not of the banded family; no exact spectrum applies");
  if (source) *source = "banded_family";
  return hor_spectrum(*hp);
}

int cmd_spectrum(const std::string& path, bool json_mode) {
  FileInput input = read_matrix_file(path);
  std::string source;
  Spectrum sp = spectrum_of_input(input.seed, &source);
  IntPoly p = char_poly(monodromy(input.seed));
  Json payload;
  payload["n"] = static_cast<long>(input.seed.n());
  payload["source"] = source;
  payload["char_poly_m"] = json_poly(p);
  payload["factorization"] = json_factorization(factor_quasiunipotent(p));
  payload["spectrum"] = json_spectrum(sp);
  payload["variance"] = json_rat(variance(sp));
  payload["variance_bound"] = json_rat(spread(sp) / 12);
  std::ostringstream human;
  human << "spectrum:";
  for (const auto& a : sp.alphas()) human << " " << to_string(a);
  human << "\n" << describe_rat("Var", variance(sp)) << ", "
        << describe_rat("(a_n-a_1)/12", spread(sp) / 12) << "\n";
  emit(report_envelope("spectrum", input.digest_hex, std::move(payload)), json_mode, human.str());
  return 0;
}

int cmd_moments(const std::string& path, bool json_mode, const std::string& nu_str, long K,
                bool with_limit) {
  FileInput input = read_matrix_file(path);
  Spectrum sp = spectrum_of_input(input.seed);
  Rat nu = nu_str.empty() ? spread(sp) : parse_rat(nu_str);
  BernoulliMomentVector bm = bernoulli_moments(sp, nu, K);
  MomentVector mv = moments(sp, K);
  Json payload;
  payload["nu"] = json_rat(nu);
  payload["K"] = K;
  Json v = Json::array(), g = Json::array();
  for (const auto& x : mv.v) v.push_back(to_string(x));
  for (const auto& x : bm.gamma) g.push_back(to_string(x));
  payload["V"] = std::move(v);
  payload["Gamma"] = std::move(g);
  std::ostringstream human;
  human << "nu = " << to_string(nu) << "\n";
  for (long k = 0; k <= K; ++k)
    human << "  V_" << 2 * k << " = " << to_string(mv.v[static_cast<size_t>(k)]) << ", Gamma_"
          << 2 * k << " = " << to_string(bm.gamma[static_cast<size_t>(k)]) << "\n";
  if (with_limit) {
    LimitSequence seq = limit_sequence(sp, nu, K);
    human << "normalized sequence (limit target " << seq.target << "):\n";
    for (size_t i = 0; i < seq.terms.size(); ++i)
      human << "  k=" << (i + 1) << ": " << seq.terms[i] << "\n";
  }
  emit(report_envelope("moments", input.digest_hex, std::move(payload)), json_mode, human.str());
  return 0;
}

int cmd_chain(const std::string& exponents, bool json_mode) {
  std::vector<long> a;
  std::stringstream in(exponents);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      a.push_back(std::stol(tok));
    } catch (...) {
      fail("ParseError", "bad exponent '" + tok + "'");
    }
  }
  ChainTypeSpec spec = make_chain_spec(a);
  HorPolynomial hp = chain_type(spec);
  Spectrum sp = hor_spectrum(hp);
  BernoulliMomentVector bm = bernoulli_moments(sp, spec.nu, 2);
  Rat g4 = gamma4_closed_form(spec.weights, spec.milnor);

  Json payload;
  payload["exponents"] = a;
  payload["b"] = spec.b;
  payload["milnor_number"] = spec.milnor.get_str();
  payload["p"] = json_poly(hp.p);
  payload["factorization"] = json_factorization(hp.fact);
  Json w = Json::array();
  for (const auto& x : spec.weights) w.push_back(to_string(x));
  payload["weights"] = std::move(w);
  payload["nu"] = json_rat(spec.nu);
  payload["spectrum"] = json_spectrum(sp);
  payload["Gamma_2"] = json_rat(bm.gamma[1]);
  payload["Gamma_4"] = json_rat(bm.gamma[2]);
  payload["Gamma_4_closed_form"] = json_rat(g4);
  payload["power_identity"] = companion_power_identity(hp);

  std::ostringstream human;
  human << "chain type, b = " << spec.b << ", Milnor number " << spec.milnor.get_str() << "\n"
        << "p = " << hp.p.str("x") << " = " << hp.fact.str() << "\n"
        << "spectrum:";
  for (const auto& x : sp.alphas()) human << " " << to_string(x);
  human << "\nGamma_2 = " << to_string(bm.gamma[1]) << ", Gamma_4 = " << to_string(bm.gamma[2])
        << " (closed form " << to_string(g4) << ")\n";
  emit(report_envelope("chain", digest(exponents), std::move(payload)), json_mode, human.str());
  return 0;
}

int cmd_hor(const std::string& factors, int b, bool json_mode) {
  std::vector<long> ms;
  std::stringstream in(factors);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      ms.push_back(std::stol(tok));
    } catch (...) {
      fail("ParseError", "bad cyclotomic index '" + tok + "'");
    }
  }
  IntPoly p = IntPoly::constant(Int(1));
  long unit_mult = 0;
  for (long m : ms) {
    p = p * cyclotomic_poly(m);
    if (m == 1) ++unit_mult;
  }
  if (b == 0) b = (unit_mult % 2 == 0) ? 1 : 2;  // parity of the root 1 forces b
  HorPolynomial hp = hor_validate(p, b);
  Spectrum sp = hor_spectrum(hp);
  TriangularSeed s = banded_seed(hp);

  Json payload;
  payload["factors"] = ms;
  payload["b"] = b;
  payload["n"] = hp.n();
  payload["p"] = json_poly(hp.p);
  Json betas = Json::array();
  for (const auto& x : hp.betas) betas.push_back(to_string(x));
  payload["betas"] = std::move(betas);
  payload["banded_matrix"] = json_matrix(s.s());
  payload["trace"] = trace(monodromy(s)).get_str();
  payload["spectrum"] = json_spectrum(sp);
  payload["variance"] = json_rat(variance(sp));
  payload["variance_bound"] = json_rat(spread(sp) / 12);
  payload["power_identity"] = companion_power_identity(hp);

  std::ostringstream human;
  human << "banded family polynomial, b = " << b << ", n = " << hp.n() << "\n"
        << "p = " << hp.p.str("x") << "\n"
        << "trace(M) = " << trace(monodromy(s)).get_str() << "\n"
        << describe_rat("Var", variance(sp)) << ", "
        << describe_rat("(a_n-a_1)/12", spread(sp) / 12) << "\n";
  emit(report_envelope("hor", digest(factors + "#" + std::to_string(b)), std::move(payload)),
       json_mode, human.str());
  return 0;
}

int cmd_verify(bool json_mode) {
  std::vector<VerifyCheck> checks = run_verification();
  bool all_pass = true;
  Json rows = Json::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
    if (!c.pass && !c.detail.empty()) std::cout << "     " << c.detail << "\n";
    Json row;
    row["name"] = c.name;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  if (json_mode) {
    Json payload;
    payload["checks"] = std::move(rows);
    payload["all_pass"] = all_pass;
    std::cout << report_envelope("verify", digest(""), std::move(payload)).dump(2) << "\n";
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with unimodular bilinear lattices given by "
               "unit upper-triangular integer seed matrices"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a JSON report on stdout");

  std::string path, nu_str, exponents, factors;
  bool dot_mode = false, with_limit = false;
  size_t max_states = 100000;
  long max_entry = 1000000, K = 3;
  int b = 0;

  auto* analyze = app.add_subcommand("analyze", "classify a seed matrix file");
  analyze->add_option("file", path)->required();
  analyze->add_flag("--dot", dot_mode, "print the diagram in DOT format instead");

  auto* orbit = app.add_subcommand("orbit", "enumerate the braid/sign orbit of a seed");
  orbit->add_option("file", path)->required();
  orbit->add_option("--max-states", max_states, "state budget");
  orbit->add_option("--max-entry", max_entry, "absolute entry budget");

  auto* spectrum = app.add_subcommand("spectrum", "exact spectral numbers of a seed");
  spectrum->add_option("file", path)->required();

  auto* moments = app.add_subcommand("moments", "moments and Bernoulli moments of the spectrum");
  moments->add_option("file", path)->required();
  moments->add_option("--nu", nu_str, "rational p/q (default: a_n - a_1)");
  moments->add_option("--K", K, "truncation order");
  moments->add_flag("--limit", with_limit, "also print the normalized limit sequence");

  auto* chain = app.add_subcommand("chain", "chain-type data from exponents a0,a1,...");
  chain->add_option("exponents", exponents)->required();

  auto* hor = app.add_subcommand("hor", "banded-family data from cyclotomic indices m1,m2,...");
  hor->add_option("factors", factors)->required();
  hor->add_option("--b", b, "palindromy sign parameter (1 or 2; default: inferred)");

  app.add_subcommand("verify", "run the reproduction harness and exit nonzero on mismatch");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) return cmd_analyze(path, json_mode, dot_mode);
    if (app.got_subcommand("orbit")) return cmd_orbit(path, json_mode, max_states, max_entry);
    if (app.got_subcommand("spectrum")) return cmd_spectrum(path, json_mode);
    if (app.got_subcommand("moments")) return cmd_moments(path, json_mode, nu_str, K, with_limit);
    if (app.got_subcommand("chain")) return cmd_chain(exponents, json_mode);
    if (app.got_subcommand("hor")) return cmd_hor(factors, b, json_mode);
    if (app.got_subcommand("verify")) return cmd_verify(json_mode);
  } catch (const latb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
