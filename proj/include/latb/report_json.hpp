#pragma once

#include "latb/braid.hpp"
#include "latb/hor.hpp"
#include "latb/semidefinite.hpp"

#include <nlohmann/json.hpp>

namespace latb {

using Json = nlohmann::ordered_json;

Json json_matrix(const IMat& m);
Json json_poly(const IntPoly& p);
Json json_rat(const Rat& r);  // "p/q" string
Json json_spectrum(const Spectrum& sp);
Json json_factorization(const CycloFactorization& f);  // {"phi": {"m": mult}}
Json json_orbit(const OrbitReport& orbit);
Json json_definite(const DefiniteReport& rep);
Json json_semidefinite(const SemidefClassification& c);

/// Envelope around a result payload; deterministic for fixed input and
/// budget (no timing inside the JSON; byte-identical across runs).
Json report_envelope(const std::string& command, const std::string& input_digest,
                     Json payload);

/// FNV-1a64 of raw bytes, hex.
std::string digest(const std::string& bytes);

}  // namespace latb
