#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cx/curvature.hpp"
#include "cx/delta_complex.hpp"
#include "cx/fundamental.hpp"
#include "cx/homology.hpp"
#include "cx/square_complex.hpp"

namespace cx {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit digest, hex encoded; used to key reports to their inputs.
std::string digest(const std::string& bytes);

nlohmann::json certificate_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json homology_json(const HomologyProfile& h);
nlohmann::json abelian_json(const AbelianProfile& a);
nlohmann::json presentation_json(const Presentation& p);

struct Report {
  std::string check;
  std::string input_digest;
  Verdict verdict = Verdict::Pass;
  std::vector<Certificate> certificates;
  nlohmann::json data;  // check-specific payload (counts, profiles, ...)
  long timing_ms = 0;
  std::string error;
};

nlohmann::json report_json(const Report& r);
std::string report_text(const Report& r);

/// Deterministic DOT output; parallel edges and loops are preserved and nodes
/// are labeled by their occurrence.
std::string export_dot(const SquareComplex& X, const LinkGraph& L);
std::string export_dot_skeleton(const DeltaComplex& L, const std::string& graph_name);

}  // namespace cx
