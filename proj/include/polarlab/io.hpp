#pragma once

#include <string>

#include <json.hpp>

#include "polarlab/verifier.hpp"

namespace polarlab::io {

using nlohmann::json;

/// {"coeffs": [[re, im], ...]} ascending powers; doubles round-trip exactly.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j);

/// {"coeffs": ..., "zeros": [[re,im],...], "class": {"kind": "top|bottom",
///  "index": int, "k": real, "side": "inside|zerofree"}, "seed": int,
///  "label": "..."}
json instance_to_json(const GeneratedInstance& inst);
GeneratedInstance instance_from_json(const json& j);

/// Accepts either a bare polynomial file or a full instance file.
GeneratedInstance load_instance_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

json extremum_to_json(const CertifiedExtremum& e);
json bound_to_json(const BoundResult& b);
json record_to_json(const VerificationRecord& r);
json report_to_json(const CampaignReport& r);

/// theorem_id, seed, n, mu_or_m, k, r, R, alpha_abs, lhs, lhs_eps, rhs,
/// slack, verdict
std::string csv_header();
std::string record_to_csv(const VerificationRecord& r);

} // namespace polarlab::io
