#pragma once

// JSON interchange. Complex numbers are [re, im] pairs, vectors are arrays
// of pairs, matrices are row-major arrays of rows.
//
// Decoders throw std::invalid_argument with a field-qualified message on
// any schema violation.

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

#include "uhopf/action.hpp"
#include "uhopf/effectiveness.hpp"
#include "uhopf/oracle.hpp"

namespace uhopf {

using json = nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j, const char* field = "complex");

json vector_to_json(const CVector& v);
/// expected_size < 0 accepts any nonzero length.
CVector vector_from_json(const json& j, Eigen::Index expected_size = -1, const char* field = "vector");

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j, Eigen::Index expected_n = -1, const char* field = "matrix");

/// Spec schema: n, m, d, kind, p, q, r, optional C (default identity).
/// Extra fields (seed, tol, ranges ...) are ignored here.
ActionSpec spec_from_json(const json& j);
json spec_to_json(const ActionSpec& spec);

json verdict_to_json(const EffectivenessVerdict& v);
json check_to_json(const CheckResult& c);
json report_to_json(const VerificationReport& report);
json kernel_scan_to_json(const std::vector<KernelScanEntry>& scan);

}  // namespace uhopf
