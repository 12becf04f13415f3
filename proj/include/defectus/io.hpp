#pragma once

#include "json.hpp"

#include "defectus/congruence.hpp"
#include "defectus/detmodel.hpp"
#include "defectus/linalg.hpp"

namespace defectus {

/// Valuations serialize as a nonnegative number, or the string "inf".
nlohmann::json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const nlohmann::json& j);

/// Backends serialize as { "kind": "int-local"|"poly-local", "p": prime };
/// the parser also accepts the compact flag form "int:5".
nlohmann::json backend_to_json(const Backend& bk);
Backend backend_from_json(const nlohmann::json& j);

/// Matrix schema: { "backend": {...}, "rows": r, "cols": c,
/// "entries": [[...], ...] } with int-local entries as fraction strings and
/// poly-local entries as num/den records.
nlohmann::json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const nlohmann::json& j);

/// Point-spec schema: { "m": 3, "n": 5, "exponents": [1, 2] }.
nlohmann::json spec_to_json(const NormalizedPointSpec& spec);
NormalizedPointSpec spec_from_json(const nlohmann::json& j);

/// Full report, unset fields as null, valuations per valuation_to_json.
nlohmann::json report_to_json(const DefectReport& rep);
DefectReport report_from_json(const nlohmann::json& j);

/// Rank and exponents of a decomposition of `source`; with_transforms adds
/// the two unimodular factors and the diagonal grid.
nlohmann::json smith_to_json(const SmithDecomposition& snf, const Matrix& source,
                             bool with_transforms);

} // namespace defectus
