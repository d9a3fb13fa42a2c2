#pragma once

#include <string>

#include <json.hpp>

#include "projconst/line_system.hpp"
#include "projconst/minproj.hpp"
#include "projconst/norms.hpp"
#include "projconst/phi.hpp"

namespace projconst {

using ordered_json = nlohmann::ordered_json;

// Schemas. Real-field matrices serialize as bare numbers, complex ones as
// [re, im] pairs; loaders accept either form and normalize.
//
//   LineSystem     {"field", "n", "vectors": [[entry, ...], ...], "weights": [...] | null}
//   SubspaceBasis  {"field", "N", "n", "F": [[entry, ...], ...]}
//   NormedSpaceSpec{"field", "n", "functionals": [[entry, ...], ...], "label": str | null}
//   PhiState       {"field", "n", "N", "Z": [...], "Lambda": [...], "objective",
//                   "residuals": {"orthonormality", "mass"}, "seed"}

ordered_json line_system_to_json(const LineSystem& s);
LineSystem line_system_from_json(const ordered_json& j);

ordered_json basis_to_json(const SubspaceBasis& b);
SubspaceBasis basis_from_json(const ordered_json& j);

ordered_json spec_to_json(const NormedSpaceSpec& s);
NormedSpaceSpec spec_from_json(const ordered_json& j);

ordered_json phi_state_to_json(const PhiState& s);
PhiState phi_state_from_json(const ordered_json& j);

ordered_json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ordered_json& j);

}  // namespace projconst
