#pragma once

#include "symprod/sym.hpp"

#include <json.hpp>

namespace symprod {

/// {"odd": [i...], "even": [[j, m]...], "pad": r}; i and j number the odd and even
/// generators separately (alpha_i, beta_j), starting at 1.
nlohmann::json index_to_json(const RingPresentation& p, const SymBasisIndex& idx);
SymBasisIndex index_from_json(const RingPresentation& p, const nlohmann::json& v, const std::string& where);

/// Structure tables use the ring-spec dialect (each basis element is a generator named by
/// to_string(), with an extra "index" field), so the output loads back with ring_from_json.
nlohmann::json table_to_json(const RingPresentation& p, const StructureTable& table);
StructureTable table_from_json(const RingPresentation& p, const nlohmann::json& doc);

}  // namespace symprod
