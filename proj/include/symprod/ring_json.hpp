#pragma once

#include "symprod/ring.hpp"

#include <json.hpp>

#include <filesystem>

namespace symprod {

/// Ring-spec dialect:
///   {"generators": [{"name": "a1", "degree": 1}, ...],
///    "products": [{"left": "a1", "right": "a2", "result": [{"gen": "b", "coeff": 1}]}, ...]}
/// Omitted products are zero. Coefficients are JSON integers or decimal strings.
RingPresentation ring_from_json(const nlohmann::json& doc);
nlohmann::json ring_to_json(const RingPresentation& p);

RingPresentation load_ring(const std::filesystem::path& path);

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& v, const std::string& where);

}  // namespace symprod
