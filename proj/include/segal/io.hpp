#pragma once
#include "segal/segal_check.hpp"
#include "segal/sset.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace segal {

using json = nlohmann::ordered_json;

// Interchange format: kind, truncation, levels (arrays of string ids),
// faces/degeneracies as arrays of index maps. Writing is canonical, so
// parse -> write round-trips bit-exactly.
json sset_to_json(const SSet& X);
SSet sset_from_json(const json& j);

void write_sset(const std::string& path, const SSet& X);
SSet read_sset(const std::string& path);

json verdict_to_json(const SegalVerdict& v);
json report_to_json(const PathCriterionReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);

}  // namespace segal
