#pragma once

#include <vector>

#include "json.hpp"
#include "ordvis/capped_chroma.hpp"
#include "ordvis/capped_partition.hpp"
#include "ordvis/obstructions.hpp"

namespace ordvis {

using Json = nlohmann::ordered_json;

Json to_json(const Edge& e);
Json to_json(const std::vector<Edge>& edges);
Json to_json(const HWitness& w);
Json to_json(const HoleWitness& w);
Json to_json(const CappedViolation& w);
Json to_json(const ColouringResult& r);
Json to_json(const CappedPartition& p);

/// Reads {"colours": [...]} or a bare array. Throws InputError.
std::vector<int> colours_from_json(const Json& j);

}  // namespace ordvis
