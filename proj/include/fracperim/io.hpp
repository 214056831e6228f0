#pragma once

#include "fracperim/space.hpp"

#include <json.hpp>

#include <string>

namespace fracperim {

inline constexpr const char* kLibraryVersion = "0.1.0";

// Space files: {"points": [[x],[x],...] or [[x,y],...], "weights": [...],
// "resolution_h": h, "metric": "euclidean" | "table", "distances": [...]}.
// The distances array is the row-major upper triangle (i < j) when metric is
// "table". Set files: {"indicator": [0,1,...]} or a bare 0/1 array.
DiscreteSpace load_space_json(const std::string& path);
void save_space_json(const DiscreteSpace& space, const std::string& path);

IndicatorSet load_set_json(const std::string& path, std::size_t expected_size);
void save_set_json(const IndicatorSet& set, const std::string& path);

nlohmann::json space_to_json(const DiscreteSpace& space);
DiscreteSpace space_from_json(const nlohmann::json& j);

}  // namespace fracperim
