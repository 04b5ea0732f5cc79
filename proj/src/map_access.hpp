#pragma once

#include <vector>

#include "salpart/saliency_map.hpp"

namespace salpart {

// Library-internal write access to a map's storage. Callers own the map by
// value, so no shared instance is ever mutated.
struct MapAccess {
  static std::vector<double>& values(SaliencyMap& map) { return map.values_; }
};

}  // namespace salpart
