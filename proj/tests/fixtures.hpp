// Shared constructed graphs, built once per test binary.
#pragma once

#include <map>
#include <string>

#include "smg/constructions.hpp"

namespace smg::testing {

/// Constructions with the default search options, cached.
inline const ConstructionResult& constructed(const std::string& name) {
  static std::map<std::string, ConstructionResult> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, construct(name)).first;
  return it->second;
}

}  // namespace smg::testing
