#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "homshift/pattern.hpp"

namespace homshift {

/// Random valid pattern by site-by-site constrained sampling with restarts
/// (testing utility; not a construction of the library proper). Respects an
/// optional boundary assignment and optional preset region cells.
std::optional<Pattern> sample_pattern(std::shared_ptr<const Graph> graph,
                                      const Region& region, std::uint64_t seed,
                                      const SiteAssignment* boundary = nullptr,
                                      const std::vector<int>* preset = nullptr,
                                      int max_restarts = 2000);

} // namespace homshift
