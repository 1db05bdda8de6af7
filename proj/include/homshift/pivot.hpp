#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homshift/pattern.hpp"

namespace homshift {

struct PivotDelta {
    Site site;
    std::string from, to;
};

/// Chain of single-site moves between two valid patterns that agree on the
/// two outermost layers of their common box.
struct PivotChain {
    Pattern initial;
    std::vector<PivotDelta> deltas;

    std::size_t length() const { return deltas.size(); }
    /// Materializes every pattern along the chain (length()+1 entries).
    std::vector<Pattern> steps() const;
};

/// Constructs a pivot chain from x to y via their lifts: both are lifted
/// through a common anchor in the agreement zone; while the lifts differ,
/// the site with the lift value farthest from the anchor vertex (on the
/// side attaining the larger maximum) is stepped two tree-edges toward the
/// other lift. Moves = half the summed lift distance.
PivotChain pivot_chain(const Pattern& x, const Pattern& y);

struct ReconfigReport {
    int component_count = 0;
    std::vector<std::size_t> component_sizes;
    std::optional<std::pair<Pattern, Pattern>> witness_pair; // distinct components
    int moves_radius = 1;
    std::uint64_t states = 0;
};

/// Builds the move graph on every valid completion of the region under the
/// boundary assignment — edges join completions differing at one site
/// (radius 1) or inside a translate of the radius-r l1-ball — and reports
/// its connected components.
ReconfigReport pivot_components(std::shared_ptr<const Graph> graph, const Region& region,
                                const SiteAssignment& boundary, int moves_radius,
                                std::size_t state_cap = 2'000'000);

/// True when no single interior site admits an alternative symbol.
bool is_frozen_window(const Pattern& p);

} // namespace homshift
