#include "homshift/sampling.hpp"

#include <random>

namespace homshift {

std::optional<Pattern> sample_pattern(std::shared_ptr<const Graph> graph,
                                      const Region& region, std::uint64_t seed,
                                      const SiteAssignment* boundary,
                                      const std::vector<int>* preset,
                                      int max_restarts) {
    const Graph& g = *graph;
    int n = g.vertex_count();
    if (n > 64) fail(ErrorCode::resource_limit, "sampling supports at most 64 vertices");
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    std::vector<std::uint64_t> static_allowed(region.size(), full);
    if (boundary) {
        for (const auto& [site, label] : boundary->cells()) {
            int v = g.index_of(label);
            if (v < 0) fail(ErrorCode::invalid_input, "boundary label not in graph: " + label);
            for (std::size_t k = 0; k < site.size(); ++k)
                for (int step : {-1, +1}) {
                    Site t = site;
                    t[k] += step;
                    if (auto idx = region.index_of(t))
                        static_allowed[*idx] &= g.neighbor_mask(v);
                }
        }
    }
    if (preset) {
        if (preset->size() != region.size())
            fail(ErrorCode::invalid_input, "preset size must match the region");
        for (std::size_t i = 0; i < region.size(); ++i)
            if ((*preset)[i] >= 0)
                static_allowed[i] &= std::uint64_t{1} << (*preset)[i];
    }

    std::mt19937_64 rng(seed);
    std::vector<int> cells(region.size());
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        bool stuck = false;
        std::fill(cells.begin(), cells.end(), -1);
        for (std::size_t i = 0; i < region.size() && !stuck; ++i) {
            std::uint64_t allowed = static_allowed[i];
            for (int j : region.neighbor_indices(static_cast<int>(i))) {
                if (static_cast<std::size_t>(j) == i) continue;
                if (cells[j] >= 0) allowed &= g.neighbor_mask(cells[j]);
            }
            // torus self-pairs need a loop
            for (int j : region.neighbor_indices(static_cast<int>(i)))
                if (static_cast<std::size_t>(j) == i) {
                    std::uint64_t loops = 0;
                    for (int v = 0; v < n; ++v)
                        if (g.adjacent(v, v)) loops |= std::uint64_t{1} << v;
                    allowed &= loops;
                    break;
                }
            if (!allowed) {
                stuck = true;
                break;
            }
            std::vector<int> options;
            for (int v = 0; v < n; ++v)
                if (allowed >> v & 1) options.push_back(v);
            cells[i] = options[rng() % options.size()];
        }
        if (!stuck) {
            Pattern p(graph, region, cells);
            if (is_valid(p)) return p;
        }
    }
    return std::nullopt;
}

} // namespace homshift
