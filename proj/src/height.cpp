#include "homshift/height.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace homshift {

const CoverVertex& LiftPattern::at(const Site& s) const {
    auto idx = base.region().index_of(s);
    if (!idx) fail(ErrorCode::invalid_input, "site outside lifted pattern region");
    return cells[*idx];
}

namespace {

void check_liftable(const Pattern& p) {
    if (p.region().kind() == RegionKind::torus)
        fail(ErrorCode::unsupported_region,
             "lifts need a box or diamond region (unroll torus patterns first)");
    GraphReport report = analyze_graph(p.graph());
    if (!report.four_cycle_free)
        fail(ErrorCode::unsupported_graph, "not four-cycle free");
    if (!report.connected)
        fail(ErrorCode::unsupported_graph, "lifts need a connected graph");
    if (!is_valid(p)) fail(ErrorCode::precondition, "lift needs a valid pattern");
}

// Unique cover neighbor of `v` projecting to `target_label`.
CoverVertex cover_step(const CoverVertex& v, int target) {
    const auto& walk = v.walk();
    if (walk.size() >= 2 && walk[walk.size() - 2] == target) return v.parent();
    std::vector<int> w = walk;
    w.push_back(target);
    return CoverVertex(std::move(w));
}

template <bool DepthFirst>
LiftPattern lift_impl(const Pattern& p, const Site& anchor_site,
                      const CoverVertex& anchor_vertex) {
    check_liftable(p);
    const Region& region = p.region();
    auto anchor_idx = region.index_of(anchor_site);
    if (!anchor_idx) fail(ErrorCode::invalid_input, "anchor site outside region");
    if (anchor_vertex.terminal() != p.cell(*anchor_idx))
        fail(ErrorCode::invalid_input, "anchor vertex does not project to the pattern");

    std::vector<CoverVertex> cells(region.size(), CoverVertex::root(0));
    std::vector<char> done(region.size(), 0);
    cells[*anchor_idx] = anchor_vertex;
    done[*anchor_idx] = 1;
    std::deque<int> frontier{*anchor_idx};
    std::size_t visited = 1;
    while (!frontier.empty()) {
        int i;
        if constexpr (DepthFirst) {
            i = frontier.back();
            frontier.pop_back();
        } else {
            i = frontier.front();
            frontier.pop_front();
        }
        for (int j : region.neighbor_indices(i)) {
            CoverVertex step = cover_step(cells[i], p.cell(j));
            if (!done[j]) {
                cells[j] = std::move(step);
                done[j] = 1;
                ++visited;
                frontier.push_back(j);
            } else if (cells[j] != step) {
                fail(ErrorCode::precondition, "pattern admits no consistent lift");
            }
        }
    }
    if (visited != region.size())
        fail(ErrorCode::invalid_input, "lift needs a connected region");
    return LiftPattern{p, anchor_site, anchor_vertex, std::move(cells)};
}

} // namespace

LiftPattern lift(const Pattern& p, const Site& anchor_site,
                 const CoverVertex& anchor_vertex) {
    return lift_impl<false>(p, anchor_site, anchor_vertex);
}

LiftPattern lift(const Pattern& p) {
    const Site& first = p.region().site(0);
    return lift(p, first, CoverVertex::root(p.cell(0)));
}

LiftPattern lift_depth_first(const Pattern& p, const Site& anchor_site,
                             const CoverVertex& anchor_vertex) {
    return lift_impl<true>(p, anchor_site, anchor_vertex);
}

int height(const LiftPattern& lp, const Site& i, const Site& j) {
    return cover_distance(lp.at(i), lp.at(j));
}

int height(const Pattern& p, const Site& i, const Site& j) {
    LiftPattern lp = lift(p);
    return height(lp, i, j);
}

int range(const LiftPattern& lp, const std::vector<Site>& sites) {
    int best = 0;
    for (std::size_t a = 0; a < sites.size(); ++a)
        for (std::size_t b = a + 1; b < sites.size(); ++b)
            best = std::max(best, height(lp, sites[a], sites[b]));
    return best;
}

int range(const Pattern& p, const std::vector<Site>& sites) {
    if (sites.empty()) return 0;
    LiftPattern lp = lift(p);
    return range(lp, sites);
}

std::vector<Site> sphere_sites(const Region& region, int m) {
    std::vector<Site> out;
    for (const Site& s : region.sites())
        if (l1_norm(s) == m) out.push_back(s);
    return out;
}

Pattern unroll_torus(const Pattern& torus_pattern, const Region& box_region) {
    if (torus_pattern.region().kind() != RegionKind::torus)
        fail(ErrorCode::invalid_input, "unroll_torus needs a torus pattern");
    if (box_region.kind() == RegionKind::torus)
        fail(ErrorCode::invalid_input, "unroll target must not be a torus");
    if (box_region.dimension() != torus_pattern.region().dimension())
        fail(ErrorCode::invalid_input, "unroll dimension mismatch");
    std::vector<int> cells(box_region.size());
    for (std::size_t i = 0; i < box_region.size(); ++i)
        cells[i] = torus_pattern.cell_at(box_region.site(static_cast<int>(i)));
    return Pattern(torus_pattern.graph_ptr(), box_region, std::move(cells));
}

SlopeEstimate slope_estimate(const Pattern& p, const std::vector<int>& direction,
                             int depth) {
    if (p.region().kind() != RegionKind::torus)
        fail(ErrorCode::invalid_input, "slope estimates need a torus pattern");
    if (depth < 1) fail(ErrorCode::invalid_parameter, "depth must be positive");
    int d = p.region().dimension();
    if (static_cast<int>(direction.size()) != d)
        fail(ErrorCode::invalid_input, "direction dimension mismatch");
    if (std::all_of(direction.begin(), direction.end(), [](int c) { return c == 0; }))
        fail(ErrorCode::invalid_input, "direction must be nonzero");
    if (!is_valid(p)) fail(ErrorCode::precondition, "slope estimate needs a valid pattern");

    // Smallest N with N * direction a lattice period of the torus.
    long long n_period = 1;
    for (int k = 0; k < d; ++k) {
        if (direction[k] == 0) continue;
        long long e = p.region().extents()[k];
        long long step = std::abs(direction[k]);
        long long need = e / std::gcd(e, step);
        n_period = std::lcm(n_period, need);
    }
    int N = static_cast<int>(n_period);

    // Window: bounding box of 0 and depth*N*direction.
    Site lo(d, 0), hi(d, 0), far(d, 0);
    for (int k = 0; k < d; ++k) {
        far[k] = depth * N * direction[k];
        lo[k] = std::min(0, far[k]);
        hi[k] = std::max(0, far[k]);
    }
    Site origin(d), extents(d);
    for (int k = 0; k < d; ++k) {
        origin[k] = lo[k];
        extents[k] = hi[k] - lo[k] + 1;
    }
    Pattern window = unroll_torus(p, Region::box(origin, extents));
    LiftPattern lp = lift(window);

    SlopeEstimate est;
    est.direction = direction;
    est.period = N;
    Site zero(d, 0);
    for (int m = 1; m <= depth; ++m) {
        Site target(d);
        for (int k = 0; k < d; ++k) target[k] = m * N * direction[k];
        est.values.push_back(static_cast<double>(height(lp, zero, target)) /
                             (static_cast<double>(m) * N));
    }
    est.upper_bound = *std::min_element(est.values.begin(), est.values.end());
    est.note = "not-converged";
    for (std::size_t m = 1; m < est.values.size(); ++m)
        if (est.values[m] == est.values[m - 1]) {
            est.note = "converged";
            break;
        }
    return est;
}

} // namespace homshift
