#include "homshift/pivot.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "homshift/height.hpp"

namespace homshift {

std::vector<Pattern> PivotChain::steps() const {
    std::vector<Pattern> out{initial};
    std::vector<int> cells = initial.cells();
    const Region& region = initial.region();
    const Graph& g = initial.graph();
    for (const auto& delta : deltas) {
        auto idx = region.index_of(delta.site);
        if (!idx) fail(ErrorCode::invalid_input, "chain delta outside region");
        cells[*idx] = g.index_of(delta.to);
        out.push_back(initial.with_cells(cells));
    }
    return out;
}

namespace {

// Outermost `layers` of a box region, by site index.
std::vector<char> outer_layers(const Region& region, int layers) {
    std::vector<char> mark(region.size(), 0);
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Site& s = region.site(static_cast<int>(i));
        for (int kdim = 0; kdim < region.dimension(); ++kdim) {
            int lo = region.origin()[kdim];
            int hi = lo + region.extents()[kdim] - 1;
            if (s[kdim] < lo + layers || s[kdim] > hi - layers) mark[i] = 1;
        }
    }
    return mark;
}

} // namespace

PivotChain pivot_chain(const Pattern& x, const Pattern& y) {
    if (!x.graph().same_as(y.graph()))
        fail(ErrorCode::invalid_input, "pivot chain endpoints must share a graph");
    if (!(x.region() == y.region()) || x.region().kind() != RegionKind::box)
        fail(ErrorCode::invalid_input, "pivot chain endpoints must share a box region");
    GraphReport report = analyze_graph(x.graph());
    if (!report.four_cycle_free)
        fail(ErrorCode::unsupported_graph, "not four-cycle free");
    if (!report.connected)
        fail(ErrorCode::unsupported_graph, "pivot chains need a connected graph");
    if (!is_valid(x) || !is_valid(y))
        fail(ErrorCode::precondition, "pivot chain endpoints must be valid");

    const Region& region = x.region();
    std::vector<char> boundary = outer_layers(region, 2);
    for (std::size_t i = 0; i < region.size(); ++i)
        if (boundary[i] && x.cell(i) != y.cell(i))
            fail(ErrorCode::invalid_input,
                 "endpoints disagree on the two outermost layers");

    const Site& anchor = region.site(0); // a corner, inside the agreement zone
    CoverVertex root = CoverVertex::root(x.cell(0));
    LiftPattern lx = lift(x, anchor, root);
    LiftPattern ly = lift(y, anchor, root);

    // total lift distance is even and drops by 2 per move
    long long total = 0;
    for (std::size_t i = 0; i < region.size(); ++i)
        total += cover_distance(lx.cells[i], ly.cells[i]);

    std::vector<Pattern> from_x{x}, from_y{y};
    std::vector<int> cx = x.cells(), cy = y.cells();

    while (true) {
        int mx = -1, my = -1, ix = -1, iy = -1;
        for (std::size_t i = 0; i < region.size(); ++i) {
            if (lx.cells[i] == ly.cells[i]) continue;
            int dx = cover_distance(root, lx.cells[i]);
            int dy = cover_distance(root, ly.cells[i]);
            if (dx > mx) mx = dx, ix = static_cast<int>(i);
            if (dy > my) my = dy, iy = static_cast<int>(i);
        }
        if (ix < 0) break; // lifts agree

        bool on_x = mx >= my;
        LiftPattern& lift_a = on_x ? lx : ly;
        const LiftPattern& lift_b = on_x ? ly : lx;
        std::vector<int>& cells_a = on_x ? cx : cy;
        std::vector<Pattern>& chain_a = on_x ? from_x : from_y;
        int i0 = on_x ? ix : iy;
        if (boundary[i0])
            fail(ErrorCode::precondition, "pivot chain tried to move a boundary site");

        // two tree-edges from the far value toward the other lift's value
        auto geodesic = cover_geodesic(lift_a.cells[i0], lift_b.cells[i0]);
        if (geodesic.size() < 3)
            fail(ErrorCode::precondition, "lift disagreement is not an even distance");
        const CoverVertex& replacement = geodesic[2];
        lift_a.cells[i0] = replacement;
        cells_a[i0] = replacement.terminal();
        chain_a.push_back(chain_a.back().with_cells(cells_a));
        if (!is_valid(chain_a.back()))
            fail(ErrorCode::precondition, "pivot move produced an invalid pattern");
    }

    PivotChain chain{x, {}};
    auto record = [&chain, &region](const Pattern& prev, const Pattern& next) {
        int changed = -1;
        for (std::size_t i = 0; i < region.size(); ++i)
            if (prev.cell(i) != next.cell(i)) {
                if (changed >= 0)
                    fail(ErrorCode::precondition, "pivot step changed two sites");
                changed = static_cast<int>(i);
            }
        if (changed < 0) fail(ErrorCode::precondition, "pivot step changed nothing");
        chain.deltas.push_back(PivotDelta{region.site(changed),
                                          prev.graph().label(prev.cell(changed)),
                                          next.graph().label(next.cell(changed))});
    };
    for (std::size_t i = 0; i + 1 < from_x.size(); ++i) record(from_x[i], from_x[i + 1]);
    for (std::size_t i = from_y.size(); i-- > 1;) record(from_y[i], from_y[i - 1]);

    if (2 * chain.deltas.size() != static_cast<std::size_t>(total))
        fail(ErrorCode::precondition, "pivot chain length mismatch");
    return chain;
}

namespace {

std::string pack_cells(const std::vector<int>& cells) {
    std::string key(cells.size(), '\0');
    for (std::size_t i = 0; i < cells.size(); ++i)
        key[i] = static_cast<char>(cells[i]);
    return key;
}

// Distinct nonempty region intersections with translates of the l1-ball of
// the given radius.
std::vector<std::vector<int>> ball_windows(const Region& region, int radius) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    std::set<Site> centers;
    for (const Site& s : region.sites()) centers.insert(s);
    for (const Site& s : region.boundary_sites(radius)) centers.insert(s);
    for (const Site& c : centers) {
        std::vector<int> window;
        const Region ball = Region::diamond(c, radius);
        for (const Site& s : ball.sites())
            if (auto idx = region.index_of(s)) window.push_back(*idx);
        std::sort(window.begin(), window.end());
        if (!window.empty() && seen.insert(window).second) out.push_back(window);
    }
    return out;
}

} // namespace

ReconfigReport pivot_components(std::shared_ptr<const Graph> graph, const Region& region,
                                const SiteAssignment& boundary, int moves_radius,
                                std::size_t state_cap) {
    if (moves_radius < 1) fail(ErrorCode::invalid_parameter, "moves radius must be >= 1");
    const Graph& g = *graph;

    std::vector<Pattern> states;
    {
        PatternEnumerator it(graph, region, &boundary);
        while (auto p = it.next()) {
            states.push_back(std::move(*p));
            if (states.size() > state_cap)
                fail(ErrorCode::resource_limit,
                     "completion enumeration exceeded " + std::to_string(state_cap) +
                         " states (" + std::to_string(it.nodes_visited()) + " nodes visited)");
        }
    }
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(pack_cells(states[i].cells()), static_cast<int>(i));

    // static per-site masks from the boundary assignment
    int hn = g.vertex_count();
    std::uint64_t full = hn == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << hn) - 1);
    std::vector<std::uint64_t> static_allowed(region.size(), full);
    for (const auto& [site, label] : boundary.cells()) {
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

    std::vector<std::vector<int>> windows;
    if (moves_radius > 1) windows = ball_windows(region, moves_radius);

    auto neighbors_of = [&](int si) {
        std::vector<int> out;
        const std::vector<int>& cells = states[si].cells();
        if (moves_radius == 1) {
            std::vector<int> scratch = cells;
            for (std::size_t i = 0; i < region.size(); ++i) {
                std::uint64_t allowed = static_allowed[i];
                for (int j : region.neighbor_indices(static_cast<int>(i)))
                    if (static_cast<std::size_t>(j) != i)
                        allowed &= g.neighbor_mask(cells[j]);
                for (int v = 0; v < hn; ++v) {
                    if (v == cells[i] || !(allowed >> v & 1)) continue;
                    scratch[i] = v;
                    auto it = index.find(pack_cells(scratch));
                    if (it != index.end()) out.push_back(it->second);
                }
                scratch[i] = cells[i];
            }
        } else {
            for (const auto& window : windows) {
                // refill the window with everything else fixed
                std::vector<char> in_window(region.size(), 0);
                for (int i : window) in_window[i] = 1;
                std::vector<int> scratch = cells;
                // DFS over window slots
                std::vector<int> slot(window.size(), -1);
                int depth = 0;
                while (depth >= 0) {
                    if (depth == static_cast<int>(window.size())) {
                        auto it = index.find(pack_cells(scratch));
                        if (it != index.end() && it->second != si) out.push_back(it->second);
                        --depth;
                        continue;
                    }
                    int i = window[depth];
                    int v = slot[depth] + 1;
                    std::uint64_t allowed = static_allowed[i];
                    for (int j : region.neighbor_indices(i)) {
                        if (j == i) {
                            // torus self-pair needs a loop; fold into the mask
                            continue;
                        }
                        if (in_window[j]) {
                            // only constrain against already-chosen window slots
                            bool chosen = false;
                            for (int t = 0; t < depth; ++t)
                                if (window[t] == j) chosen = true;
                            if (!chosen) continue;
                        }
                        allowed &= g.neighbor_mask(scratch[j]);
                    }
                    while (v < hn && !(allowed >> v & 1)) ++v;
                    if (v >= hn) {
                        slot[depth] = -1;
                        scratch[i] = cells[i];
                        --depth;
                        continue;
                    }
                    slot[depth] = v;
                    scratch[i] = v;
                    ++depth;
                }
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return out;
    };

    ReconfigReport report;
    report.moves_radius = moves_radius;
    report.states = states.size();
    std::vector<int> component(states.size(), -1);
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (component[s] >= 0) continue;
        int id = report.component_count++;
        std::size_t size = 0;
        std::deque<int> queue{static_cast<int>(s)};
        component[s] = id;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            ++size;
            for (int next : neighbors_of(cur))
                if (component[next] < 0) {
                    component[next] = id;
                    queue.push_back(next);
                }
        }
        report.component_sizes.push_back(size);
    }
    if (report.component_count >= 2) {
        int first = -1, second = -1;
        for (std::size_t i = 0; i < states.size() && second < 0; ++i) {
            if (component[i] == 0 && first < 0) first = static_cast<int>(i);
            if (component[i] == 1 && second < 0) second = static_cast<int>(i);
        }
        report.witness_pair = std::make_pair(states[first], states[second]);
    }
    return report;
}

bool is_frozen_window(const Pattern& p) {
    if (!is_valid(p)) fail(ErrorCode::precondition, "frozen check needs a valid pattern");
    const Region& region = p.region();
    const Graph& g = p.graph();
    for (int i : region.interior_indices()) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == p.cell(i)) continue;
            bool ok = true;
            for (int j : region.neighbor_indices(i)) {
                int other = j == i ? v : p.cell(j);
                if (!g.adjacent(v, other)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return false;
        }
    }
    return true;
}

} // namespace homshift
