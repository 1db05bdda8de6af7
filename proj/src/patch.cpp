#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "homshift/folding.hpp"
#include "homshift/height.hpp"

namespace homshift {

namespace {

// A finite subtree of the universal cover packaged as a Graph whose labels
// are positions in the canonical (length, entrywise) vertex order.
struct SubtreeGraph {
    std::vector<CoverVertex> order;
    std::map<std::vector<int>, int> index;
    std::shared_ptr<const Graph> graph;

    const std::string& label_of(const CoverVertex& v) const {
        return graph->label(index.at(v.walk()));
    }
    const CoverVertex& vertex_of(const std::string& label) const {
        return order[static_cast<std::size_t>(std::stoi(label))];
    }
};

SubtreeGraph make_subtree_graph(const std::set<CoverVertex>& verts) {
    SubtreeGraph sg;
    sg.order.assign(verts.begin(), verts.end());
    std::sort(sg.order.begin(), sg.order.end());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < sg.order.size(); ++i) {
        sg.index[sg.order[i].walk()] = static_cast<int>(i);
        labels.push_back(std::to_string(i));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < sg.order.size(); ++i) {
        const CoverVertex& v = sg.order[i];
        if (v.is_root()) continue;
        auto it = sg.index.find(v.parent().walk());
        if (it != sg.index.end())
            edges.emplace_back(labels[it->second], labels[i]);
    }
    sg.graph = std::make_shared<Graph>(std::move(labels), edges);
    return sg;
}

// Minimal subtree of `tree` spanning `keep`: strip leaves outside `keep`.
std::set<CoverVertex> spanning_subtree(const std::set<CoverVertex>& tree,
                                       const std::set<CoverVertex>& keep) {
    std::set<CoverVertex> cur = tree;
    auto degree = [&cur](const CoverVertex& v) {
        int deg = 0;
        if (!v.is_root() && cur.count(v.parent())) ++deg;
        for (const auto& other : cur)
            if (!other.is_root() && other.parent() == v) ++deg;
        return deg;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = cur.begin(); it != cur.end(); ++it) {
            if (keep.count(*it)) continue;
            if (degree(*it) <= 1) {
                cur.erase(it);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

// Retraction of `tree` onto its subtree `core` by folding leaves one at a
// time (lexicographically-first leaf, lexicographically-first target).
std::map<CoverVertex, CoverVertex> retract_onto(const std::set<CoverVertex>& tree,
                                                const std::set<CoverVertex>& core) {
    std::set<CoverVertex> cur = tree;
    std::map<CoverVertex, CoverVertex> fold; // one-step images
    auto neighbors_in = [&cur](const CoverVertex& v) {
        std::vector<CoverVertex> out;
        if (!v.is_root() && cur.count(v.parent())) out.push_back(v.parent());
        for (const auto& other : cur)
            if (!other.is_root() && other.parent() == v) out.push_back(other);
        std::sort(out.begin(), out.end());
        return out;
    };
    while (cur.size() > core.size()) {
        bool folded = false;
        for (const auto& v : cur) { // set order = canonical order
            if (core.count(v)) continue;
            auto nv = neighbors_in(v);
            if (nv.size() != 1) continue; // leaves only
            auto targets = neighbors_in(nv[0]);
            const CoverVertex* t = nullptr;
            for (const auto& w : targets)
                if (w != v) {
                    t = &w;
                    break;
                }
            if (!t) continue;
            fold.emplace(v, *t);
            cur.erase(v);
            folded = true;
            break;
        }
        if (!folded)
            fail(ErrorCode::precondition, "retraction found no foldable leaf");
    }
    // chase the one-step images into the core
    std::map<CoverVertex, CoverVertex> out;
    for (const auto& v : tree) {
        CoverVertex cur_v = v;
        while (!cur.count(cur_v)) cur_v = fold.at(cur_v);
        out.emplace(v, cur_v);
    }
    return out;
}

// Lexicographically-first walk of exact length from one vertex to another.
std::vector<int> exact_length_walk(const Graph& h, int from, int to, int length) {
    int n = h.vertex_count();
    const int inf = 1 << 29;
    std::vector<std::array<int, 2>> dist(n, {inf, inf});
    std::deque<std::pair<int, int>> queue;
    dist[to][0] = 0;
    queue.emplace_back(to, 0);
    while (!queue.empty()) {
        auto [v, p] = queue.front();
        queue.pop_front();
        for (int u : h.neighbors(v))
            if (dist[u][1 - p] > dist[v][p] + 1) {
                dist[u][1 - p] = dist[v][p] + 1;
                queue.emplace_back(u, 1 - p);
            }
    }
    if (dist[from][length % 2] > length)
        fail(ErrorCode::parity, "no connecting walk of the required length exists");
    std::vector<int> walk{from};
    int cur = from;
    for (int remaining = length; remaining > 0; --remaining) {
        int next = -1;
        for (int u : h.neighbors(cur)) {
            if (dist[u][(remaining - 1) % 2] <= remaining - 1) {
                next = u;
                break;
            }
        }
        if (next < 0) fail(ErrorCode::parity, "walk construction ran out of moves");
        walk.push_back(next);
        cur = next;
    }
    return walk;
}

int compose_labels(const FoldSequence& seq, int upto, std::string label) {
    for (int t = 0; t < upto; ++t) label = seq.steps[t].apply(label);
    return std::stoi(label);
}

} // namespace

PatchResult patch(const Pattern& x, const Pattern& y, int n, int k, bool allow_shift) {
    if (!x.graph().same_as(y.graph()))
        fail(ErrorCode::invalid_input, "patch patterns must share a graph");
    if (!(x.region() == y.region()) || x.region().kind() != RegionKind::box)
        fail(ErrorCode::invalid_input, "patch patterns must share a box region");
    if (k < 0) fail(ErrorCode::invalid_parameter, "k must be nonnegative");

    const Graph& h = x.graph();
    const Region& region = x.region();
    const int d = region.dimension();
    const int r = h.vertex_count();
    if (n < 1 || d * n < 2)
        fail(ErrorCode::invalid_parameter, "patch needs n >= 1 with d*n >= 2");

    GraphReport report = analyze_graph(h);
    if (!report.four_cycle_free) fail(ErrorCode::unsupported_graph, "not four-cycle free");
    if (!report.connected) fail(ErrorCode::unsupported_graph, "patch needs a connected graph");
    if (!is_valid(x) || !is_valid(y))
        fail(ErrorCode::precondition, "patch needs valid patterns");

    const int m = (d + 1) * n + 3 * r + k;
    const Region window_ball = Region::diamond(Site(d, 0), m + 1);
    for (const Site& s : window_ball.sites())
        if (!region.contains(s))
            fail(ErrorCode::invalid_input,
                 "pattern window does not contain the ball of radius " + std::to_string(m + 1));

    LiftPattern ly = lift(y);
    if (range(ly, sphere_sites(region, m)) > 2 * k)
        fail(ErrorCode::range_too_large,
             "range of y on the sphere of radius " + std::to_string(m) + " exceeds " +
                 std::to_string(2 * k));

    // Bipartite phase: when the origin values sit in different classes the
    // spliced window is read from x shifted by e_1.
    bool shifted = false;
    if (report.bipartite) {
        const auto& coloring = *report.two_coloring;
        Site zero(d, 0);
        if (coloring.at(x.label_at(zero)) != coloring.at(y.label_at(zero))) {
            if (!allow_shift)
                fail(ErrorCode::parity,
                     "origin values lie in different partite classes and shifting is disabled");
            shifted = true;
        }
    }

    LiftPattern lx = lift(x);
    auto x_cell = [&](const Site& s) -> const CoverVertex& {
        if (!shifted) return lx.at(s);
        Site t = s;
        t[0] += 1;
        return lx.at(t);
    };

    // --- inner construction: reflect the cube [-n,n]^d, fold inward -------
    std::set<CoverVertex> inner_image;
    {
        Region cube = Region::box(Site(d, -n), Site(d, 2 * n + 1));
        for (const Site& s : cube.sites()) inner_image.insert(x_cell(s));
    }
    SubtreeGraph inner_tree = make_subtree_graph(inner_image);
    FoldSequence inner_folds = fold_to_stiff(*inner_tree.graph);
    if (inner_folds.classification != StiffClass::edge)
        fail(ErrorCode::precondition, "inner cover image did not fold to an edge");

    auto reflected = [&](const Site& s) -> const CoverVertex& {
        Site src(d);
        for (int a = 0; a < d; ++a) {
            int j = ((s[a] + n) % (4 * n) + 4 * n) % (4 * n) - n; // in [-n, 3n)
            src[a] = j <= n ? j : 2 * n - j;
        }
        return x_cell(src);
    };
    auto inner_value = [&](const Site& s) {
        int dist = l1_norm(s);
        std::string label = inner_tree.label_of(reflected(s));
        int steps = std::min(inner_folds.fold_radius, std::max(0, dist - n));
        return inner_tree.vertex_of(std::to_string(compose_labels(inner_folds, steps, label)))
            .terminal();
    };

    // --- outer construction: retract the boundary image, fold outward -----
    std::set<CoverVertex> outer_image, sphere_image;
    for (const Site& s : region.sites()) {
        int dist = l1_norm(s);
        if (dist <= m + 1) outer_image.insert(ly.at(s));
        if (dist == m || dist == m + 1) sphere_image.insert(ly.at(s));
    }
    std::set<CoverVertex> core = spanning_subtree(outer_image, sphere_image);
    if (core.size() == 1) {
        // a monochromatic boundary image needs one extra vertex to make an edge
        const CoverVertex& only = *core.begin();
        const CoverVertex* extra = nullptr;
        for (const auto& v : outer_image) {
            if (v == only) continue;
            bool adjacent = (!v.is_root() && v.parent() == only) ||
                            (!only.is_root() && only.parent() == v);
            if (adjacent && (!extra || v < *extra)) extra = &v;
        }
        if (!extra) fail(ErrorCode::precondition, "boundary image has no cover edge");
        core.insert(*extra);
    }
    auto retract = retract_onto(outer_image, core);
    SubtreeGraph outer_tree = make_subtree_graph(core);
    FoldSequence outer_folds = fold_to_stiff(*outer_tree.graph);
    if (outer_folds.classification != StiffClass::edge)
        fail(ErrorCode::precondition, "boundary cover image did not fold to an edge");

    auto outer_value = [&](const Site& s) {
        int dist = l1_norm(s);
        const CoverVertex& raw = ly.at(s);
        if (dist > m + 1) return raw.terminal();
        std::string label = outer_tree.label_of(retract.at(raw));
        int steps = std::min(outer_folds.fold_radius, std::max(0, m - dist + 1));
        return outer_tree.vertex_of(std::to_string(compose_labels(outer_folds, steps, label)))
            .terminal();
    };

    // --- connecting rings --------------------------------------------------
    // The first sphere where the inward folds have fully landed in the stiff
    // edge is monochromatic (sphere sites share parity); same for the
    // outward side at radius (d+1)n + 3r since the outer fold radius is at
    // most k+1. Constant rings along a walk join the two.
    const int inner_ring = n + inner_folds.fold_radius;
    const int outer_ring = (d + 1) * n + 3 * r;
    if (inner_ring > (d + 1) * n)
        fail(ErrorCode::precondition, "inner fold radius exceeded the cube diameter bound");
    if (outer_folds.fold_radius > k + 1)
        fail(ErrorCode::precondition, "boundary fold radius exceeded the range bound");

    auto ring_symbol = [&](int radius, auto&& value) {
        int symbol = -1;
        for (const Site& s : sphere_sites(region, radius)) {
            int v = value(s);
            if (symbol < 0) symbol = v;
            else if (symbol != v)
                fail(ErrorCode::precondition, "expected a monochromatic ring");
        }
        return symbol;
    };
    int w1 = ring_symbol(inner_ring, inner_value);
    int v1 = ring_symbol(outer_ring, outer_value);

    std::vector<int> walk = exact_length_walk(h, w1, v1, outer_ring - inner_ring);

    std::vector<int> cells(region.size());
    for (std::size_t i = 0; i < region.size(); ++i) {
        const Site& s = region.site(static_cast<int>(i));
        int dist = l1_norm(s);
        if (dist <= inner_ring) cells[i] = inner_value(s);
        else if (dist < outer_ring) cells[i] = walk.at(dist - inner_ring);
        else cells[i] = outer_value(s);
    }
    Pattern z(x.graph_ptr(), region, std::move(cells));
    if (!is_valid(z))
        fail(ErrorCode::precondition, "patch assembled an invalid pattern");
    return PatchResult{std::move(z), shifted};
}

} // namespace homshift
