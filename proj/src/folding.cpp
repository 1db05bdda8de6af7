#include "homshift/folding.hpp"

#include <algorithm>

namespace homshift {

const std::string& FoldStep::apply(const std::string& label) const {
    auto it = target.find(label);
    return it == target.end() ? label : it->second;
}

const char* stiff_class_name(StiffClass c) {
    switch (c) {
    case StiffClass::edge: return "edge";
    case StiffClass::looped_vertex: return "looped-vertex";
    case StiffClass::other: return "other";
    }
    return "other";
}

std::string FoldSequence::compose(const std::string& label) const {
    std::string cur = label;
    for (const auto& step : steps) cur = step.apply(cur);
    return cur;
}

std::vector<std::pair<std::string, std::string>> fold_candidates(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (v != w && g.neighborhood_subset(v, w))
                out.emplace_back(g.label(v), g.label(w));
    return out;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.label(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a; b < keep.size(); ++b)
            if (g.adjacent(keep[a], keep[b]))
                edges.emplace_back(labels[a], labels[b]);
    return Graph(std::move(labels), edges);
}

} // namespace

FoldStep full_config_fold(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<char>> folds(n, std::vector<char>(n, 0));
    bool any = false;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (v != w && g.neighborhood_subset(v, w)) {
                folds[v][w] = 1;
                any = true;
            }
    if (!any) fail(ErrorCode::nothing_to_fold, "graph is stiff");

    // M = vertices all of whose fold targets fold back; its classes are the
    // groups of equal neighborhoods. Keep the first vertex of each class.
    std::vector<char> in_m(n, 1);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n && in_m[v]; ++w)
            if (folds[v][w] && !folds[w][v]) in_m[v] = 0;

    std::vector<int> class_rep(n, -1);
    std::vector<char> kept(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!in_m[v]) continue;
        int rep = v;
        for (int w = 0; w < v; ++w)
            if (in_m[w] && folds[v][w] && folds[w][v]) {
                rep = class_rep[w];
                break;
            }
        class_rep[v] = rep;
        if (rep == v) kept[v] = 1;
    }

    std::vector<std::string> removed;
    std::map<std::string, std::string> target;
    std::vector<int> keep_list;
    for (int v = 0; v < n; ++v) {
        if (in_m[v] && kept[v]) {
            keep_list.push_back(v);
            continue;
        }
        removed.push_back(g.label(v));
        if (in_m[v]) {
            target[g.label(v)] = g.label(class_rep[v]);
        } else {
            int t = -1;
            for (int w = 0; w < n; ++w)
                if (in_m[w] && kept[w] && folds[v][w]) {
                    t = w;
                    break;
                }
            if (t < 0)
                fail(ErrorCode::invalid_input, "no retained fold target for " + g.label(v));
            target[g.label(v)] = g.label(t);
        }
    }

    return FoldStep{g, std::move(removed), std::move(target),
                    induced_subgraph(g, keep_list)};
}

FoldSequence fold_to_stiff(const Graph& g) {
    FoldSequence seq{.steps = {}, .stiff = g};
    Graph cur = g;
    while (!fold_candidates(cur).empty()) {
        FoldStep step = full_config_fold(cur);
        cur = step.remaining;
        seq.steps.push_back(std::move(step));
    }
    seq.stiff = cur;
    seq.fold_radius = static_cast<int>(seq.steps.size());
    if (cur.vertex_count() == 2 && cur.edges().size() == 1 && !cur.has_loop(0) &&
        !cur.has_loop(1))
        seq.classification = StiffClass::edge;
    else if (cur.vertex_count() == 1 && cur.has_loop(0))
        seq.classification = StiffClass::looped_vertex;
    else
        seq.classification = StiffClass::other;
    return seq;
}

namespace {

// Sites of the non-fixed zone plus its collar inside the region.
std::vector<int> folded_zone_with_collar(const Region& region,
                                         const std::vector<char>& fixed) {
    std::vector<char> take(region.size(), 0);
    for (std::size_t i = 0; i < region.size(); ++i)
        if (!fixed[i]) take[i] = 1;
    for (const auto& [a, b] : region.adjacent_pairs()) {
        if (!fixed[a]) take[b] = 1;
        if (!fixed[b]) take[a] = 1;
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < region.size(); ++i)
        if (take[i]) out.push_back(static_cast<int>(i));
    return out;
}

} // namespace

Pattern apply_fold_outside(const Pattern& p, const FoldStep& step,
                           const std::set<Site>& fixed) {
    const Region& region = p.region();
    const Graph& g = p.graph();
    const Graph& before = step.before;

    // step.before must embed in the pattern's graph as a subgraph
    for (const auto& v : before.vertices())
        if (g.index_of(v) < 0)
            fail(ErrorCode::invalid_input, "fold graph vertex missing from pattern graph: " + v);
    for (const auto& [a, b] : before.edges())
        if (!g.adjacent(g.index_of(before.label(a)), g.index_of(before.label(b))))
            fail(ErrorCode::invalid_input, "fold graph edge missing from pattern graph");

    if (!is_valid(p))
        fail(ErrorCode::precondition, "apply_fold_outside needs a valid pattern");

    std::vector<char> is_fixed(region.size(), 0);
    for (const auto& s : fixed) {
        auto idx = region.index_of(s);
        if (!idx) fail(ErrorCode::invalid_input, "fixed site outside pattern region");
        is_fixed[*idx] = 1;
    }

    // The folded zone and its collar must carry a valid step.before pattern.
    auto zone = folded_zone_with_collar(region, is_fixed);
    std::vector<char> in_zone(region.size(), 0);
    std::vector<int> before_cell(region.size(), -1);
    for (int i : zone) {
        in_zone[i] = 1;
        int bv = before.index_of(g.label(p.cell(i)));
        if (bv < 0)
            fail(ErrorCode::precondition,
                 "cell outside the fixed zone is not a fold-graph symbol");
        before_cell[i] = bv;
    }
    for (const auto& [a, b] : region.adjacent_pairs())
        if (in_zone[a] && in_zone[b] && !before.adjacent(before_cell[a], before_cell[b]))
            fail(ErrorCode::precondition,
                 "pattern is not fold-graph valid on the folded zone collar");

    std::vector<int> cells = p.cells();
    for (std::size_t i = 0; i < region.size(); ++i) {
        if (is_fixed[i]) continue;
        const std::string& mapped = step.apply(g.label(cells[i]));
        cells[i] = g.index_of(mapped);
    }
    return p.with_cells(std::move(cells));
}

Pattern onion_fix(const Pattern& p, int n, OnionDirection direction) {
    const Region& region = p.region();
    if (region.kind() == RegionKind::torus)
        fail(ErrorCode::unsupported_region, "onion fixing needs a box or diamond region");
    if (n < 0) fail(ErrorCode::invalid_parameter, "n must be nonnegative");
    if (!is_valid(p)) fail(ErrorCode::precondition, "onion_fix needs a valid pattern");

    FoldSequence seq = fold_to_stiff(p.graph());
    int r = seq.fold_radius;
    if (r == 0) return p;

    if (direction == OnionDirection::outward && n <= r)
        fail(ErrorCode::invalid_parameter, "outward fixing needs n > fold-radius");

    int needed = direction == OnionDirection::inward ? n + r : n;
    const Region needed_ball = Region::diamond(Site(region.dimension(), 0), needed);
    for (const Site& s : needed_ball.sites())
        if (!region.contains(s))
            fail(ErrorCode::precondition, "pattern region does not contain the needed ball");

    const Graph& g = p.graph();
    std::vector<int> cells = p.cells();
    for (std::size_t i = 0; i < region.size(); ++i) {
        int dist = l1_norm(region.site(static_cast<int>(i)));
        std::string label = g.label(cells[i]);
        for (int t = 0; t < r; ++t) {
            bool apply = direction == OnionDirection::inward ? dist > n + t : dist <= n - t;
            if (apply) label = seq.steps[t].apply(label);
        }
        cells[i] = g.index_of(label);
    }
    return p.with_cells(std::move(cells));
}

} // namespace homshift
