#include "homshift/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace homshift {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            fail(ErrorCode::invalid_input, "duplicate vertex label: " + labels_[i]);
    }
    int n = vertex_count();
    adj_.assign(n, std::vector<char>(n, 0));
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int ia = index_of(a), ib = index_of(b);
        if (ia < 0 || ib < 0)
            fail(ErrorCode::invalid_input, "edge endpoint not declared: " + (ia < 0 ? a : b));
        auto key = std::minmax(ia, ib);
        if (!seen.insert(key).second)
            fail(ErrorCode::invalid_input, "duplicate edge: " + a + "-" + b);
        adj_[ia][ib] = adj_[ib][ia] = 1;
    }
    neighbors_.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (adj_[v][w]) neighbors_[v].push_back(w);
    edges_.assign(seen.begin(), seen.end());
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    if (vertex_count() > 64)
        fail(ErrorCode::resource_limit, "neighbor masks need at most 64 vertices");
    std::uint64_t m = 0;
    for (int w : neighbors_[v]) m |= std::uint64_t{1} << w;
    return m;
}

bool Graph::same_as(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
}

bool Graph::neighborhood_subset(int a, int b) const {
    for (int w : neighbors_[a])
        if (!adj_[b][w]) return false;
    return true;
}

namespace {

// BFS distances from src; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (w == v) return std::nullopt; // self-loop
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

std::optional<FourCycleWitness> find_four_cycle(const Graph& g) {
    int n = g.vertex_count();
    // A C4 exists iff two distinct vertices share two distinct common
    // neighbors; in a loop-free graph those neighbors avoid both endpoints.
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            int first = -1;
            for (int x : g.neighbors(u)) {
                if (x == u || x == w) continue;
                if (!g.adjacent(w, x)) continue;
                if (first < 0) {
                    first = x;
                } else {
                    return FourCycleWitness{
                        {g.label(u), g.label(first), g.label(w), g.label(x)}};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool is_four_cycle_free(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_loop(v)) return false;
    return !find_four_cycle(g).has_value();
}

GraphReport analyze_graph(const Graph& g) {
    if (g.vertex_count() == 0)
        fail(ErrorCode::invalid_input, "graph has an empty vertex set");

    GraphReport report;
    int n = g.vertex_count();

    std::vector<int> component(n, -1);
    int component_count = 0;
    for (int s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v)
            if (dist[v] >= 0 && component[v] < 0) component[v] = component_count;
        ++component_count;
    }
    report.components.resize(component_count);
    for (int v = 0; v < n; ++v)
        report.components[component[v]].vertices.push_back(g.label(v));

    for (auto& comp : report.components) {
        int diameter = 0;
        for (const auto& label : comp.vertices) {
            auto dist = bfs_distances(g, g.index_of(label));
            for (const auto& other : comp.vertices)
                diameter = std::max(diameter, dist[g.index_of(other)]);
        }
        comp.diameter = diameter;
    }

    report.connected = component_count == 1;
    if (report.connected)
        report.diameter = report.components[0].diameter;

    for (int v = 0; v < n && !report.has_self_loop; ++v)
        report.has_self_loop = g.has_loop(v);

    if (auto coloring = two_coloring(g)) {
        report.bipartite = true;
        std::map<std::string, int> witness;
        for (int v = 0; v < n; ++v) witness[g.label(v)] = (*coloring)[v];
        report.two_coloring = std::move(witness);
    }

    if (report.has_self_loop) {
        report.four_cycle_free = false;
    } else {
        report.four_cycle = find_four_cycle(g);
        report.four_cycle_free = !report.four_cycle.has_value();
    }

    std::size_t edge_count = g.edges().size();
    report.is_tree = report.connected && !report.has_self_loop &&
                     edge_count == static_cast<std::size_t>(n) - 1;
    return report;
}

} // namespace homshift
