#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homshift/errors.hpp"

namespace homshift {

/// Finite undirected graph with optional self-loops. Vertex declaration
/// order is the canonical tie-breaking order used by every other module.
class Graph {
public:
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    /// Index of a label, -1 if not declared.
    int index_of(const std::string& label) const;

    bool adjacent(int a, int b) const { return adj_[a][b] != 0; }
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
    int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
    bool has_loop(int v) const { return adj_[v][v] != 0; }

    /// Edges as index pairs (a <= b), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighborhood as a bitmask; only valid when vertex_count() <= 64.
    std::uint64_t neighbor_mask(int v) const;

    bool same_as(const Graph& other) const;

    /// N(a) included in N(b), self-loops counted.
    bool neighborhood_subset(int a, int b) const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::pair<int, int>> edges_;
};

struct ComponentInfo {
    std::vector<std::string> vertices;
    int diameter = 0; // max BFS distance within the component
};

struct FourCycleWitness {
    std::array<std::string, 4> cycle; // a ~ b ~ c ~ d ~ a, all distinct
};

struct GraphReport {
    bool connected = false;
    std::vector<ComponentInfo> components;
    bool bipartite = false;
    std::optional<std::map<std::string, int>> two_coloring; // witness when bipartite
    bool has_self_loop = false;
    bool four_cycle_free = false;
    std::optional<FourCycleWitness> four_cycle; // witness when a C4 exists
    bool is_tree = false;
    std::optional<int> diameter; // nullopt marks infinity (disconnected)
};

GraphReport analyze_graph(const Graph& g);

bool is_four_cycle_free(const Graph& g);
bool is_connected(const Graph& g);

/// 2-coloring by vertex index when bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

} // namespace homshift
