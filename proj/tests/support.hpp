#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/pattern.hpp"

namespace testsupport {

using homshift::Graph;
using homshift::Pattern;
using homshift::Region;
using homshift::Site;

using Edges = std::vector<std::pair<std::string, std::string>>;

inline std::shared_ptr<const Graph> make_graph(std::vector<std::string> vertices,
                                               const Edges& edges) {
    return std::make_shared<Graph>(std::move(vertices), edges);
}

inline std::shared_ptr<const Graph> path_graph(int n) {
    std::vector<std::string> v;
    Edges e;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, char('a' + i)));
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(v[i], v[i + 1]);
    return make_graph(std::move(v), e);
}

inline std::shared_ptr<const Graph> cycle_graph(int n) {
    std::vector<std::string> v;
    Edges e;
    for (int i = 0; i < n; ++i) v.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
    return make_graph(std::move(v), e);
}

inline std::shared_ptr<const Graph> complete_graph(int n) {
    std::vector<std::string> v;
    Edges e;
    for (int i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
    return make_graph(std::move(v), e);
}

inline std::shared_ptr<const Graph> star_graph(int leaves) {
    std::vector<std::string> v{"z"};
    Edges e;
    for (int i = 0; i < leaves; ++i) {
        v.push_back(std::string(1, char('a' + i)));
        e.emplace_back("z", v.back());
    }
    return make_graph(std::move(v), e);
}

inline std::shared_ptr<const Graph> edge_graph() { return path_graph(2); }

inline std::shared_ptr<const Graph> hard_square_graph() {
    return make_graph({"0", "1"}, {{"0", "0"}, {"0", "1"}});
}

/// Labeled trees on n vertices from Prüfer sequences (n >= 1).
inline std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (n == 1) {
        trees.push_back({});
        return trees;
    }
    if (n == 2) {
        trees.push_back({{0, 1}});
        return trees;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> deg(n, 1);
        for (int s : seq) ++deg[s];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> used(n, 0);
        for (int s : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1 && !used[v]) {
                    leaf = v;
                    break;
                }
            edges.emplace_back(leaf, s);
            used[leaf] = 1;
            --deg[s];
        }
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!used[v] && deg[v] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        trees.push_back(std::move(edges));
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    return trees;
}

inline std::shared_ptr<const Graph> tree_to_graph(int n,
                                                  const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back("t" + std::to_string(i));
    Edges e;
    for (auto [a, b] : edges) e.emplace_back(v[a], v[b]);
    return make_graph(std::move(v), e);
}

/// Brute-force isomorphism for small graphs (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i; j < n && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Independent four-cycle oracle: scan ordered 4-tuples of distinct vertices.
inline bool has_c4_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                        g.adjacent(d, a))
                        return true;
                }
    return false;
}

/// Pattern on a region via a cell function site -> label.
inline Pattern pattern_from_fn(std::shared_ptr<const Graph> g, const Region& region,
                               const std::function<std::string(const Site&)>& fn) {
    std::vector<std::string> labels;
    for (const Site& s : region.sites()) labels.push_back(fn(s));
    return Pattern::from_labels(std::move(g), region, labels);
}

inline Region centered_square(int size) {
    int h = (size - 1) / 2;
    return Region::box({-h, -h}, {size, size});
}

} // namespace testsupport
