#pragma once

#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

/// Vertex of the universal cover of a graph: a reduced (non-backtracking)
/// walk from a fixed base vertex, stored as the vertex-index sequence with
/// walk[0] = base. The root is the one-entry walk (base). The canonical
/// order on cover vertices is (length, then entrywise) — used for every
/// deterministic tie-break on cover machinery.
class CoverVertex {
public:
    explicit CoverVertex(std::vector<int> walk);
    static CoverVertex root(int base) { return CoverVertex({base}); }

    int base() const { return walk_.front(); }
    int terminal() const { return walk_.back(); } // the covering map
    int length() const { return static_cast<int>(walk_.size()) - 1; }
    const std::vector<int>& walk() const { return walk_; }

    CoverVertex parent() const; // root has none; error
    bool is_root() const { return walk_.size() == 1; }

    bool operator==(const CoverVertex& o) const { return walk_ == o.walk_; }
    bool operator!=(const CoverVertex& o) const { return walk_ != o.walk_; }
    bool operator<(const CoverVertex& o) const {
        if (walk_.size() != o.walk_.size()) return walk_.size() < o.walk_.size();
        return walk_ < o.walk_;
    }

private:
    std::vector<int> walk_;
};

/// Validates adjacency and non-backtracking against h.
CoverVertex make_cover_vertex(const Graph& h, std::vector<int> walk);

/// Parent plus every one-step non-backtracking extension.
std::vector<CoverVertex> cover_neighbors(const Graph& h, const CoverVertex& v);

/// Joins two walks (p ends where q begins) and erases backtracking; walks
/// are vertex-index sequences, not required to be reduced on input.
std::vector<int> reduce_concat(const Graph& h, const std::vector<int>& p,
                               const std::vector<int>& q);

/// Tree distance in the prefix tree; both vertices must share the base.
int cover_distance(const CoverVertex& p, const CoverVertex& q);

/// Geodesic from `from` to `to` inclusive (tree path through the longest
/// common prefix).
std::vector<CoverVertex> cover_geodesic(const CoverVertex& from, const CoverVertex& to);

/// Deck transformation determined by a closed walk at the base, applied to
/// a cover vertex: the reduction of (closed_walk * v).
CoverVertex deck_transform(const Graph& h, const std::vector<int>& closed_walk,
                           const CoverVertex& v);

/// All cover vertices within the given tree distance of the root over
/// `base`, in canonical order. `cap` bounds the total count.
std::vector<CoverVertex> enumerate_cover(const Graph& h, int base, int radius,
                                         std::size_t cap = 1u << 20);

} // namespace homshift
