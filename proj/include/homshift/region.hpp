#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include "homshift/errors.hpp"

namespace homshift {

using Site = std::vector<int>;

inline int l1_norm(const Site& s) {
    int n = 0;
    for (int c : s) n += std::abs(c);
    return n;
}

inline int l1_distance(const Site& a, const Site& b) {
    int n = 0;
    for (std::size_t k = 0; k < a.size(); ++k) n += std::abs(a[k] - b[k]);
    return n;
}

enum class RegionKind { box, diamond, torus };

/// Finite piece of Z^d. Boxes and diamonds carry nearest-neighbor adjacency;
/// tori wrap every axis. Sites are kept in lexicographic order, which is the
/// canonical order everywhere (cell storage, enumeration, tie-breaks).
class Region {
public:
    static Region box(Site origin, Site extents);
    static Region diamond(Site center, int radius);
    static Region torus(Site extents);

    RegionKind kind() const { return kind_; }
    int dimension() const { return d_; }
    std::size_t size() const { return sites_.size(); }
    const std::vector<Site>& sites() const { return sites_; }
    const Site& site(int index) const { return sites_.at(index); }

    const Site& origin() const { return origin_; }   // box
    const Site& extents() const { return extents_; } // box, torus
    const Site& center() const { return center_; }   // diamond
    int radius() const { return radius_; }           // diamond

    bool contains(const Site& s) const;
    /// Index of a site, wrapping first for torus regions; nullopt if outside.
    std::optional<int> index_of(const Site& s) const;
    Site canonical(const Site& s) const; // torus representative, identity otherwise

    /// In-region neighbor indices of a site (wrapped for torus).
    const std::vector<int>& neighbor_indices(int index) const { return neighbors_[index]; }

    /// Every unordered adjacent pair once, by site index. A torus axis of
    /// extent 1 yields self-pairs (i, i).
    const std::vector<std::pair<int, int>>& adjacent_pairs() const { return pairs_; }

    /// Sites outside the region within l1-distance `thickness` of it
    /// (the r-boundary). Empty for torus regions.
    std::vector<Site> boundary_sites(int thickness = 1) const;

    /// Region sites all of whose 2d lattice neighbors are again in the
    /// region (every site, for a torus).
    std::vector<int> interior_indices() const;

    bool operator==(const Region& other) const;

private:
    Region() = default;
    void build_sites();

    RegionKind kind_ = RegionKind::box;
    int d_ = 0;
    Site origin_, extents_, center_;
    int radius_ = 0;
    std::vector<Site> sites_;
    std::map<Site, int> index_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::pair<int, int>> pairs_;
};

} // namespace homshift
