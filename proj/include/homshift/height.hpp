#pragma once

#include <string>
#include <vector>

#include "homshift/cover.hpp"
#include "homshift/pattern.hpp"

namespace homshift {

/// A pattern together with its unique lift to the universal cover of its
/// graph, anchored at one site.
struct LiftPattern {
    Pattern base;
    Site anchor_site;
    CoverVertex anchor_vertex;
    std::vector<CoverVertex> cells; // by site index of base.region()

    const CoverVertex& at(const Site& s) const;
};

/// Lifts a valid pattern on a connected box/diamond region of a connected
/// four-cycle-free graph; the lift is the unique one through the anchor.
LiftPattern lift(const Pattern& p, const Site& anchor_site,
                 const CoverVertex& anchor_vertex);

/// Default anchor: lexicographically first site, rooted over its own label.
LiftPattern lift(const Pattern& p);

/// Same lift, different site-processing order (for order-independence
/// checks); the result must coincide with lift().
LiftPattern lift_depth_first(const Pattern& p, const Site& anchor_site,
                             const CoverVertex& anchor_vertex);

/// Tree distance between the lifted values at two sites; anchor-free.
int height(const Pattern& p, const Site& i, const Site& j);
int height(const LiftPattern& lp, const Site& i, const Site& j);

/// Max height over all site pairs in A.
int range(const Pattern& p, const std::vector<Site>& sites);
int range(const LiftPattern& lp, const std::vector<Site>& sites);

/// Sphere of radius m around the origin intersected with the region.
std::vector<Site> sphere_sites(const Region& region, int m);

struct SlopeEstimate {
    std::vector<int> direction;
    int period = 0;             // N: lattice period along the direction
    std::vector<double> values; // f_m = h(0, m N dir) / (m N), m = 1..depth
    double upper_bound = 0.0;   // min of values
    std::string note;           // "converged" when two successive values agree
};

/// Deterministic slope bound for a periodic (torus) pattern, computed by
/// unrolling the torus along the direction.
SlopeEstimate slope_estimate(const Pattern& torus_pattern,
                             const std::vector<int>& direction, int depth);

/// Copies a torus pattern onto a box through the periodic extension.
Pattern unroll_torus(const Pattern& torus_pattern, const Region& box_region);

} // namespace homshift
