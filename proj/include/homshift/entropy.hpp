#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"

namespace homshift {

using BigInt = boost::multiprecision::cpp_int;

/// Exact number of valid patterns on a box, by transfer-matrix dynamic
/// programming over cross-sections along the longest axis.
BigInt count_box_patterns(const Graph& g, const std::vector<int>& extents,
                          std::size_t state_cap = 2'000'000);

struct BoxCount {
    std::vector<int> extents;
    BigInt count;
    double per_site_log = 0.0;
};

struct StripEstimate {
    int width = 0;
    double per_site_log = 0.0; // log(dominant eigenvalue) / width
    int iterations = 0;
};

struct EntropyReport {
    std::vector<BoxCount> box_counts;                // square boxes up to feasibility
    std::vector<StripEstimate> strip_estimates;      // labeled estimates, not bounds
    std::optional<double> lower_bound_path2;         // (log 2)/2 when a 3-vertex path exists
    std::optional<double> component_rule;            // max over components when disconnected
    std::vector<std::string> notes;
};

EntropyReport entropy_report(const Graph& g, int max_width);

/// Valid assignments on the unit cube {0,1}^d with doubled-torus adjacency
/// (equivalently graph homomorphisms from the d-hypercube).
BigInt periodic_count(const Graph& g, int d);

struct FillResult {
    bool fillable = false;
    std::optional<std::vector<std::string>> witness; // unfillable neighbor tuple
};

/// Whether every 2d-tuple of vertices admits a common neighbor.
FillResult single_site_fillable(const Graph& g, int d);

} // namespace homshift
