#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/region.hpp"

namespace homshift {

/// Finite assignment of graph vertices to the sites of a region. Cells are
/// stored as vertex indices in the region's canonical site order. A pattern
/// is a plain value; nothing mutates it after construction.
class Pattern {
public:
    Pattern(std::shared_ptr<const Graph> graph, Region region, std::vector<int> cells);

    static Pattern from_labels(std::shared_ptr<const Graph> graph, Region region,
                               const std::vector<std::string>& labels);

    const Graph& graph() const { return *graph_; }
    std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
    const Region& region() const { return region_; }

    int cell(int site_index) const { return cells_.at(site_index); }
    const std::vector<int>& cells() const { return cells_; }
    int cell_at(const Site& s) const;
    const std::string& label_at(const Site& s) const;

    Pattern with_cells(std::vector<int> cells) const { return Pattern(graph_, region_, std::move(cells)); }

    bool operator==(const Pattern& other) const;

private:
    std::shared_ptr<const Graph> graph_;
    Region region_;
    std::vector<int> cells_;
};

/// Partial site-to-label assignment; the representation for boundary
/// conditions (absent boundary = free).
class SiteAssignment {
public:
    SiteAssignment() = default;

    void set(const Site& s, const std::string& label) { cells_[s] = label; }
    const std::map<Site, std::string>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    std::optional<std::string> at(const Site& s) const;

private:
    std::map<Site, std::string> cells_;
};

struct Violation {
    Site a, b;
    std::string label_a, label_b;
};

/// Every adjacent site pair whose labels are not adjacent in the graph;
/// empty means the pattern is (locally) valid.
std::vector<Violation> validate_pattern(const Pattern& p);

bool is_valid(const Pattern& p);

/// Reflects a pattern on the centered odd cube [-n, n]^d to a torus of
/// extents (4n)^d; the output is valid whenever the input is, agrees with
/// the input on the embedded cube, and uses exactly the input's symbols.
Pattern reflect_periodize(const Pattern& p);

/// Whether a box pattern extends to a full configuration; for hom-shifts
/// this coincides with local validity (plus a non-isolated vertex on a
/// single-cell box).
bool is_globally_allowed(const Pattern& p);

/// Streams the valid patterns on a region consistent with an optional
/// boundary assignment on outside sites, in lexicographic cell order.
class PatternEnumerator {
public:
    PatternEnumerator(std::shared_ptr<const Graph> graph, Region region,
                      const SiteAssignment* boundary = nullptr);

    std::optional<Pattern> next();

    /// Nodes visited so far (partial-progress indicator for caps).
    std::uint64_t nodes_visited() const { return nodes_; }

private:
    bool advance();

    std::shared_ptr<const Graph> graph_;
    Region region_;
    std::vector<std::uint64_t> static_allowed_;          // boundary constraints per site
    std::vector<std::vector<int>> earlier_neighbors_;    // in-region neighbors with smaller index
    std::vector<int> self_adjacent_;                     // torus extent-1 self pairs
    std::vector<int> stack_;                             // current cells, -1 = unset
    int depth_ = 0;
    bool exhausted_ = false;
    bool fresh_ = true;
    std::uint64_t nodes_ = 0;
};

std::uint64_t count_patterns(std::shared_ptr<const Graph> graph, const Region& region,
                             const SiteAssignment* boundary = nullptr);

std::vector<Pattern> all_patterns(std::shared_ptr<const Graph> graph, const Region& region,
                                  const SiteAssignment* boundary = nullptr,
                                  std::size_t cap = 0);

} // namespace homshift
