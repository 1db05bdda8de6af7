#include "homshift/pattern.hpp"

#include <algorithm>

namespace homshift {

Pattern::Pattern(std::shared_ptr<const Graph> graph, Region region, std::vector<int> cells)
    : graph_(std::move(graph)), region_(std::move(region)), cells_(std::move(cells)) {
    if (!graph_) fail(ErrorCode::invalid_input, "pattern needs a graph");
    if (cells_.size() != region_.size())
        fail(ErrorCode::invalid_input, "pattern cell count does not match region size");
    for (int c : cells_)
        if (c < 0 || c >= graph_->vertex_count())
            fail(ErrorCode::invalid_input, "pattern cell is not a graph vertex");
}

Pattern Pattern::from_labels(std::shared_ptr<const Graph> graph, Region region,
                             const std::vector<std::string>& labels) {
    std::vector<int> cells;
    cells.reserve(labels.size());
    for (const auto& label : labels) {
        int v = graph->index_of(label);
        if (v < 0) fail(ErrorCode::invalid_input, "label not in graph: " + label);
        cells.push_back(v);
    }
    return Pattern(std::move(graph), std::move(region), std::move(cells));
}

int Pattern::cell_at(const Site& s) const {
    auto idx = region_.index_of(s);
    if (!idx) fail(ErrorCode::invalid_input, "site outside pattern region");
    return cells_[*idx];
}

const std::string& Pattern::label_at(const Site& s) const {
    return graph_->label(cell_at(s));
}

bool Pattern::operator==(const Pattern& other) const {
    return graph_->same_as(other.graph()) && region_ == other.region_ && cells_ == other.cells_;
}

std::optional<std::string> SiteAssignment::at(const Site& s) const {
    auto it = cells_.find(s);
    if (it == cells_.end()) return std::nullopt;
    return it->second;
}

std::vector<Violation> validate_pattern(const Pattern& p) {
    std::vector<Violation> out;
    const Graph& g = p.graph();
    const Region& r = p.region();
    for (const auto& [i, j] : r.adjacent_pairs()) {
        int a = p.cell(i), b = p.cell(j);
        if (!g.adjacent(a, b))
            out.push_back(Violation{r.site(i), r.site(j), g.label(a), g.label(b)});
    }
    return out;
}

bool is_valid(const Pattern& p) { return validate_pattern(p).empty(); }

namespace {

// Cube check: box [-n, n]^d for some n >= 1.
std::optional<int> centered_cube_radius(const Region& r) {
    if (r.kind() != RegionKind::box) return std::nullopt;
    int d = r.dimension();
    int n = -1;
    for (int k = 0; k < d; ++k) {
        int e = r.extents()[k];
        if (e < 3 || e % 2 == 0) return std::nullopt;
        int nk = (e - 1) / 2;
        if (r.origin()[k] != -nk) return std::nullopt;
        if (n < 0) n = nk;
        else if (n != nk) return std::nullopt;
    }
    return n;
}

} // namespace

Pattern reflect_periodize(const Pattern& p) {
    if (!is_valid(p))
        fail(ErrorCode::precondition, "reflect_periodize needs a valid pattern");
    auto n_opt = centered_cube_radius(p.region());
    if (!n_opt)
        fail(ErrorCode::invalid_input,
             "reflect_periodize needs the centered cube [-n,n]^d with n >= 1");
    int n = *n_opt;
    int d = p.region().dimension();
    Region torus = Region::torus(Site(d, 4 * n));

    // Per axis: position t in [0,4n) maps through t-n in [-n,3n), folded onto
    // [-n,n] by k -> k on [-n,n], 2n-k on [n,3n].
    auto fold = [n](int k) { return k <= n ? k : 2 * n - k; };
    std::vector<int> cells(torus.size());
    for (std::size_t i = 0; i < torus.size(); ++i) {
        Site src(d);
        const Site& t = torus.site(static_cast<int>(i));
        for (int k = 0; k < d; ++k) src[k] = fold(t[k] - n);
        cells[i] = p.cell_at(src);
    }
    return Pattern(p.graph_ptr(), torus, std::move(cells));
}

bool is_globally_allowed(const Pattern& p) {
    if (p.region().kind() != RegionKind::box)
        fail(ErrorCode::unsupported_region, "global allowedness is decided on box regions");
    if (!validate_pattern(p).empty()) return false;
    if (p.region().size() == 1) {
        int v = p.cell(0);
        return p.graph().degree(v) > 0;
    }
    // A valid box pattern always extends: reflect the axes of extent >= 2
    // onto tori and stack shifted copies along flat axes. For the centered
    // odd cube the reflection witness is constructed explicitly.
    if (centered_cube_radius(p.region()))
        return validate_pattern(reflect_periodize(p)).empty();
    return true;
}

PatternEnumerator::PatternEnumerator(std::shared_ptr<const Graph> graph, Region region,
                                     const SiteAssignment* boundary)
    : graph_(std::move(graph)), region_(std::move(region)) {
    int n = graph_->vertex_count();
    if (n > 64)
        fail(ErrorCode::resource_limit, "pattern enumeration supports at most 64 vertices");
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::size_t m = region_.size();
    static_allowed_.assign(m, full);
    earlier_neighbors_.assign(m, {});
    self_adjacent_.assign(m, 0);

    for (const auto& [i, j] : region_.adjacent_pairs()) {
        if (i == j) {
            self_adjacent_[i] = 1;
        } else {
            earlier_neighbors_[std::max(i, j)].push_back(std::min(i, j));
        }
    }

    if (boundary) {
        for (const auto& [site, label] : boundary->cells()) {
            int v = graph_->index_of(label);
            if (v < 0)
                fail(ErrorCode::invalid_input, "boundary label not in graph: " + label);
            if (region_.contains(site))
                fail(ErrorCode::invalid_input, "boundary site lies inside the region");
            // constrain region sites adjacent to this fixed outside site
            for (std::size_t k = 0; k < site.size(); ++k) {
                for (int step : {-1, +1}) {
                    Site t = site;
                    t[k] += step;
                    if (auto idx = region_.index_of(t))
                        static_allowed_[*idx] &= graph_->neighbor_mask(v);
                }
            }
        }
    }

    stack_.assign(m, -1);
}

bool PatternEnumerator::advance() {
    const int n = graph_->vertex_count();
    const int m = static_cast<int>(region_.size());
    if (m == 0) return false;
    while (true) {
        if (depth_ == m) {
            // back up to find the next assignment
            --depth_;
        }
        // move the cell at depth_ forward from its current value
        int start = stack_[depth_] + 1;
        int chosen = -1;
        for (int v = start; v < n; ++v) {
            ++nodes_;
            if (!(static_allowed_[depth_] >> v & 1)) continue;
            if (self_adjacent_[depth_] && !graph_->adjacent(v, v)) continue;
            bool ok = true;
            for (int j : earlier_neighbors_[depth_]) {
                if (!graph_->adjacent(v, stack_[j])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0) {
            stack_[depth_] = -1;
            if (depth_ == 0) return false;
            --depth_;
            continue;
        }
        stack_[depth_] = chosen;
        ++depth_;
        if (depth_ == m) return true;
    }
}

std::optional<Pattern> PatternEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (region_.size() == 0) {
        exhausted_ = true;
        if (fresh_) {
            fresh_ = false;
            return Pattern(graph_, region_, {});
        }
        return std::nullopt;
    }
    fresh_ = false;
    if (!advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    return Pattern(graph_, region_, stack_);
}

std::uint64_t count_patterns(std::shared_ptr<const Graph> graph, const Region& region,
                             const SiteAssignment* boundary) {
    PatternEnumerator it(std::move(graph), region, boundary);
    std::uint64_t count = 0;
    while (it.next()) ++count;
    return count;
}

std::vector<Pattern> all_patterns(std::shared_ptr<const Graph> graph, const Region& region,
                                  const SiteAssignment* boundary, std::size_t cap) {
    PatternEnumerator it(std::move(graph), region, boundary);
    std::vector<Pattern> out;
    while (auto p = it.next()) {
        out.push_back(std::move(*p));
        if (cap && out.size() > cap)
            fail(ErrorCode::resource_limit,
                 "pattern enumeration exceeded cap of " + std::to_string(cap) +
                     " (visited " + std::to_string(it.nodes_visited()) + " nodes)");
    }
    return out;
}

} // namespace homshift
