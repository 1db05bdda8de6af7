#include "homshift/entropy.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <numeric>
#include <set>

#include "homshift/pattern.hpp"

namespace homshift {

namespace {

// Valid patterns on the (d-1)-dimensional cross-section box, as cell vectors.
std::vector<std::vector<int>> cross_section_states(const Graph& g,
                                                   const std::vector<int>& extents,
                                                   std::size_t cap) {
    Region section = Region::box(Site(extents.size(), 0),
                                 Site(extents.begin(), extents.end()));
    PatternEnumerator it(std::make_shared<Graph>(g), section, nullptr);
    std::vector<std::vector<int>> states;
    while (auto p = it.next()) {
        states.push_back(p->cells());
        if (states.size() > cap)
            fail(ErrorCode::resource_limit,
                 "transfer state space exceeds " + std::to_string(cap) +
                     " cross-section states");
    }
    return states;
}

bool compatible(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!g.adjacent(a[i], b[i])) return false;
    return true;
}

} // namespace

BigInt count_box_patterns(const Graph& g, const std::vector<int>& extents,
                          std::size_t state_cap) {
    if (extents.empty()) fail(ErrorCode::invalid_input, "box needs at least one axis");
    for (int e : extents)
        if (e < 1) fail(ErrorCode::invalid_input, "box extents must be positive");

    // transfer along the longest axis; cross-section = remaining axes
    std::size_t axis = 0;
    for (std::size_t k = 1; k < extents.size(); ++k)
        if (extents[k] > extents[axis]) axis = k;
    int layers = extents[axis];
    std::vector<int> section;
    for (std::size_t k = 0; k < extents.size(); ++k)
        if (k != axis) section.push_back(extents[k]);
    if (section.empty()) section.push_back(1);

    auto states = cross_section_states(g, section, state_cap);
    std::vector<BigInt> weights(states.size(), 1);
    for (int layer = 1; layer < layers; ++layer) {
        std::vector<BigInt> next(states.size(), 0);
        for (std::size_t a = 0; a < states.size(); ++a) {
            if (weights[a] == 0) continue;
            for (std::size_t b = 0; b < states.size(); ++b)
                if (compatible(g, states[a], states[b])) next[b] += weights[a];
        }
        weights.swap(next);
    }
    BigInt total = 0;
    for (const auto& w : weights) total += w;
    return total;
}

namespace {

double dominant_eigenvalue(const std::vector<std::vector<int>>& adjacency,
                           std::size_t n, int* iterations_out) {
    // Power iteration on T^2 (T is symmetric; squaring handles the bipartite
    // plus-minus pair), deterministic all-ones start, tolerance 1e-10.
    std::vector<double> x(n, 1.0), y(n), z(n);
    double lambda = 0.0;
    int iterations = 0;
    for (; iterations < 20000; ++iterations) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t a = 0; a < n; ++a)
            for (int b : adjacency[a]) y[b] += x[a];
        std::fill(z.begin(), z.end(), 0.0);
        for (std::size_t a = 0; a < n; ++a)
            for (int b : adjacency[a]) z[b] += y[a];
        double norm_x = 0.0, dot = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            norm_x += x[a] * x[a];
            dot += x[a] * z[a];
        }
        if (norm_x == 0.0 || dot == 0.0) {
            lambda = 0.0;
            break;
        }
        double next = std::sqrt(dot / norm_x);
        double scale = 0.0;
        for (double v : z) scale = std::max(scale, std::abs(v));
        for (std::size_t a = 0; a < n; ++a) x[a] = z[a] / scale;
        if (iterations > 0 && std::abs(next - lambda) <= 1e-10 * std::max(1.0, next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    if (iterations_out) *iterations_out = iterations;
    return lambda;
}

bool has_three_vertex_path(const Graph& g) {
    for (int b = 0; b < g.vertex_count(); ++b) {
        int distinct = 0;
        for (int u : g.neighbors(b))
            if (u != b) ++distinct;
        if (distinct >= 2) return true;
    }
    return false;
}

std::shared_ptr<Graph> component_graph(const Graph& g, const std::vector<std::string>& verts) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> in(verts.begin(), verts.end());
    for (auto [a, b] : g.edges()) {
        if (in.count(g.label(a)) && in.count(g.label(b)))
            edges.emplace_back(g.label(a), g.label(b));
    }
    return std::make_shared<Graph>(verts, edges);
}

} // namespace

EntropyReport entropy_report(const Graph& g, int max_width) {
    EntropyReport report;
    if (has_three_vertex_path(g)) report.lower_bound_path2 = std::log(2.0) / 2.0;

    for (int n = 1; n <= 8; ++n) {
        std::vector<int> extents{n, n};
        try {
            BigInt count = count_box_patterns(g, extents, 200'000);
            double logv = static_cast<double>(boost::multiprecision::log(
                boost::multiprecision::cpp_dec_float_100(count)));
            report.box_counts.push_back(
                BoxCount{extents, count, logv / (static_cast<double>(n) * n)});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::resource_limit) throw;
            report.notes.push_back("box " + std::to_string(n) + "x" + std::to_string(n) +
                                   " skipped: " + e.what());
            break;
        }
        if (report.box_counts.back().count == 0) break;
    }

    for (int w = 1; w <= max_width; ++w) {
        std::vector<std::vector<int>> states;
        try {
            states = cross_section_states(g, {w}, 20'000);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::resource_limit) throw;
            report.notes.push_back("strip width " + std::to_string(w) +
                                   " skipped: " + e.what());
            break;
        }
        if (states.empty()) {
            report.notes.push_back("strip width " + std::to_string(w) + ": no valid columns");
            continue;
        }
        std::vector<std::vector<int>> adjacency(states.size());
        for (std::size_t a = 0; a < states.size(); ++a)
            for (std::size_t b = 0; b < states.size(); ++b)
                if (compatible(g, states[a], states[b]))
                    adjacency[a].push_back(static_cast<int>(b));
        int iterations = 0;
        double lambda = dominant_eigenvalue(adjacency, states.size(), &iterations);
        if (lambda <= 0.0) {
            report.notes.push_back("strip width " + std::to_string(w) +
                                   ": transfer operator is nilpotent");
            continue;
        }
        report.strip_estimates.push_back(StripEstimate{w, std::log(lambda) / w, iterations});
    }

    GraphReport gr = analyze_graph(g);
    if (!gr.connected) {
        double best = 0.0;
        for (const auto& comp : gr.components) {
            auto sub = component_graph(g, comp.vertices);
            EntropyReport sub_report = entropy_report(*sub, max_width);
            double value = 0.0;
            if (!sub_report.strip_estimates.empty())
                value = sub_report.strip_estimates.back().per_site_log;
            best = std::max(best, value);
        }
        report.component_rule = best;
    }
    return report;
}

BigInt periodic_count(const Graph& g, int d) {
    if (d < 1) fail(ErrorCode::invalid_input, "dimension must be positive");
    if (d > 5) fail(ErrorCode::resource_limit, "unit-cube enumeration supports d <= 5");
    Region cube = Region::torus(Site(d, 2));
    PatternEnumerator it(std::make_shared<Graph>(g), cube, nullptr);
    BigInt count = 0;
    while (it.next()) ++count;
    return count;
}

FillResult single_site_fillable(const Graph& g, int d) {
    if (d < 1) fail(ErrorCode::invalid_input, "dimension must be positive");
    int n = g.vertex_count();
    int slots = 2 * d;
    double tuples = std::pow(static_cast<double>(n), slots);
    if (tuples > 5e8)
        fail(ErrorCode::resource_limit, "neighbor-tuple scan is infeasible for this size");
    std::vector<int> tuple(slots, 0);
    while (true) {
        bool found = false;
        for (int v = 0; v < n && !found; ++v) {
            bool all = true;
            for (int i = 0; i < slots; ++i)
                if (!g.adjacent(v, tuple[i])) {
                    all = false;
                    break;
                }
            found = all;
        }
        if (!found) {
            std::vector<std::string> witness;
            for (int i = 0; i < slots; ++i) witness.push_back(g.label(tuple[i]));
            return FillResult{false, witness};
        }
        int k = slots - 1;
        while (k >= 0 && tuple[k] == n - 1) tuple[k--] = 0;
        if (k < 0) break;
        ++tuple[k];
    }
    return FillResult{true, std::nullopt};
}

} // namespace homshift
