#include "homshift/io.hpp"

#include <filesystem>
#include <fstream>

namespace homshift::io {

namespace {

Site site_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        fail(ErrorCode::invalid_input, "site must be a nonempty array");
    Site s;
    for (const auto& c : j) s.push_back(c.get<int>());
    return s;
}

json site_to_json(const Site& s) { return json(s); }

} // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
    j["edges"] = std::move(edges);
    return j;
}

std::shared_ptr<const Graph> graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(ErrorCode::invalid_input, "graph json needs 'vertices' and 'edges'");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            fail(ErrorCode::invalid_input, "each edge must be a two-element array");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return std::make_shared<Graph>(std::move(vertices), edges);
}

std::shared_ptr<const Graph> load_graph(const std::string& path) {
    return graph_from_json(load_json_file(path));
}

json region_to_json(const Region& r) {
    json j;
    switch (r.kind()) {
    case RegionKind::box:
        j["kind"] = "box";
        j["origin"] = site_to_json(r.origin());
        j["extents"] = site_to_json(r.extents());
        break;
    case RegionKind::diamond:
        j["kind"] = "diamond";
        j["center"] = site_to_json(r.center());
        j["radius"] = r.radius();
        break;
    case RegionKind::torus:
        j["kind"] = "torus";
        j["extents"] = site_to_json(r.extents());
        break;
    }
    return j;
}

Region region_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "box")
        return Region::box(site_from_json(j.at("origin")), site_from_json(j.at("extents")));
    if (kind == "diamond")
        return Region::diamond(site_from_json(j.at("center")), j.at("radius").get<int>());
    if (kind == "torus") return Region::torus(site_from_json(j.at("extents")));
    fail(ErrorCode::invalid_input, "unknown region kind: " + kind);
}

namespace {

// Nested row-major cell layout for box/torus regions.
void flatten_cells(const json& node, int axis, int d, const Site& extents,
                   std::vector<std::string>& out) {
    if (axis == d) {
        out.push_back(node.get<std::string>());
        return;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != extents[axis])
        fail(ErrorCode::invalid_input,
             "cells axis " + std::to_string(axis) + " expects " +
                 std::to_string(extents[axis]) + " entries");
    for (const auto& child : node) flatten_cells(child, axis + 1, d, extents, out);
}

json nest_cells(const Pattern& p, int axis, int d, const Site& extents, int& cursor) {
    if (axis == d) return p.graph().label(p.cell(cursor++));
    json arr = json::array();
    for (int i = 0; i < extents[axis]; ++i)
        arr.push_back(nest_cells(p, axis + 1, d, extents, cursor));
    return arr;
}

} // namespace

json pattern_to_json(const Pattern& p, bool inline_graph) {
    json j;
    if (inline_graph) j["graph"] = graph_to_json(p.graph());
    j["d"] = p.region().dimension();
    j["region"] = region_to_json(p.region());
    if (p.region().kind() == RegionKind::diamond) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < p.region().size(); ++i)
            labels.push_back(p.graph().label(p.cell(static_cast<int>(i))));
        j["cells"] = labels;
    } else {
        int cursor = 0;
        j["cells"] = nest_cells(p, 0, p.region().dimension(), p.region().extents(), cursor);
    }
    return j;
}

Pattern pattern_from_json(const json& j, std::shared_ptr<const Graph> graph_override,
                          const std::string& base_dir) {
    std::shared_ptr<const Graph> graph = std::move(graph_override);
    if (!graph) {
        if (!j.contains("graph"))
            fail(ErrorCode::invalid_input, "pattern has no graph and none was supplied");
        const json& gj = j.at("graph");
        if (gj.is_string()) {
            std::filesystem::path p = gj.get<std::string>();
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            graph = load_graph(p.string());
        } else {
            graph = graph_from_json(gj);
        }
    }
    Region region = region_from_json(j.at("region"));
    if (j.contains("d") && j.at("d").get<int>() != region.dimension())
        fail(ErrorCode::invalid_input, "pattern 'd' disagrees with the region dimension");

    std::vector<std::string> labels;
    const json& cells = j.at("cells");
    if (region.kind() == RegionKind::diamond) {
        labels = cells.get<std::vector<std::string>>();
    } else if (cells.is_array() && !cells.empty() && cells[0].is_string() &&
               region.dimension() > 1) {
        labels = cells.get<std::vector<std::string>>(); // flat list also accepted
    } else {
        flatten_cells(cells, 0, region.dimension(), region.extents(), labels);
    }
    if (labels.size() != region.size())
        fail(ErrorCode::invalid_input, "pattern cell count does not match the region");
    return Pattern::from_labels(std::move(graph), std::move(region), labels);
}

Pattern load_pattern(const std::string& path, std::shared_ptr<const Graph> graph_override) {
    std::filesystem::path p(path);
    return pattern_from_json(load_json_file(path), std::move(graph_override),
                             p.parent_path().string());
}

json assignment_to_json(const SiteAssignment& a) {
    json cells = json::array();
    for (const auto& [site, label] : a.cells())
        cells.push_back({{"site", site_to_json(site)}, {"label", label}});
    return json{{"cells", std::move(cells)}};
}

SiteAssignment assignment_from_json(const json& j) {
    SiteAssignment a;
    for (const auto& cell : j.at("cells"))
        a.set(site_from_json(cell.at("site")), cell.at("label").get<std::string>());
    return a;
}

SiteAssignment load_assignment(const std::string& path) {
    return assignment_from_json(load_json_file(path));
}

json report_to_json(const GraphReport& r) {
    json j;
    j["connected"] = r.connected;
    json comps = json::array();
    for (const auto& c : r.components)
        comps.push_back({{"vertices", c.vertices}, {"diameter", c.diameter}});
    j["components"] = std::move(comps);
    j["bipartite"] = r.bipartite;
    if (r.two_coloring) j["two_coloring"] = *r.two_coloring;
    j["has_self_loop"] = r.has_self_loop;
    j["four_cycle_free"] = r.four_cycle_free;
    if (r.four_cycle)
        j["four_cycle"] = std::vector<std::string>(r.four_cycle->cycle.begin(),
                                                   r.four_cycle->cycle.end());
    j["is_tree"] = r.is_tree;
    if (r.diameter) j["diameter"] = *r.diameter;
    else j["diameter"] = "infinity";
    return j;
}

json fold_step_to_json(const FoldStep& s) {
    json j;
    j["removed"] = s.removed;
    j["target"] = s.target;
    j["remaining"] = graph_to_json(s.remaining);
    return j;
}

json fold_sequence_to_json(const FoldSequence& s) {
    json steps = json::array();
    for (const auto& step : s.steps) steps.push_back(fold_step_to_json(step));
    return json{{"steps", std::move(steps)},
                {"stiff", graph_to_json(s.stiff)},
                {"fold_radius", s.fold_radius},
                {"classification", stiff_class_name(s.classification)}};
}

json violations_to_json(const std::vector<Violation>& v) {
    json arr = json::array();
    for (const auto& viol : v)
        arr.push_back({{"site_a", site_to_json(viol.a)},
                       {"site_b", site_to_json(viol.b)},
                       {"label_a", viol.label_a},
                       {"label_b", viol.label_b}});
    return arr;
}

json chain_to_json(const PivotChain& c) {
    json deltas = json::array();
    for (const auto& d : c.deltas)
        deltas.push_back({{"site", site_to_json(d.site)}, {"from", d.from}, {"to", d.to}});
    return json{{"initial", pattern_to_json(c.initial)},
                {"deltas", std::move(deltas)},
                {"length", c.deltas.size()}};
}

json reconfig_to_json(const ReconfigReport& r, bool include_witness) {
    json j;
    j["component_count"] = r.component_count;
    j["component_sizes"] = r.component_sizes;
    j["moves_radius"] = r.moves_radius;
    j["states"] = r.states;
    if (include_witness && r.witness_pair)
        j["witness_pair"] = {pattern_to_json(r.witness_pair->first, false),
                             pattern_to_json(r.witness_pair->second, false)};
    return j;
}

json slope_to_json(const SlopeEstimate& s) {
    return json{{"direction", s.direction},
                {"period", s.period},
                {"values", s.values},
                {"upper_bound", s.upper_bound},
                {"note", s.note}};
}

json entropy_to_json(const EntropyReport& r) {
    json boxes = json::array();
    for (const auto& b : r.box_counts)
        boxes.push_back({{"extents", b.extents},
                         {"count", b.count.str()},
                         {"per_site_log", b.per_site_log}});
    json strips = json::array();
    for (const auto& s : r.strip_estimates)
        strips.push_back({{"width", s.width},
                          {"per_site_log", s.per_site_log},
                          {"iterations", s.iterations}});
    json j;
    j["box_counts"] = std::move(boxes);
    j["strip_estimates"] = std::move(strips);
    if (r.lower_bound_path2) j["lower_bound_path2"] = *r.lower_bound_path2;
    if (r.component_rule) j["component_rule"] = *r.component_rule;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

json lift_to_json(const LiftPattern& lp) {
    json cells = json::array();
    const Graph& g = lp.base.graph();
    for (std::size_t i = 0; i < lp.base.region().size(); ++i) {
        std::vector<std::string> walk;
        for (int v : lp.cells[i].walk()) walk.push_back(g.label(v));
        cells.push_back({{"site", site_to_json(lp.base.region().site(static_cast<int>(i)))},
                         {"walk", walk}});
    }
    std::vector<std::string> anchor_walk;
    for (int v : lp.anchor_vertex.walk()) anchor_walk.push_back(g.label(v));
    return json{{"anchor_site", site_to_json(lp.anchor_site)},
                {"anchor_walk", anchor_walk},
                {"cells", std::move(cells)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::invalid_input, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail(ErrorCode::invalid_input, "parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::invalid_input, "cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

} // namespace homshift::io
