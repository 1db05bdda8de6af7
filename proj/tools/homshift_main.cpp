// homshift command-line front door: thin adapters over the library, one
// subcommand per construction. Exit codes: 0 success, 2 invalid input,
// 3 resource limit.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homshift/entropy.hpp"
#include "homshift/folding.hpp"
#include "homshift/height.hpp"
#include "homshift/io.hpp"
#include "homshift/pivot.hpp"
#include "homshift/sampling.hpp"

using namespace homshift;
using homshift::io::json;

namespace {

std::vector<int> parse_extents(const std::string& box) {
    std::vector<int> extents;
    std::stringstream ss(box);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        try {
            extents.push_back(std::stoi(part));
        } catch (...) {
            fail(ErrorCode::invalid_input, "bad box spec: " + box);
        }
    }
    if (extents.empty()) fail(ErrorCode::invalid_input, "bad box spec: " + box);
    return extents;
}

Region centered_box(const std::vector<int>& extents) {
    Site origin(extents.size());
    for (std::size_t k = 0; k < extents.size(); ++k) origin[k] = -(extents[k] - 1) / 2;
    return Region::box(origin, Site(extents.begin(), extents.end()));
}

struct Options {
    std::string graph_path, pattern_path, x_path, y_path, boundary_path, out_path;
    std::string box;
    int d = 2;
    int radius = -1;
    int n = 1, k = 0;
    int moves_radius = 1;
    int max_width = 6;
    int depth = 4;
    std::string direction = "1,0";
    std::uint64_t seed = 0;
    int count = 1;
    bool json_out = false;
    bool no_shift = false;
    std::string base, anchor_walk;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    return out;
}

void emit(const json& j, bool json_out, const std::string& fallback) {
    if (json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << fallback;
}

int run_analyze(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    GraphReport r = analyze_graph(*g);
    std::ostringstream out;
    out << "connected " << (r.connected ? "true" : "false") << "\n";
    out << "components " << r.components.size() << "\n";
    out << "bipartite " << (r.bipartite ? "true" : "false") << "\n";
    out << "has_self_loop " << (r.has_self_loop ? "true" : "false") << "\n";
    out << "four_cycle_free " << (r.four_cycle_free ? "true" : "false") << "\n";
    out << "is_tree " << (r.is_tree ? "true" : "false") << "\n";
    if (r.diameter) out << "diameter " << *r.diameter << "\n";
    else out << "diameter infinity\n";
    emit(io::report_to_json(r), opt.json_out, out.str());
    return 0;
}

int run_fold(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    FoldSequence seq = fold_to_stiff(*g);
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        out << "step " << i + 1 << ":";
        for (const auto& v : seq.steps[i].removed)
            out << " " << v << "->" << seq.steps[i].target.at(v);
        out << "\n";
    }
    out << "fold_radius " << seq.fold_radius << "\n";
    out << "classification " << stiff_class_name(seq.classification) << "\n";
    out << "stiff vertices";
    for (const auto& v : seq.stiff.vertices()) out << " " << v;
    out << "\n";
    emit(io::fold_sequence_to_json(seq), opt.json_out, out.str());
    return 0;
}

int run_cover(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    int base = opt.base.empty() ? 0 : g->index_of(opt.base);
    if (base < 0) fail(ErrorCode::invalid_input, "base vertex not in graph: " + opt.base);
    int radius = opt.radius < 0 ? 5 : opt.radius;
    auto vertices = enumerate_cover(*g, base, radius);
    json walks = json::array();
    std::ostringstream out;
    out << "cover vertices within radius " << radius << ": " << vertices.size() << "\n";
    for (const auto& v : vertices) {
        std::vector<std::string> walk;
        for (int w : v.walk()) walk.push_back(g->label(w));
        walks.push_back(walk);
        if (vertices.size() <= 64) {
            for (const auto& s : walk) out << s << " ";
            out << "\n";
        }
    }
    emit(json{{"count", vertices.size()}, {"radius", radius}, {"walks", walks}},
         opt.json_out, out.str());
    return 0;
}

std::shared_ptr<const Graph> optional_graph(const Options& opt) {
    if (opt.graph_path.empty()) return nullptr;
    return io::load_graph(opt.graph_path);
}

int run_lift(const Options& opt) {
    Pattern p = io::load_pattern(opt.pattern_path, optional_graph(opt));
    LiftPattern lp = lift(p);
    std::ostringstream out;
    out << "lift anchored at site";
    for (int c : lp.anchor_site) out << " " << c;
    out << "\n";
    emit(io::lift_to_json(lp), opt.json_out, out.str());
    return 0;
}

int run_height(const Options& opt) {
    Pattern p = io::load_pattern(opt.pattern_path, optional_graph(opt));
    if (p.region().kind() == RegionKind::torus)
        fail(ErrorCode::unsupported_region, "height tables need a box or diamond pattern");
    LiftPattern lp = lift(p);
    const Region& region = p.region();
    const Site& anchor = region.site(0);
    std::ostringstream out;
    if (region.dimension() == 2 && region.kind() == RegionKind::box) {
        // CSV height matrix h(anchor, (i,j)) with rows along axis 0
        for (int i = 0; i < region.extents()[0]; ++i) {
            for (int j = 0; j < region.extents()[1]; ++j) {
                Site s{region.origin()[0] + i, region.origin()[1] + j};
                if (j) out << ",";
                out << height(lp, anchor, s);
            }
            out << "\n";
        }
    } else {
        for (std::size_t i = 0; i < region.size(); ++i) {
            const Site& s = region.site(static_cast<int>(i));
            for (int c : s) out << c << " ";
            out << ": " << height(lp, anchor, s) << "\n";
        }
    }
    // range table over origin-centered balls that fit the region
    json ranges = json::array();
    for (int m = 0;; ++m) {
        const Region ballr = Region::diamond(Site(region.dimension(), 0), m);
        bool fits = true;
        for (const Site& s : ballr.sites())
            if (!region.contains(s)) {
                fits = false;
                break;
            }
        if (!fits) break;
        std::vector<Site> ball = ballr.sites();
        int r = range(lp, ball);
        ranges.push_back({{"n", m}, {"range", r}});
        out << "range D_" << m << " = " << r << "\n";
    }
    json heights = json::array();
    for (std::size_t i = 0; i < region.size(); ++i)
        heights.push_back(height(lp, anchor, region.site(static_cast<int>(i))));
    emit(json{{"anchor", anchor}, {"heights", heights}, {"ranges", ranges}}, opt.json_out,
         out.str());
    return 0;
}

int run_patch(const Options& opt) {
    auto g = optional_graph(opt);
    Pattern x = io::load_pattern(opt.x_path, g);
    Pattern y = io::load_pattern(opt.y_path, g);
    PatchResult result = patch(x, y, opt.n, opt.k, !opt.no_shift);
    json j = io::pattern_to_json(result.pattern);
    j["shifted_by_e1"] = result.shifted_by_e1;
    std::ostringstream out;
    out << "patched pattern valid; shifted_by_e1 "
        << (result.shifted_by_e1 ? "true" : "false") << "\n";
    if (!opt.out_path.empty()) {
        io::write_json_file(opt.out_path, j);
        out << "written to " << opt.out_path << "\n";
        std::cout << out.str();
        return 0;
    }
    emit(j, opt.json_out, out.str());
    return 0;
}

int run_pivot_chain(const Options& opt) {
    auto g = optional_graph(opt);
    Pattern x = io::load_pattern(opt.x_path, g);
    Pattern y = io::load_pattern(opt.y_path, g);
    PivotChain chain = pivot_chain(x, y);
    std::ostringstream out;
    out << "chain length " << chain.length() << "\n";
    for (const auto& d : chain.deltas) {
        out << "(";
        for (std::size_t i = 0; i < d.site.size(); ++i)
            out << (i ? "," : "") << d.site[i];
        out << ") " << d.from << "->" << d.to << "\n";
    }
    emit(io::chain_to_json(chain), opt.json_out, out.str());
    return 0;
}

int run_pivot_components(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    Region region = centered_box(parse_extents(opt.box));
    SiteAssignment boundary;
    if (!opt.boundary_path.empty()) boundary = io::load_assignment(opt.boundary_path);
    ReconfigReport report = pivot_components(g, region, boundary, opt.moves_radius);
    std::ostringstream out;
    out << "states " << report.states << "\n";
    out << "components " << report.component_count << "\n";
    out << "sizes";
    for (auto s : report.component_sizes) out << " " << s;
    out << "\n";
    emit(io::reconfig_to_json(report), opt.json_out, out.str());
    return 0;
}

int run_entropy(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    if (!opt.box.empty()) {
        BigInt count = count_box_patterns(*g, parse_extents(opt.box));
        emit(json{{"box", opt.box}, {"count", count.str()}}, opt.json_out,
             "box " + opt.box + " count " + count.str() + "\n");
        return 0;
    }
    EntropyReport report = entropy_report(*g, opt.max_width);
    std::ostringstream out;
    for (const auto& b : report.box_counts) {
        out << "box";
        for (int e : b.extents) out << " " << e;
        out << " count " << b.count.str() << " per_site_log " << b.per_site_log << "\n";
    }
    for (const auto& s : report.strip_estimates)
        out << "strip width " << s.width << " per_site_log " << s.per_site_log
            << " (estimate)\n";
    if (report.lower_bound_path2)
        out << "lower_bound_path2 " << *report.lower_bound_path2 << "\n";
    if (report.component_rule) out << "component_rule " << *report.component_rule << "\n";
    emit(io::entropy_to_json(report), opt.json_out, out.str());
    return 0;
}

int run_fillable(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    FillResult r = single_site_fillable(*g, opt.d);
    std::ostringstream out;
    out << "single_site_fillable " << (r.fillable ? "true" : "false") << "\n";
    json j{{"fillable", r.fillable}, {"d", opt.d}};
    if (r.witness) {
        j["witness"] = *r.witness;
        out << "witness";
        for (const auto& v : *r.witness) out << " " << v;
        out << "\n";
    }
    emit(j, opt.json_out, out.str());
    return 0;
}

int run_periodic_count(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    BigInt count = periodic_count(*g, opt.d);
    emit(json{{"d", opt.d}, {"count", count.str()}}, opt.json_out,
         "periodic count (d=" + std::to_string(opt.d) + ") " + count.str() + "\n");
    return 0;
}

int run_slope(const Options& opt) {
    Pattern p = io::load_pattern(opt.pattern_path, optional_graph(opt));
    SlopeEstimate est = slope_estimate(p, parse_int_list(opt.direction), opt.depth);
    std::ostringstream out;
    out << "period " << est.period << "\n";
    out << "values";
    for (double v : est.values) out << " " << v;
    out << "\n";
    out << "upper_bound " << est.upper_bound << " (" << est.note << ")\n";
    emit(io::slope_to_json(est), opt.json_out, out.str());
    return 0;
}

int run_validate(const Options& opt) {
    Pattern p = io::load_pattern(opt.pattern_path, optional_graph(opt));
    auto violations = validate_pattern(p);
    std::ostringstream out;
    out << "violations " << violations.size() << "\n";
    emit(io::violations_to_json(violations), opt.json_out, out.str());
    return 0;
}

int run_sample(const Options& opt) {
    auto g = io::load_graph(opt.graph_path);
    Region region = centered_box(parse_extents(opt.box));
    for (int i = 0; i < opt.count; ++i) {
        auto p = sample_pattern(g, region, opt.seed + i);
        if (!p) fail(ErrorCode::resource_limit, "sampling did not find a valid pattern");
        std::cout << io::pattern_to_json(*p).dump(opt.json_out ? 2 : -1) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hom-shift toolkit: folding, covers, heights, pivots, entropy"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json_out, "machine-readable output");
        cmd->add_option("--seed", opt.seed, "rng seed (sampling commands only)");
        return cmd;
    };

    auto* analyze = add_common(app.add_subcommand("analyze", "structural graph report"));
    analyze->add_option("--graph", opt.graph_path)->required();

    auto* fold = add_common(app.add_subcommand("fold", "full config-folds to a stiff graph"));
    fold->add_option("--graph", opt.graph_path)->required();

    auto* cover = add_common(app.add_subcommand("cover", "enumerate universal-cover walks"));
    cover->add_option("--graph", opt.graph_path)->required();
    cover->add_option("--base", opt.base, "base vertex (default: first declared)");
    cover->add_option("--radius", opt.radius, "enumeration radius (default 5)");

    auto* lift_cmd = add_common(app.add_subcommand("lift", "lift a pattern to the cover"));
    lift_cmd->add_option("--pattern", opt.pattern_path)->required();
    lift_cmd->add_option("--graph", opt.graph_path);

    auto* height_cmd = add_common(app.add_subcommand("height", "height matrix and ranges"));
    height_cmd->add_option("--pattern", opt.pattern_path)->required();
    height_cmd->add_option("--graph", opt.graph_path);

    auto* validate = add_common(app.add_subcommand("validate", "list adjacency violations"));
    validate->add_option("--pattern", opt.pattern_path)->required();
    validate->add_option("--graph", opt.graph_path);

    auto* patch_cmd = add_common(app.add_subcommand("patch", "splice x into y across rings"));
    patch_cmd->add_option("--x", opt.x_path)->required();
    patch_cmd->add_option("--y", opt.y_path)->required();
    patch_cmd->add_option("--graph", opt.graph_path);
    patch_cmd->add_option("--n", opt.n)->required();
    patch_cmd->add_option("--k", opt.k)->required();
    patch_cmd->add_flag("--no-shift", opt.no_shift, "forbid the bipartite e1 shift");
    patch_cmd->add_option("--out", opt.out_path, "write the result here");

    auto* chain = add_common(app.add_subcommand("pivot-chain", "single-site chain x to y"));
    chain->add_option("--x", opt.x_path)->required();
    chain->add_option("--y", opt.y_path)->required();
    chain->add_option("--graph", opt.graph_path);

    auto* comps = add_common(
        app.add_subcommand("pivot-components", "move-graph components of completions"));
    comps->add_option("--graph", opt.graph_path)->required();
    comps->add_option("--box", opt.box, "centered box extents, e.g. 4x4")->required();
    comps->add_option("--boundary", opt.boundary_path, "boundary assignment json");
    comps->add_option("--moves-radius", opt.moves_radius);

    auto* entropy_cmd = add_common(app.add_subcommand("entropy", "counts and estimates"));
    entropy_cmd->add_option("--graph", opt.graph_path)->required();
    entropy_cmd->add_option("--box", opt.box, "exact count for one box, e.g. 3x3");
    entropy_cmd->add_option("--max-width", opt.max_width);

    auto* fillable = add_common(app.add_subcommand("fillable", "single-site fillability"));
    fillable->add_option("--graph", opt.graph_path)->required();
    fillable->add_option("--d", opt.d);

    auto* periodic = add_common(app.add_subcommand("periodic-count", "doubled-period points"));
    periodic->add_option("--graph", opt.graph_path)->required();
    periodic->add_option("--d", opt.d);

    auto* slope = add_common(app.add_subcommand("slope", "slope bound for a torus pattern"));
    slope->add_option("--pattern", opt.pattern_path)->required();
    slope->add_option("--graph", opt.graph_path);
    slope->add_option("--direction", opt.direction, "integer vector, e.g. 1,0");
    slope->add_option("--depth", opt.depth);

    auto* sample = add_common(app.add_subcommand(
        "sample-pattern", "random valid pattern (testing utility, seed-driven)"));
    sample->add_option("--graph", opt.graph_path)->required();
    sample->add_option("--box", opt.box, "centered box extents")->required();
    sample->add_option("--count", opt.count);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (fold->parsed()) return run_fold(opt);
        if (cover->parsed()) return run_cover(opt);
        if (lift_cmd->parsed()) return run_lift(opt);
        if (height_cmd->parsed()) return run_height(opt);
        if (validate->parsed()) return run_validate(opt);
        if (patch_cmd->parsed()) return run_patch(opt);
        if (chain->parsed()) return run_pivot_chain(opt);
        if (comps->parsed()) return run_pivot_components(opt);
        if (entropy_cmd->parsed()) return run_entropy(opt);
        if (fillable->parsed()) return run_fillable(opt);
        if (periodic->parsed()) return run_periodic_count(opt);
        if (slope->parsed()) return run_slope(opt);
        if (sample->parsed()) return run_sample(opt);
    } catch (const Error& e) {
        std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::resource_limit ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
