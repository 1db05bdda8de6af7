#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "homshift/entropy.hpp"
#include "homshift/folding.hpp"
#include "homshift/graph.hpp"
#include "homshift/height.hpp"
#include "homshift/pattern.hpp"
#include "homshift/pivot.hpp"

namespace homshift::io {

using json = nlohmann::json;

// graphs: {"vertices":["a","b"],"edges":[["a","b"]]}
json graph_to_json(const Graph& g);
std::shared_ptr<const Graph> graph_from_json(const json& j);
std::shared_ptr<const Graph> load_graph(const std::string& path);

// regions: {"kind":"box","origin":[-1,-1],"extents":[3,3]}
//          {"kind":"diamond","center":[0,0],"radius":2}
//          {"kind":"torus","extents":[4,4]}
json region_to_json(const Region& r);
Region region_from_json(const json& j);

// patterns: {"graph":<inline-or-path>,"d":2,"region":{...},"cells":[[...],...]}
// box/torus cells nest row-major along the declared axes; diamonds use a
// flat list in canonical (lexicographic) site order.
json pattern_to_json(const Pattern& p, bool inline_graph = true);
Pattern pattern_from_json(const json& j, std::shared_ptr<const Graph> graph_override,
                          const std::string& base_dir);
Pattern load_pattern(const std::string& path,
                     std::shared_ptr<const Graph> graph_override = nullptr);

// boundary assignments: {"cells":[{"site":[0,-1],"label":"a"},...]}
json assignment_to_json(const SiteAssignment& a);
SiteAssignment assignment_from_json(const json& j);
SiteAssignment load_assignment(const std::string& path);

json report_to_json(const GraphReport& r);
json fold_step_to_json(const FoldStep& s);
json fold_sequence_to_json(const FoldSequence& s);
json violations_to_json(const std::vector<Violation>& v);
json chain_to_json(const PivotChain& c);
json reconfig_to_json(const ReconfigReport& r, bool include_witness = true);
json slope_to_json(const SlopeEstimate& s);
json entropy_to_json(const EntropyReport& r);
json lift_to_json(const LiftPattern& lp);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace homshift::io
