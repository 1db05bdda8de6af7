#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "homshift/graph.hpp"
#include "homshift/pattern.hpp"

namespace homshift {

/// One full config-fold: the maximal set of symbols removable disjointly,
/// each with its retained target, plus the graph that remains.
struct FoldStep {
    Graph before;
    std::vector<std::string> removed;
    std::map<std::string, std::string> target;
    Graph remaining;

    /// Image of a label under the fold (identity if retained).
    const std::string& apply(const std::string& label) const;
};

enum class StiffClass { edge, looped_vertex, other };

const char* stiff_class_name(StiffClass c);

struct FoldSequence {
    std::vector<FoldStep> steps;
    Graph stiff;
    int fold_radius = 0; // = steps.size()
    StiffClass classification = StiffClass::other;

    /// Composite of all steps applied to a label of the starting graph.
    std::string compose(const std::string& label) const;
};

/// All ordered pairs (v, w), v != w, with N(v) included in N(w); empty
/// exactly when the graph is stiff.
std::vector<std::pair<std::string, std::string>> fold_candidates(const Graph& g);

/// The canonical full config-fold (errors when the graph is stiff).
FoldStep full_config_fold(const Graph& g);

/// Iterates full config-folds down to a stiff graph.
FoldSequence fold_to_stiff(const Graph& g);

/// Identity on the fixed sites, the fold's symbol map everywhere else.
/// The pattern's graph may be a supergraph of step.before; cells on the
/// non-fixed zone and its collar must be step.before symbols forming a
/// valid step.before pattern there.
Pattern apply_fold_outside(const Pattern& p, const FoldStep& step,
                           const std::set<Site>& fixed);

enum class OnionDirection { inward, outward };

/// Composition of the graph's full config-folds that fixes the l1-ball D_n
/// (inward) or its complement (outward, requires n > fold-radius). Outside
/// D_{n+r-1} (inward) resp. inside D_{n-r+1} (outward) only stiff-graph
/// symbols remain.
Pattern onion_fix(const Pattern& p, int n, OnionDirection direction);

struct PatchResult {
    Pattern pattern;
    bool shifted_by_e1 = false; // bipartite different-class case
};

/// Splices a window of x over the ball D_n into y, rebuilding the annulus
/// with fold-retractions and constant rings; z = x on D_n (shifted by e_1
/// in the bipartite different-class case) and z = y outside
/// D_{(d+1)n + 3r + k} with r = |H|. Requires connected four-cycle-free H,
/// both patterns valid on a common box containing D_{(d+1)n+3r+k+1}, and
/// the range of y on the sphere of radius (d+1)n+3r+k at most 2k.
PatchResult patch(const Pattern& x, const Pattern& y, int n, int k,
                  bool allow_shift = true);

} // namespace homshift
