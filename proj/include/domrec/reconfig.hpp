#pragma once

#include <utility>
#include <vector>

#include "domrec/solvers.hpp"

namespace domrec {

enum class AdjacencyModel { slide, jump, add_remove };

std::string_view model_name(AdjacencyModel m);

/// Graph whose nodes are vertex sets of a base graph, under one of the
/// reconfiguration adjacency models. Node order is canonical (ascending
/// bitmask), so edge lists are reproducible byte for byte.
struct ReconfigGraph {
    Graph base;
    SetFamily nodes;
    AdjacencyModel model = AdjacencyModel::slide;
    int k = 0;  // cardinality cap, add_remove model only
    std::vector<std::pair<int, int>> edges;       // u < v, sorted
    std::vector<std::vector<int>> node_adjacency;  // per node, ascending

    int node_count() const { return nodes.size(); }
    int reconfig_edge_count() const { return static_cast<int>(edges.size()); }
};

/// Slide adjacency: the sets differ in exactly two vertices and those two
/// vertices are adjacent in g. Requires |s| == |t|.
bool adjacent_slide(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Jump adjacency: the sets differ in exactly two vertices. Requires |s| == |t|.
bool adjacent_jump(const VertexSet& s, const VertexSet& t);

/// Reconfiguration graph over an explicit (canonicalized) node family.
ReconfigGraph build_reconfig_graph(const Graph& base, SetFamily nodes, AdjacencyModel model);

/// Nodes are the complete optimal family for the variant; edges by the model.
ReconfigGraph build_variant_graph(const Graph& g, DomVariant variant, AdjacencyModel model);

/// Nodes are all dominating sets of cardinality <= k; edges where the
/// symmetric difference has exactly one element.
ReconfigGraph build_k_dominating_graph(const Graph& g, int k);

/// Base vertices of the node's set contained in every reconfiguration
/// neighbor's set (all of them when the node is isolated).
VertexSet stuck_vertices(const ReconfigGraph& r, int node);

/// For each node, the base vertices contained in every set of that node's
/// connected component.
std::vector<VertexSet> frozen_vertices(const ReconfigGraph& r);

struct ReconfigAnalysis {
    int component_count = 0;
    std::vector<int> component_of;         // per node
    std::vector<int> component_sizes;      // per component
    std::vector<int> component_diameters;  // per component
};

ReconfigAnalysis analyze(const ReconfigGraph& r);

/// The reconfiguration graph as a plain Graph (node count permitting).
Graph to_graph(const ReconfigGraph& r);

/// DOT export with nodes labelled by their vertex sets, e.g. "{c,v1}".
std::string to_dot(const ReconfigGraph& r);

}  // namespace domrec
