#pragma once

#include <random>
#include <string>
#include <vector>

#include "domrec/graph.hpp"

namespace domrec::testutil {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph k4_minus_e();

/// Disjoint union (b's vertices shifted after a's).
Graph graph_union(const Graph& a, const Graph& b);
/// Join: disjoint union plus all edges between the two sides.
Graph graph_join(const Graph& a, const Graph& b);

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 7), built by extending the (n-1)-vertex classes. Cached.
const std::vector<Graph>& graphs_up_to_iso(int n);

/// Erdos-Renyi G(n,p), resampled until connected. Deterministic in rng.
Graph random_connected_graph(std::mt19937& rng, int n, double p);

/// Independent brute-force graph6 decoder used as the format oracle; follows
/// the published byte layout directly and shares no code with the library.
Graph reference_decode_graph6(const std::string& text);

}  // namespace domrec::testutil
