#pragma once

#include "domrec/constructions.hpp"
#include "domrec/reconfig.hpp"

namespace domrec {

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;  // mapping[v of g1] = vertex of g2
};

/// Exact isomorphism test by backtracking with degree and neighborhood
/// invariants; any returned bijection has been re-verified edge by edge.
/// Intended for small graphs (soft limit n <= 16).
IsoResult are_isomorphic(const Graph& g1, const Graph& g2);

/// Does host contain an induced subgraph isomorphic to pattern?
bool contains_induced(const Graph& host, const Graph& pattern);

/// Outcome of one realizability verification: H, the constructed G, the
/// computed parameter and family size, and the isomorphism verdict with a
/// verified witness mapping H-vertices to variant-graph nodes.
struct Report {
    DomVariant variant = DomVariant::Gamma;
    AdjacencyModel model = AdjacencyModel::slide;
    int host_n = 0;
    int host_edges = 0;
    int constructed_n = 0;
    int constructed_edges = 0;
    int expected_value = 0;
    ParamValue value;
    int set_count = 0;
    bool isomorphic = false;
    std::vector<int> witness;  // witness[i] = node index of H-vertex i
};

/// Builds the construction for the variant, solves it, builds the slide
/// variant graph, and checks isomorphism with H. A computed parameter that
/// differs from the construction's closed form is a hard error
/// (parameter_mismatch): it signals a construction or solver bug.
Report verify_realizability(const Graph& h, DomVariant variant,
                            AdjacencyModel model = AdjacencyModel::slide);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace domrec
