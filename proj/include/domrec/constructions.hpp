#pragma once

#include "domrec/graph.hpp"

namespace domrec {

enum class GadgetKind { c_gadget, bull, z_gadget };

/// A labelled gadget graph plus its designated attachment vertex.
///  - c_gadget: cycle x1 x2 x3 x4 with pendants y1,y2,y3 on x1,x2,x3
///  - bull:     triangle x1 x2 x3 with pendants y1,y2 on x1,x2
///  - z_gadget: triangles x1 x2 x3 and y1 y2 y3, matching x_i y_i,
///              z adjacent to x1,x2,x3
/// Vertex numbering: the x block, then the y block, then z (z_gadget only);
/// the attachment vertex is always x1 = 0.
struct Gadget {
    GadgetKind kind;
    Graph graph;
    int attachment = 0;
};

Gadget make_gadget(GadgetKind kind);

/// Disjoint union of g and the gadget plus the edge host-attachment; gadget
/// vertices are appended after the existing ones. Gadget labels are kept
/// when g is labelled.
Graph attach(const Graph& g, const Gadget& gadget, int host);

enum class ConstructionKind { connelly, id_code, locating, upper };

/// A realizability construction: the host H occupies vertices 0..host_n-1 of
/// the output, gadget blocks follow in a documented deterministic order, and
/// every vertex carries a label recording its role.
struct Construction {
    ConstructionKind kind;
    Graph graph;
    int host_n = 0;
    int extra = 0;
};

/// H plus vertices a,b,c joined to every H-vertex and pendants c1,c2 on c.
/// Blocks: H, a, b, c, c_1, c_2 (n+5 vertices).
Construction construct_connelly(const Graph& h);

/// Two C gadgets per H-vertex, vertices a,b joined to every H-vertex, and one
/// C gadget on each of a and b.
/// Blocks: H, C_1, C_1*, ..., C_n, C_n*, a, b, C_a, C_b (15n+16 vertices).
Construction construct_id(const Graph& h);

/// The id_code construction with Bull gadgets; `total` changes nothing
/// structurally (the same graph serves the locating-total variant).
/// Blocks: H, B_1, B_1*, ..., B_n, B_n*, a, b, B_a, B_b (11n+12 vertices).
Construction construct_locating(const Graph& h, bool total = false);

/// One Z gadget attached at x_{i,1} to each H-vertex, plus a final copy Z*
/// joined to every H-vertex through z*.
/// Blocks: H, Z_1, ..., Z_n, Z* (8n+7 vertices).
Construction construct_upper(const Graph& h);

/// Attaches `extra` further gadget copies: C (resp. Bull) copies to each
/// H-vertex for the id_code (resp. locating) construction, Z copies to
/// H-vertex 0 for upper, and extra pendants on c for connelly. The variant
/// graph of the result is unchanged.
Construction multiply(const Construction& c, int extra);

}  // namespace domrec
