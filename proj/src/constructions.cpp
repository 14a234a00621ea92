#include "domrec/constructions.hpp"

namespace domrec {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Local edges of one gadget copy, 0-based within the copy.
EdgeList gadget_edges(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::c_gadget:
            return {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}};
        case GadgetKind::bull:
            return {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}};
        case GadgetKind::z_gadget:
            return {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                    {0, 3}, {1, 4}, {2, 5}, {6, 0}, {6, 1}, {6, 2}};
    }
    return {};
}

int gadget_size(GadgetKind kind) { return kind == GadgetKind::bull ? 5 : 7; }

// Gadget labels with a formatting hook: subscript(j) renders the j-th x/y
// index, suffix() decorates the whole name (starred copies etc.).
std::vector<std::string> gadget_labels(GadgetKind kind, const std::string& sub,
                                       const std::string& suffix) {
    auto name = [&](const char* base, int j) {
        std::string s = base;
        if (sub.empty())
            s += std::to_string(j);
        else
            s += "_{" + sub + "," + std::to_string(j) + "}";
        return s + suffix;
    };
    std::vector<std::string> out;
    int xs = kind == GadgetKind::bull ? 3 : (kind == GadgetKind::c_gadget ? 4 : 3);
    int ys = kind == GadgetKind::bull ? 2 : 3;
    for (int j = 1; j <= xs; ++j) out.push_back(name("x", j));
    for (int j = 1; j <= ys; ++j) out.push_back(name("y", j));
    if (kind == GadgetKind::z_gadget)
        out.push_back(sub.empty() ? "z" + suffix : "z_" + sub + suffix);
    return out;
}

void append_gadget(EdgeList& edges, std::vector<std::string>& labels, int offset,
                   GadgetKind kind, const std::string& sub, const std::string& suffix) {
    for (auto [u, v] : gadget_edges(kind)) edges.emplace_back(offset + u, offset + v);
    for (auto& l : gadget_labels(kind, sub, suffix)) labels.push_back(std::move(l));
}

EdgeList edges_of(const Graph& g) {
    EdgeList edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return edges;
}

std::vector<std::string> labels_of(const Graph& g) {
    std::vector<std::string> out;
    if (g.has_labels())
        for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(v));
    return out;
}

void require_host(const Graph& h) {
    if (h.vertex_count() == 0) throw Error(Errc::empty_host, "host graph must be nonempty");
}

// Gadget-per-H-vertex shape shared by the id_code and locating constructions.
Construction construct_two_of_each(const Graph& h, GadgetKind kind, ConstructionKind ckind) {
    require_host(h);
    int n = h.vertex_count();
    int gs = gadget_size(kind);
    EdgeList edges = edges_of(h);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v_" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        int plain = n + 2 * gs * i;
        int starred = plain + gs;
        std::string sub = std::to_string(i + 1);
        append_gadget(edges, labels, plain, kind, sub, "");
        append_gadget(edges, labels, starred, kind, sub, "*");
        edges.emplace_back(i, plain);    // v_i -- x_{i,1}
        edges.emplace_back(i, starred);  // v_i -- x_{i,1}*
    }
    int a = n + 2 * gs * n;
    int b = a + 1;
    labels.push_back("a");
    labels.push_back("b");
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(a, i);
        edges.emplace_back(b, i);
    }
    append_gadget(edges, labels, b + 1, kind, "a", "");
    append_gadget(edges, labels, b + 1 + gs, kind, "b", "");
    edges.emplace_back(a, b + 1);
    edges.emplace_back(b, b + 1 + gs);
    return {ckind, Graph::from_edge_list(b + 1 + 2 * gs, edges, std::move(labels)), n, 0};
}

}  // namespace

Gadget make_gadget(GadgetKind kind) {
    Graph g = Graph::from_edge_list(gadget_size(kind), gadget_edges(kind),
                                    gadget_labels(kind, "", ""));
    return {kind, std::move(g), 0};
}

Graph attach(const Graph& g, const Gadget& gadget, int host) {
    if (host < 0 || host >= g.vertex_count())
        throw Error(Errc::vertex_out_of_range, "attachment host out of range");
    int offset = g.vertex_count();
    EdgeList edges = edges_of(g);
    for (auto [u, v] : edges_of(gadget.graph)) edges.emplace_back(offset + u, offset + v);
    edges.emplace_back(host, offset + gadget.attachment);
    std::vector<std::string> labels = labels_of(g);
    if (!labels.empty())
        for (int v = 0; v < gadget.graph.vertex_count(); ++v)
            labels.push_back(gadget.graph.label(v));
    return Graph::from_edge_list(offset + gadget.graph.vertex_count(), edges, std::move(labels));
}

Construction construct_connelly(const Graph& h) {
    require_host(h);
    int n = h.vertex_count();
    EdgeList edges = edges_of(h);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v_" + std::to_string(i));
    int a = n, b = n + 1, c = n + 2;
    labels.push_back("a");
    labels.push_back("b");
    labels.push_back("c");
    labels.push_back("c_1");
    labels.push_back("c_2");
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(a, i);
        edges.emplace_back(b, i);
        edges.emplace_back(c, i);
    }
    edges.emplace_back(c, n + 3);
    edges.emplace_back(c, n + 4);
    return {ConstructionKind::connelly, Graph::from_edge_list(n + 5, edges, std::move(labels)), n, 0};
}

Construction construct_id(const Graph& h) {
    return construct_two_of_each(h, GadgetKind::c_gadget, ConstructionKind::id_code);
}

Construction construct_locating(const Graph& h, bool total) {
    (void)total;  // the same graph serves both variants
    return construct_two_of_each(h, GadgetKind::bull, ConstructionKind::locating);
}

Construction construct_upper(const Graph& h) {
    require_host(h);
    int n = h.vertex_count();
    EdgeList edges = edges_of(h);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("v_" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        int offset = n + 7 * i;
        append_gadget(edges, labels, offset, GadgetKind::z_gadget, std::to_string(i + 1), "");
        edges.emplace_back(i, offset);  // v_i -- x_{i,1}
    }
    int star = 8 * n;
    append_gadget(edges, labels, star, GadgetKind::z_gadget, "", "*");
    int z_star = star + 6;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, z_star);
    return {ConstructionKind::upper, Graph::from_edge_list(8 * n + 7, edges, std::move(labels)), n, 0};
}

Construction multiply(const Construction& c, int extra) {
    if (extra < 1) throw Error(Errc::invalid_argument, "extra must be at least 1");
    EdgeList edges = edges_of(c.graph);
    std::vector<std::string> labels = labels_of(c.graph);
    int offset = c.graph.vertex_count();
    switch (c.kind) {
        case ConstructionKind::connelly: {
            int cv = c.host_n + 2;
            for (int t = 1; t <= extra; ++t) {
                labels.push_back("c_" + std::to_string(2 + c.extra + t));
                edges.emplace_back(cv, offset++);
            }
            break;
        }
        case ConstructionKind::id_code:
        case ConstructionKind::locating: {
            GadgetKind kind =
                c.kind == ConstructionKind::id_code ? GadgetKind::c_gadget : GadgetKind::bull;
            for (int i = 0; i < c.host_n; ++i)
                for (int t = 1; t <= extra; ++t) {
                    std::string sub = std::to_string(i + 1);
                    append_gadget(edges, labels, offset, kind, sub,
                                  "+" + std::to_string(c.extra + t));
                    edges.emplace_back(i, offset);
                    offset += gadget_size(kind);
                }
            break;
        }
        case ConstructionKind::upper: {
            for (int t = 1; t <= extra; ++t) {
                append_gadget(edges, labels, offset, GadgetKind::z_gadget,
                              "+" + std::to_string(c.extra + t), "");
                edges.emplace_back(0, offset);
                offset += 7;
            }
            break;
        }
        default:
            throw Error(Errc::unsupported_kind, "construction kind does not support multiply");
    }
    return {c.kind, Graph::from_edge_list(offset, edges, std::move(labels)), c.host_n,
            c.extra + extra};
}

}  // namespace domrec
