#include "domrec/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace domrec {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels) {
    if (n < 0) throw Error(Errc::invalid_argument, "negative vertex count");
    if (n > kMaxVertices)
        throw Error(Errc::unsupported_size,
                    "vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
                        std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::endpoint_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") endpoint out of range");
        if (u == v)
            throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
        g.adj_[u].add(v);
        g.adj_[v].add(u);
    }
    int deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += g.adj_[v].count();
    g.edges_ = deg_sum / 2;
    g.closed_.resize(n);
    for (int v = 0; v < n; ++v) g.closed_[v] = g.adj_[v].with(v);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw Error(Errc::invalid_argument, "label count does not match vertex count");
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second)
                throw Error(Errc::duplicate_label, "duplicate label \"" + l + "\"");
        g.labels_ = std::move(labels);
    }
    return g;
}

const VertexSet& Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    return closed_[v];
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return connected_within(vertices());
}

bool Graph::connected_within(const VertexSet& s) const {
    if (s.empty()) return true;
    VertexSet seen;
    seen.add(s.first());
    for (;;) {
        VertexSet frontier;
        seen.for_each([&](int v) { frontier |= adj_[v]; });
        frontier &= s;
        frontier |= seen;
        if (frontier == seen) break;
        seen = frontier;
    }
    return seen == s;
}

Graph Graph::induced_subgraph(const VertexSet& s, std::vector<int>* original) const {
    std::vector<int> verts = (s & vertices()).members();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
            if (adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
    std::vector<std::string> labels;
    if (has_labels())
        for (int v : verts) labels.push_back(labels_[v]);
    if (original) *original = verts;
    return from_edge_list(static_cast<int>(verts.size()), edges, std::move(labels));
}

std::string Graph::display(int v) const {
    check_vertex(v);
    return has_labels() ? labels_[v] : std::to_string(v);
}

std::string Graph::format_set(const VertexSet& s) const {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ',';
        out += display(v);
    });
    return out;
}

int Graph::find_label(std::string_view name) const {
    if (!has_labels()) return -1;
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == name) return v;
    return -1;
}

// graph6: size header then the upper triangle in column order, 6 bits per
// printable character offset by 63.
std::string Graph::to_graph6() const {
    if (n_ > kMaxVertices)
        throw Error(Errc::unsupported_size, "graph6 encoding limited to 128 vertices here");
    std::string out;
    if (n_ <= 62) {
        out += static_cast<char>(n_ + 63);
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(((n_ >> 12) & 63) + 63);
        out += static_cast<char>(((n_ >> 6) & 63) + 63);
        out += static_cast<char>((n_ & 63) + 63);
    }
    int bit = 5;
    int acc = 0;
    for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
            if (adjacent(i, j)) acc |= 1 << bit;
            if (--bit < 0) {
                out += static_cast<char>(acc + 63);
                bit = 5;
                acc = 0;
            }
        }
    }
    if (bit != 5) out += static_cast<char>(acc + 63);
    return out;
}

Graph Graph::parse_graph6(std::string_view text) {
    // optional format tag, then strip surrounding whitespace
    constexpr std::string_view tag = ">>graph6<<";
    if (text.substr(0, tag.size()) == tag) text.remove_prefix(tag.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    while (!text.empty() && (text.front() == ' '))
        text.remove_prefix(1);
    if (text.empty()) throw Error(Errc::malformed_header, "empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(Errc::malformed_header, "graph6 character out of range");

    std::size_t pos = 0;
    long n;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126)
            throw Error(Errc::unsupported_size, "graph6 8-byte size header not supported");
        if (text.size() < 4) throw Error(Errc::malformed_header, "graph6 size header truncated");
        n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Error(Errc::unsupported_size,
                    "graph6 graph on " + std::to_string(n) + " vertices exceeds the supported maximum");

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nbytes)
        throw Error(Errc::truncated_body, "graph6 body shorter than the header requires");
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nbytes)
        throw Error(Errc::malformed_header, "graph6 body longer than the header requires");

    std::vector<std::pair<int, int>> edges;
    long bitpos = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bitpos) {
            int byte = text[pos + bitpos / 6] - 63;
            if ((byte >> (5 - bitpos % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int last = text[pos + nbytes - 1] - 63;
        int pad = 6 - static_cast<int>(nbits % 6);
        if (last & ((1 << pad) - 1))
            throw Error(Errc::non_canonical_padding, "graph6 padding bits are not zero");
    }
    return from_edge_list(static_cast<int>(n), edges);
}

Graph Graph::read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n;
    if (!(in >> n)) throw Error(Errc::parse_error, "edge list: missing vertex count");
    if (n < 0 || n > kMaxVertices)
        throw Error(Errc::unsupported_size, "edge list: unsupported vertex count");
    std::vector<std::pair<int, int>> edges;
    long u, v;
    while (in >> u) {
        if (!(in >> v)) throw Error(Errc::parse_error, "edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::endpoint_out_of_range, "edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw Error(Errc::parse_error, "edge list: trailing garbage");
    return from_edge_list(static_cast<int>(n), edges);
}

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(n_) + "\n";
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
        });
    return out;
}

static std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string Graph::to_dot() const {
    std::string out = "graph G {\n";
    for (int v = 0; v < n_; ++v) {
        out += "  " + std::to_string(v);
        if (has_labels()) out += " [label=\"" + dot_escape(labels_[v]) + "\"]";
        out += ";\n";
    }
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        });
    out += "}\n";
    return out;
}

}  // namespace domrec
