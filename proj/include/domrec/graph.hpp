#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domrec/errors.hpp"

namespace domrec {

// Hard cap on vertices of a single graph: two 64-bit words per vertex set.
inline constexpr int kMaxVertices = 128;

/// Subset of the vertices 0..n-1 of a graph, stored as a 128-bit mask.
/// Ordering compares masks as unsigned 128-bit numbers, giving the canonical
/// ascending-bitmask order used everywhere a family of sets is reported.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; n > 0; ++w, n -= 64)
            s.word_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet from_mask(std::uint64_t lo, std::uint64_t hi = 0) { return {lo, hi}; }

    bool contains(int v) const { return (word_[v >> 6] >> (v & 63)) & 1u; }
    void add(int v) { word_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { word_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    VertexSet with(int v) const { VertexSet s = *this; s.add(v); return s; }
    VertexSet without(int v) const { VertexSet s = *this; s.remove(v); return s; }

    int count() const { return std::popcount(word_[0]) + std::popcount(word_[1]); }
    bool empty() const { return word_[0] == 0 && word_[1] == 0; }
    bool intersects(const VertexSet& o) const {
        return (word_[0] & o.word_[0]) != 0 || (word_[1] & o.word_[1]) != 0;
    }
    bool subset_of(const VertexSet& o) const {
        return (word_[0] & ~o.word_[0]) == 0 && (word_[1] & ~o.word_[1]) == 0;
    }
    /// Lowest member, -1 when empty.
    int first() const {
        if (word_[0]) return std::countr_zero(word_[0]);
        if (word_[1]) return 64 + std::countr_zero(word_[1]);
        return -1;
    }

    VertexSet operator|(const VertexSet& o) const { return {word_[0] | o.word_[0], word_[1] | o.word_[1]}; }
    VertexSet operator&(const VertexSet& o) const { return {word_[0] & o.word_[0], word_[1] & o.word_[1]}; }
    VertexSet operator^(const VertexSet& o) const { return {word_[0] ^ o.word_[0], word_[1] ^ o.word_[1]}; }
    /// Set difference: members of *this not in o.
    VertexSet minus(const VertexSet& o) const { return {word_[0] & ~o.word_[0], word_[1] & ~o.word_[1]}; }
    VertexSet& operator|=(const VertexSet& o) { word_[0] |= o.word_[0]; word_[1] |= o.word_[1]; return *this; }
    VertexSet& operator&=(const VertexSet& o) { word_[0] &= o.word_[0]; word_[1] &= o.word_[1]; return *this; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    std::strong_ordering operator<=>(const VertexSet& o) const {
        if (auto c = word_[1] <=> o.word_[1]; c != 0) return c;
        return word_[0] <=> o.word_[0];
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
    /// Calls f(v) for each member in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = word_[w];
            while (bits) {
                f(64 * w + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : word_{lo, hi} {}
    std::array<std::uint64_t, 2> word_{0, 0};
};

/// Undirected simple graph on vertices 0..n-1 with neighbor bitsets and
/// optional per-vertex text labels. Immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                                std::vector<std::string> labels = {});
    static Graph parse_graph6(std::string_view text);
    static Graph read_edge_list(std::string_view text);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    const VertexSet& closed_neighborhood(int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    bool is_connected() const;
    /// True when the subgraph induced by s is connected (vacuously for empty s).
    bool connected_within(const VertexSet& s) const;
    Graph induced_subgraph(const VertexSet& s, std::vector<int>* original = nullptr) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }
    /// Label when present, decimal index otherwise.
    std::string display(int v) const;
    /// Members of s rendered "a,b,c" in ascending vertex order.
    std::string format_set(const VertexSet& s) const;
    /// Index carrying the given label, -1 when absent.
    int find_label(std::string_view name) const;

    std::string to_graph6() const;
    std::string to_edge_list() const;
    std::string to_dot() const;

    /// Structural equality; labels are provenance only and ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
    }
    int n_ = 0;
    int edges_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> closed_;
    std::vector<std::string> labels_;
};

}  // namespace domrec
