#include "domrec/reconfig.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace domrec {

std::string_view model_name(AdjacencyModel m) {
    switch (m) {
        case AdjacencyModel::slide: return "slide";
        case AdjacencyModel::jump: return "jump";
        case AdjacencyModel::add_remove: return "add-remove";
    }
    return "?";
}

bool adjacent_jump(const VertexSet& s, const VertexSet& t) {
    if (s.count() != t.count())
        throw Error(Errc::cardinality_mismatch, "jump adjacency requires equal cardinalities");
    return (s ^ t).count() == 2;
}

bool adjacent_slide(const Graph& g, const VertexSet& s, const VertexSet& t) {
    if (s.count() != t.count())
        throw Error(Errc::cardinality_mismatch, "slide adjacency requires equal cardinalities");
    VertexSet diff = s ^ t;
    if (diff.count() != 2) return false;
    int u = diff.first();
    int v = diff.without(u).first();
    return g.adjacent(u, v);
}

namespace {

// Pairwise adjacency over node-index ranges, fanned out to workers when
// enabled; chunks are merged in index order, so the edge list is independent
// of scheduling.
void build_edges(ReconfigGraph& r) {
    int n = r.node_count();
    auto test = [&](int i, int j) {
        const VertexSet& a = r.nodes.sets[i];
        const VertexSet& b = r.nodes.sets[j];
        if (r.model == AdjacencyModel::add_remove) return (a ^ b).count() == 1;
        VertexSet diff = a ^ b;
        if (diff.count() != 2) return false;
        if (r.model == AdjacencyModel::jump) return true;
        int u = diff.first();
        return r.base.adjacent(u, diff.without(u).first());
    };
    int threads = std::min(solver_threads(), std::max(1, n));
    std::vector<std::vector<std::pair<int, int>>> chunks(n);
    auto row = [&](int i) {
        for (int j = i + 1; j < n; ++j)
            if (test(i, j)) chunks[i].emplace_back(i, j);
    };
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) row(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                row(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& c : chunks)
        r.edges.insert(r.edges.end(), c.begin(), c.end());
    r.node_adjacency.assign(n, {});
    for (auto [u, v] : r.edges) {
        r.node_adjacency[u].push_back(v);
        r.node_adjacency[v].push_back(u);
    }
    for (auto& a : r.node_adjacency) std::sort(a.begin(), a.end());
}

}  // namespace

ReconfigGraph build_reconfig_graph(const Graph& base, SetFamily nodes, AdjacencyModel model) {
    ReconfigGraph r;
    r.base = base;
    r.nodes = std::move(nodes);
    r.nodes.canonicalize();
    r.model = model;
    build_edges(r);
    return r;
}

ReconfigGraph build_variant_graph(const Graph& g, DomVariant variant, AdjacencyModel model) {
    if (model != AdjacencyModel::slide && model != AdjacencyModel::jump)
        throw Error(Errc::invalid_argument, "variant graphs use the slide or jump model");
    OptimalResult opt = bb_optimal(g, variant);
    if (!opt.value.is_finite())
        throw Error(Errc::parameter_undefined_or_infinite,
                    std::string(variant_name(variant)) + " is " + opt.value.to_string() +
                        " on this graph");
    return build_reconfig_graph(g, std::move(opt.family), model);
}

ReconfigGraph build_k_dominating_graph(const Graph& g, int k) {
    if (k < 0 || k > g.vertex_count())
        throw Error(Errc::invalid_argument, "k must lie in 0..n");
    ReconfigGraph r = build_reconfig_graph(g, enumerate_dominating_up_to(g, k),
                                           AdjacencyModel::add_remove);
    r.k = k;
    return r;
}

VertexSet stuck_vertices(const ReconfigGraph& r, int node) {
    if (node < 0 || node >= r.node_count())
        throw Error(Errc::vertex_out_of_range, "node index out of range");
    VertexSet stuck = r.nodes.sets[node];
    for (int nb : r.node_adjacency[node]) stuck &= r.nodes.sets[nb];
    return stuck;
}

ReconfigAnalysis analyze(const ReconfigGraph& r) {
    int n = r.node_count();
    ReconfigAnalysis a;
    a.component_of.assign(n, -1);
    for (int start = 0; start < n; ++start) {
        if (a.component_of[start] >= 0) continue;
        int comp = a.component_count++;
        std::deque<int> queue{start};
        a.component_of[start] = comp;
        int size = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            ++size;
            for (int v : r.node_adjacency[u])
                if (a.component_of[v] < 0) {
                    a.component_of[v] = comp;
                    queue.push_back(v);
                }
        }
        a.component_sizes.push_back(size);
    }
    // per-component diameter by BFS from every node
    a.component_diameters.assign(a.component_count, 0);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            int& dia = a.component_diameters[a.component_of[s]];
            dia = std::max(dia, dist[u]);
            for (int v : r.node_adjacency[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return a;
}

std::vector<VertexSet> frozen_vertices(const ReconfigGraph& r) {
    ReconfigAnalysis a = analyze(r);
    std::vector<VertexSet> per_component(a.component_count, r.base.vertices());
    for (int i = 0; i < r.node_count(); ++i)
        per_component[a.component_of[i]] &= r.nodes.sets[i];
    std::vector<VertexSet> out(r.node_count());
    for (int i = 0; i < r.node_count(); ++i) out[i] = per_component[a.component_of[i]];
    return out;
}

Graph to_graph(const ReconfigGraph& r) {
    return Graph::from_edge_list(r.node_count(), r.edges);
}

std::string to_dot(const ReconfigGraph& r) {
    std::string out = "graph R {\n";
    for (int i = 0; i < r.node_count(); ++i)
        out += "  " + std::to_string(i) + " [label=\"{" + r.base.format_set(r.nodes.sets[i]) +
               "}\"];\n";
    for (auto [u, v] : r.edges)
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace domrec
