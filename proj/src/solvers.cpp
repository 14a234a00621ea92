#include "domrec/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdio>
#include <thread>

namespace domrec {

std::string ParamValue::to_string() const {
    switch (kind) {
        case ParamKind::finite: return std::to_string(value);
        case ParamKind::infinite: return "infinity";
        case ParamKind::undefined: return "undefined";
    }
    return "?";
}

bool SetFamily::contains(const VertexSet& s) const {
    return std::binary_search(sets.begin(), sets.end(), s);
}

void SetFamily::canonicalize() {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

namespace {

std::atomic<int> g_threads{1};

// Outcome when no set of any cardinality satisfies the variant predicate.
ParamValue infeasible_value(DomVariant v) {
    return v == DomVariant::IdCode ? ParamValue::infinite() : ParamValue::undefined();
}

// ---------------------------------------------------------------------------
// brute force oracle

template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
    if (k > n) return;
    if (k == 0) {
        f(VertexSet{});
        return;
    }
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        f(VertexSet::from_mask(mask));
        std::uint64_t c = mask & (0 - mask);
        std::uint64_t r = mask + c;
        mask = r | (((mask ^ r) >> 2) / c);
    }
}

}  // namespace

OptimalResult brute_force_optimal(const Graph& g, DomVariant variant) {
    int n = g.vertex_count();
    if (n > 63)
        throw Error(Errc::unsupported_size, "brute-force oracle limited to 63 vertices");
    if (n > 24)
        std::fprintf(stderr, "domrec: warning: brute force on %d vertices may be slow\n", n);
    auto level = [&](int k) {
        SetFamily fam;
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            if (satisfies(g, s, variant)) fam.sets.push_back(s);
        });
        fam.canonicalize();
        return fam;
    };
    if (minimizing(variant)) {
        for (int k = 0; k <= n; ++k)
            if (SetFamily fam = level(k); !fam.empty()) return {ParamValue::finite(k), std::move(fam)};
    } else {
        for (int k = n; k >= 0; --k)
            if (SetFamily fam = level(k); !fam.empty()) return {ParamValue::finite(k), std::move(fam)};
    }
    return {infeasible_value(variant), {}};
}

// ---------------------------------------------------------------------------
// shared collection helpers

namespace {

// Collects complete solutions of the current best cardinality.
struct Collector {
    bool maximize = false;
    int best;
    std::vector<VertexSet> sets;

    explicit Collector(bool max) : maximize(max), best(max ? -1 : INT_MAX) {}
    bool improves(int s) const { return maximize ? s > best : s < best; }
    void offer(const VertexSet& s) {
        int c = s.count();
        if (improves(c)) {
            best = c;
            sets.clear();
        }
        if (c == best) sets.push_back(s);
    }
};

// ---------------------------------------------------------------------------
// minimum hitting set engine
//
// Handles every minimizing variant whose solutions are exactly the hitting
// sets of a fixed constraint system: domination (closed neighborhoods),
// total domination (open neighborhoods), identifying codes and
// locating(-total) domination (neighborhood symmetric differences of the
// unresolved pairs), and independent domination (closed neighborhoods plus
// independence propagation). Pendant forcing falls out of the size-one and
// size-two constraints together with unit propagation; the lower bound is a
// greedy packing of pairwise disjoint unhit constraints. Enumeration is
// complete: branches exclude previously tried candidates, partitioning the
// solution space, and pruning is strict so optimal leaves survive.

struct HittingProblem {
    int n = 0;
    bool infeasible = false;
    bool independent = false;  // include(u) excludes N(u)
    std::vector<VertexSet> constraints;
};

HittingProblem build_hitting_problem(const Graph& g, DomVariant variant) {
    HittingProblem p;
    p.n = g.vertex_count();
    p.independent = variant == DomVariant::IndepDom;
    auto add = [&](const VertexSet& c) {
        if (c.empty())
            p.infeasible = true;
        else
            p.constraints.push_back(c);
    };
    bool closed = variant == DomVariant::Gamma || variant == DomVariant::IdCode ||
                  variant == DomVariant::LocDom || variant == DomVariant::IndepDom;
    bool open = variant == DomVariant::Total || variant == DomVariant::LocTotal;
    for (int v = 0; v < p.n && !p.infeasible; ++v) {
        if (closed) add(g.closed_neighborhood(v));
        if (open) add(g.neighbors(v));
    }
    if (variant == DomVariant::IdCode || variant == DomVariant::LocDom ||
        variant == DomVariant::LocTotal) {
        bool exempt_members = variant != DomVariant::IdCode;
        for (int u = 0; u < p.n && !p.infeasible; ++u)
            for (int w = u + 1; w < p.n && !p.infeasible; ++w) {
                VertexSet d = g.closed_neighborhood(u) ^ g.closed_neighborhood(w);
                if (exempt_members) {
                    d.add(u);
                    d.add(w);
                }
                add(d);
            }
    }
    if (p.infeasible) return p;
    // drop supersets of other constraints: hitting the subset implies them
    std::sort(p.constraints.begin(), p.constraints.end(),
              [](const VertexSet& a, const VertexSet& b) {
                  int ca = a.count(), cb = b.count();
                  return ca != cb ? ca < cb : a < b;
              });
    std::vector<VertexSet> kept;
    for (const VertexSet& c : p.constraints) {
        bool redundant = false;
        for (const VertexSet& k : kept)
            if (k.subset_of(c)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(c);
    }
    p.constraints = std::move(kept);
    return p;
}

struct HitEngine {
    const Graph& g;
    const HittingProblem& prob;
    std::atomic<int> shared_best{INT_MAX};

    struct Task {
        VertexSet in, excluded;
    };

    explicit HitEngine(const Graph& graph, const HittingProblem& problem)
        : g(graph), prob(problem) {}

    void include(VertexSet& in, VertexSet& excluded, int u) const {
        in.add(u);
        if (prob.independent) excluded |= g.neighbors(u);
    }

    // Scans the constraint system: applies unit propagation, detects dead
    // branches, computes the packing bound, and picks the branch constraint.
    // Returns false when the branch is dead.
    bool scan(VertexSet& in, VertexSet& excluded, int& lb, int& branch_idx) const {
        for (;;) {
            bool again = false;
            lb = 0;
            branch_idx = -1;
            int branch_count = INT_MAX;
            VertexSet used;
            for (int i = 0; i < static_cast<int>(prob.constraints.size()); ++i) {
                const VertexSet& c = prob.constraints[i];
                if (c.intersects(in)) continue;
                VertexSet cand = c.minus(excluded);
                int cnt = cand.count();
                if (cnt == 0) return false;
                if (cnt == 1) {
                    include(in, excluded, cand.first());
                    again = true;
                    break;
                }
                if (cnt < branch_count) {
                    branch_count = cnt;
                    branch_idx = i;
                }
                if (!cand.intersects(used)) {
                    ++lb;
                    used |= cand;
                }
            }
            if (!again) return true;
        }
    }

    // Candidates of the branch constraint, most-covering first.
    std::vector<int> order_candidates(const VertexSet& cand, const VertexSet& in,
                                      const VertexSet& excluded) const {
        std::vector<std::pair<int, int>> scored;
        cand.for_each([&](int u) {
            int score = 0;
            for (const VertexSet& c : prob.constraints)
                if (!c.intersects(in) && c.minus(excluded).contains(u)) ++score;
            scored.emplace_back(-score, u);
        });
        std::sort(scored.begin(), scored.end());
        std::vector<int> out;
        out.reserve(scored.size());
        for (auto [s, u] : scored) out.push_back(u);
        return out;
    }

    // The shared incumbent only sharpens pruning; each worker keeps its own
    // best-so-far sets and the merge re-filters to the global optimum.
    void record(Collector& local, const VertexSet& in) {
        int c = in.count();
        int best = shared_best.load(std::memory_order_relaxed);
        while (c < best && !shared_best.compare_exchange_weak(best, c, std::memory_order_relaxed)) {
        }
        local.offer(in);
    }

    void run(VertexSet in, VertexSet excluded, Collector& local) {
        int lb = 0, branch_idx = -1;
        if (!scan(in, excluded, lb, branch_idx)) return;
        if (branch_idx < 0) {
            record(local, in);
            return;
        }
        if (in.count() + lb > shared_best.load(std::memory_order_relaxed)) return;
        VertexSet cand = prob.constraints[branch_idx].minus(excluded);
        for (int u : order_candidates(cand, in, excluded)) {
            VertexSet in2 = in, ex2 = excluded;
            include(in2, ex2, u);
            run(in2, ex2, local);
            excluded.add(u);
        }
    }

    OptimalResult solve() {
        Collector total(false);
        if (prob.infeasible) return {{}, {}};
        VertexSet in, excluded;
        int lb = 0, branch_idx = -1;
        if (!scan(in, excluded, lb, branch_idx)) return {{}, {}};
        int threads = g_threads.load();
        if (branch_idx < 0) {
            total.offer(in);
        } else if (threads <= 1) {
            run(in, excluded, total);
        } else {
            // fan the root branches out to workers; the shared incumbent only
            // tightens pruning, never correctness
            std::vector<Task> tasks;
            VertexSet cand = prob.constraints[branch_idx].minus(excluded);
            for (int u : order_candidates(cand, in, excluded)) {
                VertexSet in2 = in, ex2 = excluded;
                include(in2, ex2, u);
                tasks.push_back({in2, ex2});
                excluded.add(u);
            }
            std::vector<Collector> locals(tasks.size(), Collector(false));
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    run(tasks[i].in, tasks[i].excluded, locals[i]);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < std::min<int>(threads, static_cast<int>(tasks.size())); ++t)
                pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            for (const Collector& l : locals)
                for (const VertexSet& s : l.sets) total.offer(s);
        }
        if (total.sets.empty()) return {{}, {}};
        SetFamily fam{std::move(total.sets)};
        fam.canonicalize();
        return {ParamValue::finite(total.best), std::move(fam)};
    }
};

// ---------------------------------------------------------------------------
// cardinality-k dominating set enumeration
//
// Used for the variants whose defining property is not a hitting-set system
// (paired and connected domination) and for k-dominating graphs. Branches on
// an undominated vertex's closed neighborhood, partitioning by the first
// included candidate; once the partial set dominates, remaining members are
// completed in ascending order, so every dominating set of each cardinality
// is generated exactly once.

enum class CoverMode { paired, connected, up_to_k };

struct CoverEngine {
    const Graph& g;
    CoverMode mode;
    int k;
    std::vector<VertexSet>& found;

    int packing_bound(const VertexSet& covered, const VertexSet& excluded) const {
        int lb = 0;
        VertexSet used;
        g.vertices().minus(covered).for_each([&](int w) {
            VertexSet cand = g.closed_neighborhood(w).minus(excluded);
            if (!cand.intersects(used)) {
                ++lb;
                used |= cand;
            }
        });
        return lb;
    }

    void complete(const VertexSet& in, const VertexSet& excluded, int from) {
        if (mode == CoverMode::up_to_k)
            found.push_back(in);
        else if (in.count() == k) {
            if (mode == CoverMode::paired ? is_paired_dominating(g, in)
                                          : is_connected_dominating(g, in))
                found.push_back(in);
            return;
        }
        if (in.count() >= k) return;
        VertexSet pool = g.vertices().minus(in).minus(excluded);
        pool.for_each([&](int v) {
            if (v >= from) complete(in.with(v), excluded, v + 1);
        });
    }

    void run(VertexSet in, VertexSet excluded, VertexSet covered) {
        if (covered == g.vertices()) {
            complete(in, excluded, 0);
            return;
        }
        if (in.count() + packing_bound(covered, excluded) > k) return;
        // undominated vertex with the fewest remaining dominators
        int pick = -1, pick_cnt = INT_MAX;
        bool dead = false;
        g.vertices().minus(covered).for_each([&](int w) {
            int cnt = g.closed_neighborhood(w).minus(excluded).count();
            if (cnt == 0) dead = true;
            if (cnt < pick_cnt) {
                pick_cnt = cnt;
                pick = w;
            }
        });
        if (dead || pick < 0) return;
        VertexSet cand = g.closed_neighborhood(pick).minus(excluded);
        std::vector<std::pair<int, int>> scored;
        VertexSet uncovered = g.vertices().minus(covered);
        cand.for_each([&](int u) {
            scored.emplace_back(-(g.closed_neighborhood(u) & uncovered).count(), u);
        });
        std::sort(scored.begin(), scored.end());
        for (auto [s, u] : scored) {
            run(in.with(u), excluded, covered | g.closed_neighborhood(u));
            excluded.add(u);
        }
    }
};

OptimalResult solve_cover_variant(const Graph& g, DomVariant variant) {
    // feasibility guards; both match what exhaustive search would conclude
    if (variant == DomVariant::Paired) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.neighbors(v).empty()) return {{}, {}};
    } else if (!g.is_connected() || g.vertex_count() == 0) {
        return {{}, {}};
    }
    CoverMode mode = variant == DomVariant::Paired ? CoverMode::paired : CoverMode::connected;
    std::vector<VertexSet> found;
    CoverEngine engine{g, mode, 0, found};
    int start = engine.packing_bound(VertexSet{}, VertexSet{});
    for (int k = std::max(start, variant == DomVariant::Connected ? 1 : 0);
         k <= g.vertex_count(); ++k) {
        if (variant == DomVariant::Paired && k % 2 != 0) continue;
        engine.k = k;
        engine.run(VertexSet{}, VertexSet{}, VertexSet{});
        if (!found.empty()) {
            SetFamily fam{std::move(found)};
            fam.canonicalize();
            return {ParamValue::finite(k), std::move(fam)};
        }
    }
    return {{}, {}};
}

// ---------------------------------------------------------------------------
// minimum maximal irredundant sets (ir)
//
// Ascending-cardinality combination search. A branch dies as soon as some
// chosen vertex can no longer obtain a private neighbor (supersets only
// shrink private neighborhoods), and leaves are checked for maximality.

struct IrEngine {
    const Graph& g;
    int k;
    std::vector<VertexSet>& found;

    bool all_alive(const VertexSet& in) const {
        VertexSet once, twice;
        in.for_each([&](int v) {
            const VertexSet& nb = g.closed_neighborhood(v);
            twice |= once & nb;
            once |= nb;
        });
        VertexSet open = g.vertices().minus(once) | once.minus(twice);
        bool ok = true;
        in.for_each([&](int v) { ok = ok && g.closed_neighborhood(v).intersects(open); });
        return ok;
    }

    void run(const VertexSet& in, int from) {
        if (in.count() == k) {
            if (is_maximal_irredundant(g, in)) found.push_back(in);
            return;
        }
        if (in.count() + (g.vertex_count() - from) < k) return;
        for (int v = from; v < g.vertex_count(); ++v) {
            VertexSet in2 = in.with(v);
            if (all_alive(in2)) run(in2, v + 1);
        }
    }
};

OptimalResult solve_ir(const Graph& g) {
    std::vector<VertexSet> found;
    IrEngine engine{g, 0, found};
    for (int k = 0; k <= g.vertex_count(); ++k) {
        engine.k = k;
        engine.run(VertexSet{}, 0);
        if (!found.empty()) {
            SetFamily fam{std::move(found)};
            fam.canonicalize();
            return {ParamValue::finite(k), std::move(fam)};
        }
    }
    return {{}, {}};
}

// ---------------------------------------------------------------------------
// maximizing engines
//
// Inclusion/exclusion searches bounded by |S| + |undecided|, pruning only
// when the bound falls strictly below the incumbent so that every optimal
// leaf survives.

// Minimal dominating sets: branches on an undominated vertex's closed
// neighborhood. Once the partial set dominates, no proper superset is
// minimal (a new vertex could not obtain a private neighbor), so the leaf is
// recorded immediately. Unbounded mode collects every minimal dominating set.
struct MinimalDomEngine {
    const Graph& g;
    bool bounded;
    Collector* collector = nullptr;            // bounded mode
    std::vector<VertexSet>* all = nullptr;     // enumerate-all mode

    bool members_alive(const VertexSet& in, const VertexSet& once, const VertexSet& twice) const {
        VertexSet open = g.vertices().minus(once) | once.minus(twice);
        bool ok = true;
        in.for_each([&](int v) { ok = ok && g.closed_neighborhood(v).intersects(open); });
        return ok;
    }

    void run(VertexSet in, VertexSet excluded, VertexSet once, VertexSet twice) {
        if (!members_alive(in, once, twice)) return;
        VertexSet undecided = g.vertices().minus(in).minus(excluded);
        if (bounded && in.count() + undecided.count() < collector->best) return;
        if (once == g.vertices()) {
            if (bounded)
                collector->offer(in);
            else
                all->push_back(in);
            return;
        }
        int pick = -1, pick_cnt = INT_MAX;
        bool dead = false;
        g.vertices().minus(once).for_each([&](int w) {
            int cnt = (g.closed_neighborhood(w) & undecided).count();
            if (cnt == 0) dead = true;
            if (cnt < pick_cnt) {
                pick_cnt = cnt;
                pick = w;
            }
        });
        if (dead || pick < 0) return;
        VertexSet cand = g.closed_neighborhood(pick) & undecided;
        VertexSet uncovered = g.vertices().minus(once);
        std::vector<std::pair<int, int>> scored;
        cand.for_each([&](int u) {
            scored.emplace_back(-(g.closed_neighborhood(u) & uncovered).count(), u);
        });
        std::sort(scored.begin(), scored.end());
        for (auto [s, u] : scored) {
            const VertexSet& nb = g.closed_neighborhood(u);
            run(in.with(u), excluded, once | nb, twice | (once & nb));
            excluded.add(u);
        }
    }
};

// Maximal irredundant sets of maximum cardinality (IR).
struct UpperIrEngine {
    const Graph& g;
    Collector& collector;

    void run(int v, VertexSet in, VertexSet once, VertexSet twice) {
        int n = g.vertex_count();
        if (in.count() + (n - v) < collector.best) return;
        if (v == n) {
            if (is_maximal_irredundant(g, in)) collector.offer(in);
            return;
        }
        {
            const VertexSet& nb = g.closed_neighborhood(v);
            VertexSet in2 = in.with(v), once2 = once | nb, twice2 = twice | (once & nb);
            VertexSet open = g.vertices().minus(once2) | once2.minus(twice2);
            bool alive = true;
            in2.for_each([&](int u) { alive = alive && g.closed_neighborhood(u).intersects(open); });
            if (alive) run(v + 1, in2, once2, twice2);
        }
        run(v + 1, in, once, twice);
    }
};

// Maximum independent sets.
struct IndependenceEngine {
    const Graph& g;
    Collector& collector;

    void run(VertexSet in, VertexSet out) {
        VertexSet undecided = g.vertices().minus(in).minus(out);
        if (in.count() + undecided.count() < collector.best) return;
        if (undecided.empty()) {
            collector.offer(in);
            return;
        }
        int pick = -1, pick_deg = -1;
        undecided.for_each([&](int v) {
            int d = (g.neighbors(v) & undecided).count();
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        });
        run(in.with(pick), out | g.neighbors(pick));
        run(in, out.with(pick));
    }
};

}  // namespace

SetFamily enumerate_minimal_dominating(const Graph& g) {
    if (g.vertex_count() > 40)
        std::fprintf(stderr, "domrec: warning: enumerating minimal dominating sets on %d vertices may be slow\n",
                     g.vertex_count());
    std::vector<VertexSet> all;
    MinimalDomEngine engine{g, false, nullptr, &all};
    engine.run(VertexSet{}, VertexSet{}, VertexSet{}, VertexSet{});
    SetFamily fam{std::move(all)};
    fam.canonicalize();
    return fam;
}

SetFamily enumerate_dominating_up_to(const Graph& g, int k) {
    if (k < 0 || k > g.vertex_count())
        throw Error(Errc::invalid_argument, "k must lie in 0..n");
    std::vector<VertexSet> found;
    CoverEngine engine{g, CoverMode::up_to_k, k, found};
    engine.run(VertexSet{}, VertexSet{}, VertexSet{});
    SetFamily fam{std::move(found)};
    fam.canonicalize();
    return fam;
}

OptimalResult bb_optimal(const Graph& g, DomVariant variant) {
    switch (variant) {
        case DomVariant::Gamma:
        case DomVariant::Total:
        case DomVariant::IdCode:
        case DomVariant::LocDom:
        case DomVariant::LocTotal:
        case DomVariant::IndepDom: {
            HittingProblem prob = build_hitting_problem(g, variant);
            HitEngine engine(g, prob);
            OptimalResult res = engine.solve();
            if (res.family.empty()) res.value = infeasible_value(variant);
            return res;
        }
        case DomVariant::Paired:
        case DomVariant::Connected: {
            OptimalResult res = solve_cover_variant(g, variant);
            if (res.family.empty()) res.value = infeasible_value(variant);
            return res;
        }
        case DomVariant::Ir: {
            OptimalResult res = solve_ir(g);
            if (res.family.empty()) res.value = infeasible_value(variant);
            return res;
        }
        case DomVariant::UpperGamma: {
            Collector c(true);
            MinimalDomEngine engine{g, true, &c, nullptr};
            engine.run(VertexSet{}, VertexSet{}, VertexSet{}, VertexSet{});
            SetFamily fam{std::move(c.sets)};
            fam.canonicalize();
            if (fam.empty()) return {infeasible_value(variant), {}};
            return {ParamValue::finite(c.best), std::move(fam)};
        }
        case DomVariant::UpperIr: {
            Collector c(true);
            UpperIrEngine engine{g, c};
            engine.run(0, VertexSet{}, VertexSet{}, VertexSet{});
            SetFamily fam{std::move(c.sets)};
            fam.canonicalize();
            if (fam.empty()) return {infeasible_value(variant), {}};
            return {ParamValue::finite(c.best), std::move(fam)};
        }
        case DomVariant::Independence: {
            Collector c(true);
            IndependenceEngine engine{g, c};
            engine.run(VertexSet{}, VertexSet{});
            SetFamily fam{std::move(c.sets)};
            fam.canonicalize();
            if (fam.empty()) return {infeasible_value(variant), {}};
            return {ParamValue::finite(c.best), std::move(fam)};
        }
    }
    return {{}, {}};
}

ParamValue parameter(const Graph& g, DomVariant variant) {
    bool isolated = false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).empty()) isolated = true;
    if (isolated && (variant == DomVariant::Total || variant == DomVariant::Paired ||
                     variant == DomVariant::LocTotal))
        return ParamValue::undefined();
    if (variant == DomVariant::Connected && !g.is_connected())
        return ParamValue::undefined();
    return bb_optimal(g, variant).value;
}

void set_solver_threads(int threads) { g_threads.store(std::max(1, threads)); }
int solver_threads() { return g_threads.load(); }

}  // namespace domrec
