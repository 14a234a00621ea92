#pragma once

#include <string>
#include <vector>

#include "domrec/variants.hpp"

namespace domrec {

enum class ParamKind { finite, infinite, undefined };

/// Value of a domination parameter: a nonnegative integer, infinity
/// (identifying codes on non-identifiable graphs), or undefined (total /
/// paired / locating-total domination with isolated vertices, connected
/// domination on disconnected graphs).
struct ParamValue {
    ParamKind kind = ParamKind::undefined;
    int value = 0;

    static ParamValue finite(int v) { return {ParamKind::finite, v}; }
    static ParamValue infinite() { return {ParamKind::infinite, 0}; }
    static ParamValue undefined() { return {ParamKind::undefined, 0}; }
    bool is_finite() const { return kind == ParamKind::finite; }
    std::string to_string() const;
    friend bool operator==(const ParamValue&, const ParamValue&) = default;
};

/// Duplicate-free collection of vertex sets of one graph in canonical
/// ascending-bitmask order.
struct SetFamily {
    std::vector<VertexSet> sets;

    int size() const { return static_cast<int>(sets.size()); }
    bool empty() const { return sets.empty(); }
    bool contains(const VertexSet& s) const;
    void canonicalize();
    friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

struct OptimalResult {
    ParamValue value;
    SetFamily family;
};

/// Exhaustive oracle: iterates cardinalities (ascending for minimizing
/// variants, descending for maximizing ones) over all subsets of each
/// cardinality and returns the first nonempty level. Soft limit n <= 24.
OptimalResult brute_force_optimal(const Graph& g, DomVariant variant);

/// Branch-and-bound engine with the same contract as brute_force_optimal:
/// identical value and identical complete family in canonical order.
OptimalResult bb_optimal(const Graph& g, DomVariant variant);

/// All minimal dominating sets, canonical order. Soft limit n <= 40.
SetFamily enumerate_minimal_dominating(const Graph& g);

/// All dominating sets of cardinality at most k, canonical order.
SetFamily enumerate_dominating_up_to(const Graph& g, int k);

/// Value component of bb_optimal with the undefined-guards applied first.
ParamValue parameter(const Graph& g, DomVariant variant);

/// Worker cap for parallel branch exploration (>= 1). Results are merged
/// and canonically re-sorted, so output does not depend on this setting.
void set_solver_threads(int threads);
int solver_threads();

}  // namespace domrec
