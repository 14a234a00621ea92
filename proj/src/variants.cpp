#include "domrec/variants.hpp"

namespace domrec {

bool minimizing(DomVariant v) {
    switch (v) {
        case DomVariant::UpperGamma:
        case DomVariant::UpperIr:
        case DomVariant::Independence:
            return false;
        default:
            return true;
    }
}

std::string_view variant_name(DomVariant v) {
    switch (v) {
        case DomVariant::Gamma: return "gamma";
        case DomVariant::Ir: return "ir";
        case DomVariant::Total: return "gamma-t";
        case DomVariant::Paired: return "gamma-pr";
        case DomVariant::Connected: return "gamma-c";
        case DomVariant::IdCode: return "gamma-id";
        case DomVariant::LocDom: return "gamma-l";
        case DomVariant::LocTotal: return "gamma-tl";
        case DomVariant::UpperGamma: return "upper";
        case DomVariant::UpperIr: return "upper-ir";
        case DomVariant::IndepDom: return "i";
        case DomVariant::Independence: return "alpha";
    }
    return "?";
}

std::optional<DomVariant> parse_variant(std::string_view name) {
    for (DomVariant v : kAllVariants)
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

VertexSet closed_neighborhood_of(const Graph& g, const VertexSet& s) {
    VertexSet out;
    s.for_each([&](int v) { out |= g.closed_neighborhood(v); });
    return out;
}

VertexSet private_neighborhood(const Graph& g, const VertexSet& s, int v) {
    if (!s.contains(v))
        throw Error(Errc::vertex_not_in_set, "private neighborhood requires v in S");
    return g.closed_neighborhood(v).minus(closed_neighborhood_of(g, s.without(v)));
}

VertexSet intersection_set(const Graph& g, const VertexSet& s, int v) {
    return g.closed_neighborhood(v) & s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    return g.vertices().subset_of(closed_neighborhood_of(g, s));
}

// Vertices covered exactly once by N[.] over members of s are precisely the
// private neighbors of whichever member covers them.
static void coverage(const Graph& g, const VertexSet& s, VertexSet& once, VertexSet& twice) {
    s.for_each([&](int v) {
        const VertexSet& nb = g.closed_neighborhood(v);
        twice |= once & nb;
        once |= nb;
    });
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
    VertexSet once, twice;
    coverage(g, s, once, twice);
    if (!g.vertices().subset_of(once)) return false;
    VertexSet exactly_once = once.minus(twice);
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.closed_neighborhood(v).intersects(exactly_once); });
    return ok;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.neighbors(v).intersects(s); });
    return ok;
}

static bool match_rest(const Graph& g, VertexSet unmatched) {
    int u = unmatched.first();
    if (u < 0) return true;
    unmatched.remove(u);
    VertexSet cands = g.neighbors(u) & unmatched;
    bool found = false;
    cands.for_each([&](int w) {
        if (!found && match_rest(g, unmatched.without(w))) found = true;
    });
    return found;
}

bool is_paired_dominating(const Graph& g, const VertexSet& s) {
    if (s.count() % 2 != 0) return false;
    if (!is_dominating(g, s)) return false;
    return match_rest(g, s);
}

bool is_connected_dominating(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    return is_dominating(g, s) && g.connected_within(s);
}

bool is_irredundant(const Graph& g, const VertexSet& s) {
    VertexSet once, twice;
    coverage(g, s, once, twice);
    VertexSet exactly_once = once.minus(twice);
    bool ok = true;
    s.for_each([&](int v) { ok = ok && g.closed_neighborhood(v).intersects(exactly_once); });
    return ok;
}

bool is_maximal_irredundant(const Graph& g, const VertexSet& s) {
    if (!is_irredundant(g, s)) return false;
    bool maximal = true;
    g.vertices().minus(s).for_each([&](int w) {
        if (maximal && is_irredundant(g, s.with(w))) maximal = false;
    });
    return maximal;
}

bool is_identifying_code(const Graph& g, const VertexSet& s) {
    int n = g.vertex_count();
    std::vector<VertexSet> isect(n);
    for (int v = 0; v < n; ++v) {
        isect[v] = g.closed_neighborhood(v) & s;
        if (isect[v].empty()) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (isect[u] == isect[w]) return false;
    return true;
}

bool is_locating_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    std::vector<VertexSet> outside;
    g.vertices().minus(s).for_each([&](int v) { outside.push_back(g.closed_neighborhood(v) & s); });
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t j = i + 1; j < outside.size(); ++j)
            if (outside[i] == outside[j]) return false;
    return true;
}

bool is_locating_total_dominating(const Graph& g, const VertexSet& s) {
    if (!is_locating_dominating(g, s)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

bool satisfies(const Graph& g, const VertexSet& s, DomVariant variant) {
    switch (variant) {
        case DomVariant::Gamma: return is_dominating(g, s);
        case DomVariant::Ir: return is_maximal_irredundant(g, s);
        case DomVariant::Total: return is_total_dominating(g, s);
        case DomVariant::Paired: return is_paired_dominating(g, s);
        case DomVariant::Connected: return is_connected_dominating(g, s);
        case DomVariant::IdCode: return is_identifying_code(g, s);
        case DomVariant::LocDom: return is_locating_dominating(g, s);
        case DomVariant::LocTotal: return is_locating_total_dominating(g, s);
        case DomVariant::UpperGamma: return is_minimal_dominating(g, s);
        case DomVariant::UpperIr: return is_maximal_irredundant(g, s);
        case DomVariant::IndepDom: return is_independent(g, s) && is_dominating(g, s);
        case DomVariant::Independence: return is_independent(g, s);
    }
    return false;
}

}  // namespace domrec
