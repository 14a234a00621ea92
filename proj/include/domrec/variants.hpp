#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "domrec/graph.hpp"

namespace domrec {

/// Domination-variant tags. Each maps to one predicate and one optimization
/// direction (see minimizing()).
enum class DomVariant {
    Gamma,         // dominating
    Ir,            // maximal irredundant
    Total,         // total dominating
    Paired,        // paired dominating
    Connected,     // connected dominating
    IdCode,        // identifying code
    LocDom,        // locating-dominating
    LocTotal,      // locating-total dominating
    UpperGamma,    // minimal dominating, maximized
    UpperIr,       // maximal irredundant, maximized
    IndepDom,      // independent dominating
    Independence,  // independent, maximized
};

inline constexpr std::array<DomVariant, 12> kAllVariants = {
    DomVariant::Gamma,      DomVariant::Ir,      DomVariant::Total,
    DomVariant::Paired,     DomVariant::Connected, DomVariant::IdCode,
    DomVariant::LocDom,     DomVariant::LocTotal,  DomVariant::UpperGamma,
    DomVariant::UpperIr,    DomVariant::IndepDom,  DomVariant::Independence,
};

bool minimizing(DomVariant v);
std::string_view variant_name(DomVariant v);
std::optional<DomVariant> parse_variant(std::string_view name);

/// N[S]: union of closed neighborhoods over the members of s.
VertexSet closed_neighborhood_of(const Graph& g, const VertexSet& s);

/// pn[v,S] = N[v] - N[S - {v}]. Requires v in s.
VertexSet private_neighborhood(const Graph& g, const VertexSet& s, int v);

/// I_S(v) = N[v] n S.
VertexSet intersection_set(const Graph& g, const VertexSet& s, int v);

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_minimal_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool is_paired_dominating(const Graph& g, const VertexSet& s);
bool is_connected_dominating(const Graph& g, const VertexSet& s);
bool is_irredundant(const Graph& g, const VertexSet& s);
bool is_maximal_irredundant(const Graph& g, const VertexSet& s);
bool is_identifying_code(const Graph& g, const VertexSet& s);
bool is_locating_dominating(const Graph& g, const VertexSet& s);
bool is_locating_total_dominating(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

/// Dispatch to the predicate behind a variant tag. For the maximizing tags
/// this is the membership predicate; maximality over cardinality is the
/// solver's job.
bool satisfies(const Graph& g, const VertexSet& s, DomVariant variant);

}  // namespace domrec
