// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_OPTIMUM_HPP
#define MIXEDFOREST_OPTIMUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Mix-size |F∩E| + ½|F∩A| stored as a doubled integer, so all arithmetic
/// is exact.
struct MixSize {
    int doubled = 0;

    static MixSize of(const ElementSet& F) {
        return MixSize{2 * F.edge_count() + F.arc_count()};
    }
    friend MixSize operator+(MixSize a, MixSize b) { return {a.doubled + b.doubled}; }
    friend bool operator==(const MixSize&, const MixSize&) = default;
    friend auto operator<=>(const MixSize&, const MixSize&) = default;

    bool is_integer() const { return doubled % 2 == 0; }
    std::string str() const;
};

/// Shortest directed-path distance (in the full arc set) from the set of
/// edge-endpoint vertices; nullopt where unreachable. dist(v)=0 exactly on
/// covered(E); finite everywhere iff the graph admits a mixed edge cover.
std::vector<std::optional<int>> dist_from_covered_edges(const MixedGraph& g);

bool admits_mixed_edge_cover(const MixedGraph& g);

/// Maximum mix-size matching forest (exhaustive), post-processed so that
/// every uncovered vertex lies in covered(E) whenever that is achievable
/// (arc exchanges along shortest paths; the maximum mix-size is kept).
std::pair<MixSize, ElementSet> max_matching_forest(const MixedGraph& g);

/// Extends a maximum matching forest with one incident edge per uncovered
/// vertex, producing a mixed edge cover with mix-size |V| - nu.
ElementSet mf_to_mec_cover(const MixedGraph& g, const ElementSet& max_forest);

/// Minimum mix-size mixed edge cover (exhaustive); domain error if none.
std::pair<MixSize, ElementSet> min_mixed_edge_cover(const MixedGraph& g);

/// Maximal matching forest inside a minimal mixed edge cover; contains all
/// its arcs and has mix-size at least |V| - <H*>.
ElementSet mec_to_mf(const MixedGraph& g, const ElementSet& minimal_cover);

/// nu, rho, witnesses, and the Gallai identity nu + rho = |V|.
struct OptimumReport {
    MixSize nu;
    MixSize rho;
    ElementSet max_matching_forest;
    ElementSet min_mixed_edge_cover;
};

OptimumReport gallai_report(const MixedGraph& g);

/// The auxiliary graph of the minimum-weight reduction: a copy v' of every
/// vertex, the original edges and arcs at their own weights, an edge vv'
/// priced at the cheapest edge at v (absent when v has no edge), and all
/// zero-cost arcs u -> v'.
struct ReductionGraph {
    MixedGraph graph;
    std::vector<long long> cost;      // per element, edges then arcs
    int original_vertices = 0;
    int original_edges = 0;
    int original_arcs = 0;

    long long cost_of(ElementId e) const;
    ElementSet original_part(const ElementSet& F) const;
};

ReductionGraph build_reduction(const MixedGraph& g, const std::vector<long long>& weights);

/// Minimum-cost perfect matching forest, solved exactly by per-vertex
/// covering search with pruning. Desk scale only.
std::optional<std::pair<long long, ElementSet>> min_cost_perfect_matching_forest(
    const MixedGraph& g, const std::vector<long long>& cost);

/// Minimum-weight mixed edge cover via the perfect-matching-forest
/// reduction. Weights must be nonnegative integers; domain error if the
/// graph admits no cover.
std::pair<long long, ElementSet> min_weight_mec(const MixedGraph& g,
                                                const std::vector<long long>& weights);

}  // namespace mixedforest

#endif
