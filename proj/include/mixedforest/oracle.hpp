// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_ORACLE_HPP
#define MIXEDFOREST_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Caps for the exhaustive engines. They are ground truth for tests and
/// small-instance CLI fallbacks, not production solvers.
struct OracleBudget {
    int max_vertices = 10;
    int max_elements = 14;
    int max_k = 4;

    void check_instance(const MixedGraph& g) const;
    void check_k(int k) const;
};

/// All subsets of E∪A passing the kind's predicate, in canonical
/// (bit-order) enumeration order.
std::vector<ElementSet> enumerate_structures(const MixedGraph& g, StructureKind kind,
                                             const OracleBudget& budget = {});

/// Streaming variant; stops early when the visitor returns false.
void for_each_structure(const MixedGraph& g, StructureKind kind, const OracleBudget& budget,
                        const std::function<bool(const ElementSet&)>& visit);

/// All ordered partitions of E∪A into k parts, each passing the predicate.
std::vector<std::vector<ElementSet>> enumerate_partitions(const MixedGraph& g, int k,
                                                          StructureKind kind,
                                                          const OracleBudget& budget = {});

/// Streaming variant; stops early when the visitor returns false.
void for_each_partition(const MixedGraph& g, int k, StructureKind kind,
                        const OracleBudget& budget,
                        const std::function<bool(const std::vector<ElementSet>&)>& visit);

/// First partition found, if any.
std::optional<std::vector<ElementSet>> find_partition(const MixedGraph& g, int k,
                                                      StructureKind kind,
                                                      const OracleBudget& budget = {});

/// All ordered families of k pairwise disjoint structures (not necessarily
/// covering E∪A). Used for packing problems.
std::optional<std::vector<ElementSet>> find_disjoint_family(const MixedGraph& g, int k,
                                                            StructureKind kind,
                                                            const OracleBudget& budget = {});

/// Exact optima over all ordered k-partitions of the maximum pairwise gaps,
/// each criterion minimized independently plus the best joint values.
struct BestBounds {
    int partition_count = 0;  // ordered partitions
    int min_edge_gap = -1;
    int min_arc_gap = -1;
    int min_total_gap = -1;
    // Smallest total gap among edge-gap-optimal partitions and vice versa;
    // grounds joint-unachievability claims.
    int min_total_gap_at_best_edge = -1;
    int min_edge_gap_at_best_total = -1;
};

BestBounds best_bounds(const MixedGraph& g, int k, StructureKind kind,
                       const OracleBudget& budget = {});

}  // namespace mixedforest

#endif
