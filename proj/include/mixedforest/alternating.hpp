// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_ALTERNATING_HPP
#define MIXEDFOREST_ALTERNATING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mixedforest/graph.hpp"

namespace mixedforest {

/// One edge of an auxiliary graph. Endpoint node ids are the uncontracted
/// ones; contraction is applied through AuxGraphCore::representative when
/// building adjacency.
struct AuxEdge {
    int side;  // 1 or 2
    int node_a;
    int node_b;
    // The graph edge this auxiliary edge stands for; nullopt for the
    // matching-forest bullet edges, which have no edge behind them.
    std::optional<ElementId> element;
    // True for end-only classes: bullet edges v•v (matching forests) and
    // split edges of N• (mixed edge covers).
    bool end_class;
};

/// Node/edge store shared by both auxiliary constructions, plus the
/// contraction records (one base-node pair per eligible source component).
struct AuxGraphCore {
    int num_nodes = 0;
    std::vector<AuxEdge> edges;
    std::vector<std::pair<int, int>> contractions;  // pairs of vertex ids (u, v)
    std::vector<int> merged_into;                   // node id -> representative node id

    int representative(int node) const { return merged_into[node]; }
};

/// Partition of the auxiliary edges into alternating paths and cycles.
/// Paths and cycles list edge indices in traversal order; paths alternate
/// sides, end-class edges occur only at path ends or in 2-cycles.
struct AltDecomposition {
    std::vector<std::vector<int>> paths;
    std::vector<std::vector<int>> cycles;
};

/// Decomposes side-1 ∪ side-2 (each a matching on the contracted node set,
/// asserted) into alternating paths and cycles. Deterministic: paths start
/// at the lowest-id endpoint of degree one, cycles at the lowest remaining.
AltDecomposition decompose_core(const AuxGraphCore& aux);

/// Per-path composition counters from which the path type follows:
/// counts of side-1/side-2 edges and of end-class edges per side.
struct PathProfile {
    int side1 = 0;
    int side2 = 0;
    int end_class1 = 0;
    int end_class2 = 0;
};

PathProfile path_profile(const AuxGraphCore& aux, const std::vector<int>& path);

}  // namespace mixedforest

#endif
