// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_MEC_EQUALIZE_HPP
#define MIXEDFOREST_MEC_EQUALIZE_HPP

#include <utility>
#include <vector>

#include "mixedforest/alternating.hpp"
#include "mixedforest/report.hpp"
#include "mixedforest/structures.hpp"

namespace mixedforest {

/// For a minimal mixed edge cover: every root (= vertex covered by the
/// edge part) chooses one incident edge of N. chosen_edge[v] is the edge
/// index chosen by v, or -1 for non-roots.
struct PiChoice {
    std::vector<int> chosen_edge;
};

/// Deterministic choice (lowest incident edge index per root); domain
/// error if F is not a minimal mixed edge cover.
PiChoice choose_pi(const MixedGraph& g, const ElementSet& F);

/// Auxiliary undirected graph for two disjoint minimal mixed edge covers:
/// base nodes v^r, one split node per star-center incidence of an edge
/// chosen by exactly one endpoint, side-i matchings N*_i = N°_i ∪ N•_i,
/// and contractions per eligible source component of B1 ∪ B2.
struct AuxGraphMEC {
    AuxGraphCore core;
    int num_vertices = 0;  // base node ids are 0..num_vertices-1
    PiChoice pi1, pi2;
};

/// Row of the alternating-path type table for mixed edge covers:
/// n(P) = |P∩N*1| - |P∩N*2| and f(P) = |P∩N°2| - |P∩N°1|.
struct PathClassMEC {
    int type;  // 1..10
    int n;
    int f;
};

AuxGraphMEC build_aux_mec(const MixedGraph& g, const ElementSet& F1, const ElementSet& F2);

AltDecomposition decompose_alternating(const AuxGraphMEC& aux);

PathClassMEC classify_path_mec(const AuxGraphMEC& aux, const std::vector<int>& path);

/// Exchange along selected decomposition paths: repartitions F1 ∪ F2 into
/// two mixed edge covers whose |N| and |F| deltas follow the n and f sums.
/// The walks in the original graph may repeat vertices; the symmetric
/// difference is taken on edge identities.
std::pair<ElementSet, ElementSet> apply_paths_mec(const MixedGraph& g, const ElementSet& F1,
                                                  const ElementSet& F2, const AuxGraphMEC& aux,
                                                  const AltDecomposition& dec,
                                                  const std::vector<int>& selected_paths);

std::pair<ElementSet, ElementSet> apply_paths_mec(const MixedGraph& g, const ElementSet& F1,
                                                  const ElementSet& F2,
                                                  const std::vector<int>& selected_paths);

/// Pair equalization for disjoint mixed edge covers; the union may shrink
/// (each round first replaces non-minimal covers by minimal subsets).
/// TotalFirst: ||F'1|-|F'2|| <= 1; EdgeFirst: ||N'1|-|N'2|| <= 1; both
/// modes bound the sum of the two gaps by 2.
std::pair<ElementSet, ElementSet> equalize_pair_mec(const MixedGraph& g, const ElementSet& F1,
                                                    const ElementSet& F2, EqualizeMode mode);

/// Admissible (|N_i|-|N_j|, |F_i|-|F_j|) states after the 2-phase loop.
std::vector<std::pair<int, int>> pair_state_set(EqualizeMode mode);
bool in_pair_state_set(EqualizeMode mode, int edge_delta, int total_delta,
                       bool extended = false);

/// Distributes the uncovered edges and arcs over the parts, near-evenly,
/// smallest parts first in the mode's lexicographic order. Supersets of
/// mixed edge covers remain mixed edge covers.
std::vector<ElementSet> distribute_leftovers(const MixedGraph& g, std::vector<ElementSet> parts,
                                             EqualizeMode mode);

/// The 2-phase loop on a family of disjoint mixed edge covers (no leftover
/// distribution). Restarts phase 1 whenever a step shrinks the union. With
/// `shrink_to_covering_forests`, parts that end a pass with an underlying
/// cycle are replaced by minimal covers contained in them and the loop
/// restarts; outputs are then mixed covering forests. Pairwise
/// (|N|, |F|) deltas of the output lie in the mode's admissible state set.
std::vector<ElementSet> equalize_disjoint_mecs(const MixedGraph& g, std::vector<ElementSet> parts,
                                               EqualizeMode mode,
                                               bool shrink_to_covering_forests);

/// Two-phase k-way equalization into mixed edge covers partitioning E∪A.
/// TotalFirst: gaps (total, edge, arc) <= (1, 2, 2); EdgeFirst: (2, 1, 2).
PartitionReport equitable_partition_mec(const MixedGraph& g, std::vector<ElementSet> parts,
                                        EqualizeMode mode);

}  // namespace mixedforest

#endif
