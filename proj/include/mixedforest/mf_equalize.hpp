// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_MF_EQUALIZE_HPP
#define MIXEDFOREST_MF_EQUALIZE_HPP

#include <utility>
#include <vector>

#include "mixedforest/alternating.hpp"
#include "mixedforest/report.hpp"
#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Auxiliary undirected graph for a pair of disjoint matching forests:
/// one base node per vertex, a bullet node per vertex left uncovered on
/// either side, side-i edges M*_i = M_i plus the side-i bullet edges, and
/// one contracted base-node pair per eligible source component of B1 ∪ B2.
struct AuxGraphMF {
    AuxGraphCore core;
    int num_vertices = 0;        // base node ids are 0..num_vertices-1
    std::vector<int> bullet_node;  // vertex -> bullet node id, -1 if none
};

/// Row of the alternating-path type table for matching forests:
/// m(P) = |P∩M1| - |P∩M2| and f(P) = |P∩M*2| - |P∩M*1|.
struct PathClassMF {
    int type;  // 1..10
    int m;
    int f;
};

AuxGraphMF build_aux_mf(const MixedGraph& g, const ElementSet& F1, const ElementSet& F2);

/// Partition of the auxiliary edges into alternating paths and cycles.
AltDecomposition decompose_alternating(const AuxGraphMF& aux);

PathClassMF classify_path_mf(const AuxGraphMF& aux, const std::vector<int>& path);

/// Exchange along the selected decomposition paths (disjoint members of
/// `dec.paths`, by index): repartitions F1 ∪ F2 into two matching forests
/// whose size deltas follow the selected paths' m and f sums exactly.
std::pair<ElementSet, ElementSet> apply_paths_mf(const MixedGraph& g, const ElementSet& F1,
                                                 const ElementSet& F2, const AuxGraphMF& aux,
                                                 const AltDecomposition& dec,
                                                 const std::vector<int>& selected_paths);

/// Convenience overload that builds the auxiliary graph and decomposition.
std::pair<ElementSet, ElementSet> apply_paths_mf(const MixedGraph& g, const ElementSet& F1,
                                                 const ElementSet& F2,
                                                 const std::vector<int>& selected_paths);

/// Pair equalization. TotalFirst: ||F'1|-|F'2|| <= 1; EdgeFirst:
/// ||M'1|-|M'2|| <= 1; both: the two gaps sum to at most 2.
std::pair<ElementSet, ElementSet> equalize_pair_mf(const MixedGraph& g, const ElementSet& F1,
                                                   const ElementSet& F2, EqualizeMode mode);

/// Two-phase k-way equalization of an initial partition into matching
/// forests. TotalFirst: gaps (total, edge, arc) <= (1, 2, 2); EdgeFirst:
/// <= (2, 1, 2), pairwise.
PartitionReport equitable_partition_mf(const MixedGraph& g, std::vector<ElementSet> parts,
                                       EqualizeMode mode);

}  // namespace mixedforest

#endif
