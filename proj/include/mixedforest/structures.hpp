// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_STRUCTURES_HPP
#define MIXEDFOREST_STRUCTURES_HPP

#include <string>
#include <vector>

#include "mixedforest/graph.hpp"

namespace mixedforest {

/// The structure families this library recognizes and partitions.
enum class StructureKind {
    Matching,
    Branching,
    MatchingForest,
    PerfectMatchingForest,
    MixedEdgeCover,
    MixedCoveringForest,
};

std::string to_string(StructureKind kind);

/// A branching (arcs, in-degree <= 1, no directed cycle) together with its
/// root set R(B) = V \ covered(B).
struct BranchingView {
    ElementSet arcs;
    VertexSet roots;
};

/// Every vertex covered at most once, edges only.
bool is_matching(const MixedGraph& g, const ElementSet& M);

/// In-degree <= 1 and no directed cycle, arcs only.
bool is_branching(const MixedGraph& g, const ElementSet& B);

/// Root set of a branching; domain error if B is not a branching.
VertexSet root_set(const MixedGraph& g, const ElementSet& B);

/// Acyclic underlying graph and every vertex covered at most once.
/// Checked both directly and via the branching-plus-matching-on-roots
/// characterization; the two must agree.
bool is_matching_forest(const MixedGraph& g, const ElementSet& F);

/// Matching forest covering every vertex exactly once.
bool is_perfect_matching_forest(const MixedGraph& g, const ElementSet& F);

/// Every vertex reachable by a directed path in F∩A (length 0 allowed)
/// from an endpoint of some edge of F∩E.
bool is_mixed_edge_cover(const MixedGraph& g, const ElementSet& F);

/// Acyclic underlying graph and every vertex covered at least once.
bool is_mixed_covering_forest(const MixedGraph& g, const ElementSet& F);

bool satisfies(const MixedGraph& g, const ElementSet& F, StructureKind kind);

/// Inclusion-minimal mixed edge cover contained in F. Scans candidates in
/// descending index, arcs before edges, so the output is deterministic.
/// Minimal mixed edge covers are also mixed covering forests.
ElementSet minimalize_mec(const MixedGraph& g, const ElementSet& F);

/// True iff F is a mixed edge cover and no single element can be removed.
bool is_minimal_mec(const MixedGraph& g, const ElementSet& F);

/// A branching B ⊆ F∩A with R(B) ⊆ covered(F∩E), built breadth-first from
/// the edge-covered vertices with lowest-index tie-breaking.
BranchingView mec_witness_branching(const MixedGraph& g, const ElementSet& F);

/// One star component of an edge set: its edges plus the admissible
/// centers (a single edge has two, larger stars exactly one).
struct Star {
    std::vector<int> centers;
    ElementSet star_edges;
};

/// Decomposes an edge set that is a disjoint union of stars; domain error
/// otherwise. The edge part of a minimal mixed edge cover always qualifies.
std::vector<Star> star_decomposition(const MixedGraph& g, const ElementSet& N);

}  // namespace mixedforest

#endif
