// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_BRANCHING_EXCHANGE_HPP
#define MIXEDFOREST_BRANCHING_EXCHANGE_HPP

#include <utility>

#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Request to repartition the union of two disjoint branchings so that the
/// new root sets are exactly R1p and R2p. Targets must satisfy
/// R1p ∪ R2p = R(B1) ∪ R(B2) and R1p ∩ R2p = R(B1) ∩ R(B2).
struct RootExchangeRequest {
    ElementSet branching1;
    ElementSet branching2;
    VertexSet target_roots1;
    VertexSet target_roots2;
};

/// Validates the request invariants; domain error on violation.
void validate_exchange_request(const MixedGraph& g, const RootExchangeRequest& req);

/// True iff every source component of B1 ∪ B2 intersects both target root
/// sets, which is exactly when the repartition exists.
bool exchange_feasible(const MixedGraph& g, const RootExchangeRequest& req);

/// Repartitions B1 ∪ B2 into branchings with the requested root sets.
/// Exhaustive over arc assignments with per-head pruning; deterministic
/// (arcs in index order, branch assigning to the first branching first).
/// Domain error naming a witness source component when infeasible.
std::pair<ElementSet, ElementSet> exchange_roots(const MixedGraph& g,
                                                 const RootExchangeRequest& req);

}  // namespace mixedforest

#endif
