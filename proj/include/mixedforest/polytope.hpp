// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_POLYTOPE_HPP
#define MIXEDFOREST_POLYTOPE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Ordered list of pairwise disjoint nonempty vertex classes.
struct Subpartition {
    std::vector<VertexSet> classes;

    VertexSet union_of() const {
        VertexSet u;
        for (const VertexSet& z : classes) u |= z;
        return u;
    }
    int size() const { return static_cast<int>(classes.size()); }
    bool odd() const { return size() % 2 == 1; }
};

/// Integer value per element of E∪A, edges first then arcs.
using IncidenceVector = std::vector<int>;

IncidenceVector indicator_vector(const MixedGraph& g, const ElementSet& F);

inline constexpr int kSubpartitionVertexCap = 5;

/// Every subpartition of V exactly once, classes in canonical order
/// (sorted by smallest member). Usage error above the vertex cap.
std::vector<Subpartition> enumerate_subpartitions(const MixedGraph& g);

void for_each_subpartition(const MixedGraph& g,
                           const std::function<void(const Subpartition&)>& visit);

/// Outcome of a constraint-system check; `violation` describes the first
/// failed constraint when unsatisfied.
struct SystemCheck {
    bool satisfied = true;
    std::string violation;

    explicit operator bool() const { return satisfied; }
};

/// Matching forest system: x >= 0, x(delta_head(v)) <= 1, and for every
/// subpartition S: x(E[∪S]) + sum_Z x(A[Z]) <= |∪S| - ceil(|S|/2).
SystemCheck mf_system_check(const MixedGraph& g, const IncidenceVector& x);

/// Perfect matching forest system: x >= 0, x(delta_head(v)) = 1, and
/// x(E[∪S]) + x(delta_E(∪S)) + sum_Z x(delta_in_A(Z)) >= ceil(|S|/2).
SystemCheck pmf_system_check(const MixedGraph& g, const IncidenceVector& x);

/// Mixed edge cover system: 0 <= x <= 1 with the same subpartition
/// left-hand sides >= ceil(|S|/2).
SystemCheck mec_system_check(const MixedGraph& g, const IncidenceVector& x);

inline constexpr int kHullVertexCap = 5;
inline constexpr int kHullElementCap = 10;

/// Exact hull equivalence on a capped instance: the integer vectors
/// satisfying the system are exactly the indicator vectors of the family.
/// Supported kinds: MatchingForest, PerfectMatchingForest, MixedEdgeCover.
bool verify_integer_hull(const MixedGraph& g, StructureKind kind);

}  // namespace mixedforest

#endif
