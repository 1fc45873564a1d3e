// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_EXTENSIONS_HPP
#define MIXEDFOREST_EXTENSIONS_HPP

#include <vector>

#include "mixedforest/mec_equalize.hpp"
#include "mixedforest/report.hpp"
#include "mixedforest/structures.hpp"

namespace mixedforest {

/// Equalizes a family of disjoint mixed covering forests (packing: the
/// family need not cover E∪A). Bounds as for mixed edge covers.
std::vector<ElementSet> pack_covering_forests(const MixedGraph& g,
                                              std::vector<ElementSet> forests,
                                              EqualizeMode mode);

/// Digraph with a bipartition (V1, V2) such that no arc runs from V2 to V1.
struct PartitionableDigraph {
    MixedGraph digraph;  // arcs only
    VertexSet part1;
    VertexSet part2;

    PartitionableDigraph(MixedGraph d, VertexSet v1);
};

/// Every V1-vertex has a path to V2 and every V2-vertex a path from V1.
bool is_bibranching(const PartitionableDigraph& d, const ElementSet& F);

/// The associated mixed graph: crossing arcs become edges, arcs inside V1
/// are reversed, arcs inside V2 kept. Bibranchings correspond exactly to
/// mixed edge covers of the image.
struct BibranchingReduction {
    MixedGraph mixed;
    // arc index in the digraph -> element of the mixed graph
    std::vector<ElementId> image_of_arc;

    ElementSet to_mixed(const ElementSet& arcs) const;
    ElementSet to_digraph(const ElementSet& elements) const;
};

BibranchingReduction bibranching_to_mixed(const PartitionableDigraph& d);

/// Equitable partition of all arcs into k bibranchings, by transport
/// through the mixed-graph correspondence. TotalFirst: gaps
/// (total, crossing, internal) <= (1, 2, 2); EdgeFirst: (2, 1, 2), where
/// crossing arcs play the edge role.
PartitionReport equitable_partition_bibranchings(const PartitionableDigraph& d,
                                                 std::vector<ElementSet> parts,
                                                 EqualizeMode mode);

}  // namespace mixedforest

#endif
