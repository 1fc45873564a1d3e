// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/extensions.hpp"

#include <algorithm>

namespace mixedforest {

std::vector<ElementSet> pack_covering_forests(const MixedGraph& g,
                                              std::vector<ElementSet> forests,
                                              EqualizeMode mode) {
    if (forests.empty()) throw DomainError("pack_covering_forests: empty family");
    ElementSet seen;
    for (const ElementSet& part : forests) {
        if (!is_mixed_covering_forest(g, part))
            throw DomainError("pack_covering_forests: part is not a mixed covering forest");
        if (seen.intersects(part)) throw DomainError("pack_covering_forests: parts overlap");
        seen |= part;
    }

    forests = equalize_disjoint_mecs(g, std::move(forests), mode,
                                     /*shrink_to_covering_forests=*/true);

    ElementSet out;
    for (const ElementSet& part : forests) {
        internal_check(is_mixed_covering_forest(g, part), "outputs are covering forests");
        internal_check(!out.intersects(part), "outputs disjoint");
        out |= part;
    }
    return forests;
}

PartitionableDigraph::PartitionableDigraph(MixedGraph d, VertexSet v1)
    : digraph(std::move(d)), part1(v1), part2(digraph.all_vertices() - v1) {
    if (digraph.num_edges() > 0)
        throw UsageError("partitionable digraph must not contain undirected edges");
    for (int i = 0; i < digraph.num_arcs(); ++i) {
        auto [t, h] = digraph.arc(i);
        if (part2.contains(t) && part1.contains(h))
            throw DomainError("arc from V2 to V1 violates partitionability");
    }
}

bool is_bibranching(const PartitionableDigraph& d, const ElementSet& F) {
    d.digraph.require_valid(F);
    if (F.has_edges()) throw UsageError("is_bibranching: set contains an edge");
    // V1 -> v paths for v in V2: forward reachability from V1.
    VertexSet forward = reachable_from(d.digraph, F, d.part1);
    if (!d.part2.is_subset_of(forward)) return false;
    // v -> V2 paths for v in V1: reachability in the reversed digraph.
    std::vector<std::pair<int, int>> reversed;
    for (int i = 0; i < d.digraph.num_arcs(); ++i) {
        auto [t, h] = d.digraph.arc(i);
        reversed.emplace_back(h, t);
    }
    MixedGraph rg(d.digraph.num_vertices(), {}, reversed);
    VertexSet backward = reachable_from(rg, F, d.part2);
    return d.part1.is_subset_of(backward);
}

BibranchingReduction bibranching_to_mixed(const PartitionableDigraph& d) {
    std::vector<std::pair<int, int>> edges, arcs;
    std::vector<ElementId> image;
    for (int i = 0; i < d.digraph.num_arcs(); ++i) {
        auto [t, h] = d.digraph.arc(i);
        if (d.part1.contains(t) && d.part2.contains(h)) {
            image.push_back(edge_id(static_cast<int>(edges.size())));
            edges.emplace_back(t, h);
        } else if (d.part1.contains(t) && d.part1.contains(h)) {
            // Reversed, so that reaching V2 in the digraph becomes being
            // reached from the crossing edges in the mixed graph.
            image.push_back(arc_id(static_cast<int>(arcs.size())));
            arcs.emplace_back(h, t);
        } else {
            image.push_back(arc_id(static_cast<int>(arcs.size())));
            arcs.emplace_back(t, h);
        }
    }
    return BibranchingReduction{MixedGraph(d.digraph.num_vertices(), edges, arcs),
                                std::move(image)};
}

ElementSet BibranchingReduction::to_mixed(const ElementSet& arcs) const {
    ElementSet out;
    for (ElementId e : arcs.to_vector()) {
        if (e.kind != ElementKind::Arc) throw UsageError("bibranching sets contain arcs only");
        out.insert(image_of_arc.at(e.index));
    }
    return out;
}

ElementSet BibranchingReduction::to_digraph(const ElementSet& elements) const {
    ElementSet out;
    for (int i = 0; i < static_cast<int>(image_of_arc.size()); ++i)
        if (elements.contains(image_of_arc[i])) out.insert(arc_id(i));
    return out;
}

PartitionReport equitable_partition_bibranchings(const PartitionableDigraph& d,
                                                 std::vector<ElementSet> parts,
                                                 EqualizeMode mode) {
    if (parts.empty()) throw DomainError("equitable_partition_bibranchings: empty partition");
    ElementSet seen;
    for (const ElementSet& part : parts) {
        if (!is_bibranching(d, part))
            throw DomainError("equitable_partition_bibranchings: part is not a bibranching");
        if (seen.intersects(part))
            throw DomainError("equitable_partition_bibranchings: parts are not disjoint");
        seen |= part;
    }
    if (seen != d.digraph.all_elements())
        throw DomainError("equitable_partition_bibranchings: parts do not cover all arcs");

    BibranchingReduction reduction = bibranching_to_mixed(d);
    std::vector<ElementSet> mixed_parts;
    for (const ElementSet& part : parts) {
        ElementSet image = reduction.to_mixed(part);
        internal_check(is_mixed_edge_cover(reduction.mixed, image),
                       "bibranching maps to a mixed edge cover");
        // Size statistics transport exactly: crossing arcs <-> edges.
        internal_check(image.edge_count() + image.arc_count() == part.size(),
                       "correspondence preserves sizes");
        mixed_parts.push_back(image);
    }

    PartitionReport mixed_report = equitable_partition_mec(reduction.mixed, mixed_parts, mode);

    std::vector<ElementSet> out;
    for (const ElementSet& image : mixed_report.parts) {
        ElementSet part = reduction.to_digraph(image);
        internal_check(is_bibranching(d, part), "mixed edge cover maps back to a bibranching");
        out.push_back(part);
    }

    // Rebuild the report in digraph terms; the gap statistics carry over
    // because |N_i| is the crossing-arc count and |B_i| the internal count.
    PartitionReport report = mixed_report;
    report.parts = out;
    return report;
}

}  // namespace mixedforest
