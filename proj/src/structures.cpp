// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/structures.hpp"

#include <algorithm>
#include <map>

namespace mixedforest {

std::string to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Matching: return "matching";
        case StructureKind::Branching: return "branching";
        case StructureKind::MatchingForest: return "matching-forest";
        case StructureKind::PerfectMatchingForest: return "perfect-matching-forest";
        case StructureKind::MixedEdgeCover: return "mixed-edge-cover";
        case StructureKind::MixedCoveringForest: return "mixed-covering-forest";
    }
    return "?";
}

bool is_matching(const MixedGraph& g, const ElementSet& M) {
    g.require_valid(M);
    if (M.has_arcs()) throw UsageError("is_matching: set contains an arc");
    for (int c : cover_counts(g, M))
        if (c > 1) return false;
    return true;
}

bool is_branching(const MixedGraph& g, const ElementSet& B) {
    g.require_valid(B);
    if (B.has_edges()) throw UsageError("is_branching: set contains an edge");
    for (int c : cover_counts(g, B))
        if (c > 1) return false;
    // In-degree <= 1 holds, so a directed cycle is exactly an underlying one.
    return !underlying_has_cycle(g, B);
}

VertexSet root_set(const MixedGraph& g, const ElementSet& B) {
    if (!is_branching(g, B)) throw DomainError("root_set: not a branching");
    return g.all_vertices() - covered(g, B);
}

bool is_matching_forest(const MixedGraph& g, const ElementSet& F) {
    g.require_valid(F);
    // Definition: no underlying cycle, every vertex covered at most once.
    bool by_definition = !underlying_has_cycle(g, F);
    if (by_definition)
        for (int c : cover_counts(g, F))
            if (c > 1) by_definition = false;

    // Characterization: F∩A a branching, F∩E a matching on its roots.
    ElementSet B = F.arcs_only();
    ElementSet M = F.edges_only();
    bool by_characterization = is_branching(g, B) && is_matching(g, M) &&
                               covered(g, M).is_subset_of(g.all_vertices() - covered(g, B));
    internal_check(by_definition == by_characterization,
                   "matching-forest characterizations disagree");
    return by_definition;
}

bool is_perfect_matching_forest(const MixedGraph& g, const ElementSet& F) {
    if (!is_matching_forest(g, F)) return false;
    for (int c : cover_counts(g, F))
        if (c != 1) return false;
    return true;
}

bool is_mixed_edge_cover(const MixedGraph& g, const ElementSet& F) {
    g.require_valid(F);
    VertexSet from = covered(g, F.edges_only());
    return reachable_from(g, F.arcs_only(), from) == g.all_vertices();
}

bool is_mixed_covering_forest(const MixedGraph& g, const ElementSet& F) {
    g.require_valid(F);
    if (underlying_has_cycle(g, F)) return false;
    for (int c : cover_counts(g, F))
        if (c < 1) return false;
    return true;
}

bool satisfies(const MixedGraph& g, const ElementSet& F, StructureKind kind) {
    switch (kind) {
        case StructureKind::Matching:
            return !F.has_arcs() && is_matching(g, F);
        case StructureKind::Branching:
            return !F.has_edges() && is_branching(g, F);
        case StructureKind::MatchingForest: return is_matching_forest(g, F);
        case StructureKind::PerfectMatchingForest: return is_perfect_matching_forest(g, F);
        case StructureKind::MixedEdgeCover: return is_mixed_edge_cover(g, F);
        case StructureKind::MixedCoveringForest: return is_mixed_covering_forest(g, F);
    }
    return false;
}

ElementSet minimalize_mec(const MixedGraph& g, const ElementSet& F) {
    if (!is_mixed_edge_cover(g, F)) throw DomainError("minimalize_mec: not a mixed edge cover");
    ElementSet result = F;
    // Arcs first, then edges, each in descending index. Removing arcs first
    // steers the edge part toward the star-shaped normal form.
    auto sweep = [&](ElementKind kind) {
        for (int i = kMaxElements - 1; i >= 0; --i) {
            ElementId e{kind, i};
            if (!result.contains(e)) continue;
            ElementSet without = result;
            without.erase(e);
            if (is_mixed_edge_cover(g, without)) result = without;
        }
    };
    sweep(ElementKind::Arc);
    sweep(ElementKind::Edge);
    internal_check(is_mixed_covering_forest(g, result),
                   "minimal mixed edge cover is not a covering forest");
    return result;
}

bool is_minimal_mec(const MixedGraph& g, const ElementSet& F) {
    if (!is_mixed_edge_cover(g, F)) return false;
    for (ElementId e : F.to_vector()) {
        ElementSet without = F;
        without.erase(e);
        if (is_mixed_edge_cover(g, without)) return false;
    }
    return true;
}

BranchingView mec_witness_branching(const MixedGraph& g, const ElementSet& F) {
    if (!is_mixed_edge_cover(g, F)) throw DomainError("mec_witness_branching: not a mixed edge cover");
    // Breadth-first arborescence from the contracted super-root formed by
    // the edge-covered vertices; lowest arc index breaks ties.
    VertexSet reached = covered(g, F.edges_only());
    ElementSet arcs = F.arcs_only();
    BranchingView view;
    bool grew = true;
    while (grew) {
        grew = false;
        for (ElementId e : arcs.to_vector()) {
            auto [t, h] = g.arc(e.index);
            if (reached.contains(t) && !reached.contains(h)) {
                reached.insert(h);
                view.arcs.insert(e);
                grew = true;
            }
        }
    }
    internal_check(reached == g.all_vertices(), "witness branching missed a vertex");
    view.roots = root_set(g, view.arcs);
    internal_check(view.roots.is_subset_of(covered(g, F.edges_only())),
                   "witness branching roots not edge-covered");
    return view;
}

std::vector<Star> star_decomposition(const MixedGraph& g, const ElementSet& N) {
    g.require_valid(N);
    if (N.has_arcs()) throw UsageError("star_decomposition: set contains an arc");

    // Group edges into connected components by endpoint.
    std::vector<int> comp_of(g.num_vertices(), -1);
    std::vector<ElementSet> comps;
    for (ElementId e : N.to_vector()) {
        auto [u, v] = g.edge(e.index);
        int cu = comp_of[u], cv = comp_of[v];
        int target;
        if (cu == -1 && cv == -1) {
            target = static_cast<int>(comps.size());
            comps.emplace_back();
        } else if (cu == -1 || cv == -1 || cu == cv) {
            target = std::max(cu, cv);
        } else {
            // Merge cv into cu.
            target = cu;
            comps[cu] |= comps[cv];
            for (int& c : comp_of)
                if (c == cv) c = cu;
            comps[cv] = ElementSet{};
        }
        comp_of[u] = comp_of[v] = target;
        comps[target].insert(e);
    }

    std::vector<Star> stars;
    for (const ElementSet& comp : comps) {
        if (comp.empty()) continue;
        Star star;
        star.star_edges = comp;
        // A star has a vertex incident to every edge of the component.
        std::map<int, int> degree;
        for (ElementId e : comp.to_vector()) {
            auto [u, v] = g.edge(e.index);
            ++degree[u];
            ++degree[v];
        }
        int edge_count = comp.size();
        if (edge_count != static_cast<int>(degree.size()) - 1)
            throw DomainError("star_decomposition: component is not a star");
        for (auto [v, d] : degree)
            if (d == edge_count) star.centers.push_back(v);
        if (star.centers.empty())
            throw DomainError("star_decomposition: component is not a star");
        stars.push_back(std::move(star));
    }
    return stars;
}

}  // namespace mixedforest
