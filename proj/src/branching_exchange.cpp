// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/branching_exchange.hpp"

#include <array>
#include <functional>
#include <string>

namespace mixedforest {

void validate_exchange_request(const MixedGraph& g, const RootExchangeRequest& req) {
    if (req.branching1.intersects(req.branching2))
        throw DomainError("root exchange: branchings are not disjoint");
    VertexSet r1 = root_set(g, req.branching1);
    VertexSet r2 = root_set(g, req.branching2);
    if ((req.target_roots1 | req.target_roots2) != (r1 | r2) ||
        (req.target_roots1 & req.target_roots2) != (r1 & r2))
        throw DomainError("root exchange: targets do not preserve root union/intersection");
}

bool exchange_feasible(const MixedGraph& g, const RootExchangeRequest& req) {
    validate_exchange_request(g, req);
    ElementSet all = req.branching1 | req.branching2;
    for (const VertexSet& comp : source_components(g, all))
        if (!comp.intersects(req.target_roots1) || !comp.intersects(req.target_roots2))
            return false;
    return true;
}

std::pair<ElementSet, ElementSet> exchange_roots(const MixedGraph& g,
                                                 const RootExchangeRequest& req) {
    validate_exchange_request(g, req);
    ElementSet all = req.branching1 | req.branching2;
    for (const VertexSet& comp : source_components(g, all)) {
        if (!comp.intersects(req.target_roots1) || !comp.intersects(req.target_roots2)) {
            std::string members;
            for (int v : comp.to_vector()) members += " " + std::to_string(v);
            throw DomainError("root exchange infeasible: source component{" + members +
                              " } misses a target root set");
        }
    }

    std::vector<ElementId> arcs = all.to_vector();
    int n = g.num_vertices();
    // Required in-degree per side: 1 exactly for non-roots, 0 for roots.
    std::vector<std::array<int, 2>> demand(n);
    for (int v = 0; v < n; ++v) {
        demand[v][0] = req.target_roots1.contains(v) ? 0 : 1;
        demand[v][1] = req.target_roots2.contains(v) ? 0 : 1;
    }
    std::vector<std::array<int, 2>> indeg(n, {0, 0});
    ElementSet sides[2];
    bool found = false;
    std::pair<ElementSet, ElementSet> result;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (found) return;
        if (i == arcs.size()) {
            for (int v = 0; v < n; ++v)
                if (indeg[v][0] != demand[v][0] || indeg[v][1] != demand[v][1]) return;
            if (underlying_has_cycle(g, sides[0]) || underlying_has_cycle(g, sides[1])) return;
            result = {sides[0], sides[1]};
            found = true;
            return;
        }
        int head = g.arc(arcs[i].index).second;
        for (int s = 0; s < 2 && !found; ++s) {
            if (indeg[head][s] >= demand[head][s]) continue;
            ++indeg[head][s];
            sides[s].insert(arcs[i]);
            rec(i + 1);
            sides[s].erase(arcs[i]);
            --indeg[head][s];
        }
    };
    rec(0);
    internal_check(found, "feasible root exchange has a realization");

    // Self-validation before returning.
    internal_check(root_set(g, result.first) == req.target_roots1 &&
                       root_set(g, result.second) == req.target_roots2,
                   "root exchange output has the requested roots");
    return result;
}

}  // namespace mixedforest
