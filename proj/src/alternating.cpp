// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/alternating.hpp"

#include <array>

namespace mixedforest {

AltDecomposition decompose_core(const AuxGraphCore& aux) {
    int n = aux.num_nodes;
    // Incident edge per contracted node and side; the two sides are each a
    // matching on the contracted node set.
    std::vector<std::array<int, 2>> incident(n, {-1, -1});
    for (int i = 0; i < static_cast<int>(aux.edges.size()); ++i) {
        const AuxEdge& e = aux.edges[i];
        int a = aux.representative(e.node_a);
        int b = aux.representative(e.node_b);
        internal_check(a != b, "auxiliary edge contracted to a loop");
        for (int node : {a, b}) {
            internal_check(incident[node][e.side - 1] == -1,
                           "auxiliary side is not a matching");
            incident[node][e.side - 1] = i;
        }
    }

    auto other_endpoint = [&](int edge_idx, int node) {
        const AuxEdge& e = aux.edges[edge_idx];
        int a = aux.representative(e.node_a);
        int b = aux.representative(e.node_b);
        return a == node ? b : a;
    };

    std::vector<bool> used(aux.edges.size(), false);
    AltDecomposition dec;

    // Walks from `start` along alternating unused edges until stuck (path)
    // or closed (cycle).
    auto walk = [&](int start) {
        std::vector<int> run;
        int node = start;
        while (true) {
            int next = -1;
            for (int s = 0; s < 2; ++s) {
                int idx = incident[node][s];
                if (idx != -1 && !used[idx]) {
                    next = idx;
                    break;
                }
            }
            if (next == -1) break;
            used[next] = true;
            run.push_back(next);
            node = other_endpoint(next, node);
            if (node == start && run.size() > 1) break;
        }
        return run;
    };

    auto degree = [&](int node) {
        return (incident[node][0] != -1 ? 1 : 0) + (incident[node][1] != -1 ? 1 : 0);
    };

    for (int node = 0; node < n; ++node) {
        if (degree(node) != 1) continue;
        int idx = incident[node][0] != -1 ? incident[node][0] : incident[node][1];
        if (used[idx]) continue;
        dec.paths.push_back(walk(node));
    }
    for (int node = 0; node < n; ++node) {
        for (int s = 0; s < 2; ++s) {
            int idx = incident[node][s];
            if (idx != -1 && !used[idx]) dec.cycles.push_back(walk(node));
        }
    }

    // End-class edges occur only at path ends or in 2-cycles.
    for (const auto& path : dec.paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            internal_check(!aux.edges[path[i]].end_class, "end-class edge inside a path");
    for (const auto& cycle : dec.cycles) {
        bool has_end_class = false;
        for (int idx : cycle) has_end_class = has_end_class || aux.edges[idx].end_class;
        internal_check(!has_end_class || cycle.size() == 2, "end-class edge in a long cycle");
        internal_check(cycle.size() % 2 == 0, "odd alternating cycle");
    }
    return dec;
}

PathProfile path_profile(const AuxGraphCore& aux, const std::vector<int>& path) {
    PathProfile p;
    for (int idx : path) {
        const AuxEdge& e = aux.edges[idx];
        if (e.side == 1) {
            ++p.side1;
            if (e.end_class) ++p.end_class1;
        } else {
            ++p.side2;
            if (e.end_class) ++p.end_class2;
        }
    }
    return p;
}

}  // namespace mixedforest
