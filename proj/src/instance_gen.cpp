// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/instance_gen.hpp"

#include <algorithm>
#include <numeric>

#include "mixedforest/structures.hpp"

namespace mixedforest {

MixedGraph InstanceGen::random_graph(int num_vertices, int num_edges, int num_arcs) {
    if (num_vertices < 2 && num_edges + num_arcs > 0)
        throw UsageError("random_graph: elements need at least two vertices");
    std::vector<std::pair<int, int>> edges, arcs;
    auto random_pair = [&] {
        int u = rng_.below(num_vertices);
        int v = rng_.below(num_vertices - 1);
        if (v >= u) ++v;
        return std::make_pair(u, v);
    };
    for (int i = 0; i < num_edges; ++i) edges.push_back(random_pair());
    for (int i = 0; i < num_arcs; ++i) arcs.push_back(random_pair());
    return MixedGraph(num_vertices, edges, arcs);
}

MixedGraph InstanceGen::random_graph_with_cover(int max_vertices, int max_elements) {
    while (true) {
        int n = rng_.range(2, max_vertices);
        int total = rng_.range(1, max_elements);
        int num_edges = rng_.range(1, total);
        MixedGraph g = random_graph(n, num_edges, total - num_edges);
        if (is_mixed_edge_cover(g, g.all_elements())) return g;
    }
}

void InstanceGen::add_matching_forest(int n, std::vector<std::pair<int, int>>& edges,
                                      std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng_.shuffle(order);

    // A branching on a prefix-ordered vertex set plus a matching on roots.
    std::vector<bool> arc_covered(n, false);
    for (int i = 1; i < n; ++i) {
        if (rng_.below(3) != 0) continue;  // sparse
        int child = order[i];
        int parent = order[rng_.below(i)];
        arcs.emplace_back(parent, child);
        arc_covered[child] = true;
    }
    std::vector<int> roots;
    for (int v : order)
        if (!arc_covered[v]) roots.push_back(v);
    for (std::size_t i = 0; i + 1 < roots.size(); i += 2)
        if (rng_.coin()) edges.emplace_back(roots[i], roots[i + 1]);
}

void InstanceGen::add_minimal_mec(int n, std::vector<std::pair<int, int>>& edges,
                                  std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng_.shuffle(order);

    // A few disjoint star edges, then every remaining vertex hangs off the
    // reached set by one arc.
    int max_pairs = n / 2;
    int pairs = rng_.range(1, max_pairs);
    std::vector<int> reached;
    for (int i = 0; i < pairs; ++i) {
        edges.emplace_back(order[2 * i], order[2 * i + 1]);
        reached.push_back(order[2 * i]);
        reached.push_back(order[2 * i + 1]);
    }
    for (int i = 2 * pairs; i < n; ++i) {
        int tail = reached[rng_.below(static_cast<int>(reached.size()))];
        arcs.emplace_back(tail, order[i]);
        reached.push_back(order[i]);
    }
}

MixedGraph InstanceGen::random_mf_partitionable(int k, int max_vertices, int max_elements) {
    while (true) {
        int n = rng_.range(2, max_vertices);
        std::vector<std::pair<int, int>> edges, arcs;
        for (int part = 0; part < k; ++part) add_matching_forest(n, edges, arcs);
        if (static_cast<int>(edges.size() + arcs.size()) > max_elements) continue;
        if (edges.empty() && arcs.empty()) continue;
        return MixedGraph(n, edges, arcs);
    }
}

MixedGraph InstanceGen::random_mec_partitionable(int k, int max_vertices, int max_elements) {
    while (true) {
        int n = rng_.range(2, max_vertices);
        std::vector<std::pair<int, int>> edges, arcs;
        for (int part = 0; part < k; ++part) add_minimal_mec(n, edges, arcs);
        // Noise elements; any superset of a mixed edge cover still covers.
        int noise = rng_.below(3);
        for (int i = 0; i < noise; ++i) {
            int u = rng_.below(n);
            int v = rng_.below(n - 1);
            if (v >= u) ++v;
            if (rng_.coin()) edges.emplace_back(u, v);
            else arcs.emplace_back(u, v);
        }
        if (static_cast<int>(edges.size() + arcs.size()) > max_elements) continue;
        return MixedGraph(n, edges, arcs);
    }
}

InstanceGen::PackableInstance InstanceGen::random_mcf_packing(int k, int max_vertices,
                                                              int max_elements) {
    while (true) {
        int n = rng_.range(2, max_vertices);
        std::vector<std::pair<int, int>> edges, arcs;
        std::vector<std::pair<int, int>> ranges;  // (edge_end, arc_end) per part
        for (int part = 0; part < k; ++part) {
            add_minimal_mec(n, edges, arcs);
            ranges.emplace_back(static_cast<int>(edges.size()), static_cast<int>(arcs.size()));
        }
        int noise = rng_.below(3);
        for (int i = 0; i < noise; ++i) {
            int u = rng_.below(n);
            int v = rng_.below(n - 1);
            if (v >= u) ++v;
            if (rng_.coin()) edges.emplace_back(u, v);
            else arcs.emplace_back(u, v);
        }
        if (static_cast<int>(edges.size() + arcs.size()) > max_elements) continue;

        MixedGraph g(n, edges, arcs);
        PackableInstance instance{g, {}};
        int edge_begin = 0, arc_begin = 0;
        for (auto [edge_end, arc_end] : ranges) {
            ElementSet part;
            for (int i = edge_begin; i < edge_end; ++i) part.insert(edge_id(i));
            for (int i = arc_begin; i < arc_end; ++i) part.insert(arc_id(i));
            edge_begin = edge_end;
            arc_begin = arc_end;
            internal_check(is_mixed_covering_forest(g, part),
                           "constructed part is a covering forest");
            instance.forests.push_back(part);
        }
        return instance;
    }
}

InstanceGen::DigraphInstance InstanceGen::random_bibranching_partitionable(int k,
                                                                           int max_vertices,
                                                                           int max_arcs) {
    while (true) {
        int n = rng_.range(2, max_vertices);
        int size1 = rng_.range(1, n - 1);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng_.shuffle(order);
        VertexSet part1;
        for (int i = 0; i < size1; ++i) part1.insert(order[i]);

        std::vector<std::pair<int, int>> arcs;
        std::vector<int> arc_end_per_part;
        std::vector<int> v1(order.begin(), order.begin() + size1);
        std::vector<int> v2(order.begin() + size1, order.end());
        for (int part = 0; part < k; ++part) {
            rng_.shuffle(v1);
            rng_.shuffle(v2);
            // Some V1 vertices cross directly; the rest chain toward them.
            int crossing = rng_.range(1, static_cast<int>(v1.size()));
            std::vector<int> reached2;
            for (int i = 0; i < crossing; ++i) {
                int target = v2[rng_.below(static_cast<int>(v2.size()))];
                arcs.emplace_back(v1[i], target);
                reached2.push_back(target);
            }
            for (std::size_t i = crossing; i < v1.size(); ++i)
                arcs.emplace_back(v1[i], v1[rng_.below(static_cast<int>(i))]);
            for (int v : v2) {
                if (std::find(reached2.begin(), reached2.end(), v) != reached2.end()) continue;
                arcs.emplace_back(reached2[rng_.below(static_cast<int>(reached2.size()))], v);
                reached2.push_back(v);
            }
            arc_end_per_part.push_back(static_cast<int>(arcs.size()));
        }
        if (static_cast<int>(arcs.size()) > max_arcs) continue;

        MixedGraph d(n, {}, arcs);
        DigraphInstance instance{d, part1, {}};
        int begin = 0;
        for (int end : arc_end_per_part) {
            ElementSet part;
            for (int i = begin; i < end; ++i) part.insert(arc_id(i));
            begin = end;
            instance.bibranchings.push_back(part);
        }
        return instance;
    }
}

std::vector<long long> InstanceGen::random_weights(const MixedGraph& g, long long max_weight) {
    std::vector<long long> w(g.num_elements());
    for (auto& value : w) value = rng_.below(static_cast<int>(max_weight) + 1);
    return w;
}

}  // namespace mixedforest
