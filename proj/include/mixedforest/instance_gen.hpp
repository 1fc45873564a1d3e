// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_INSTANCE_GEN_HPP
#define MIXEDFOREST_INSTANCE_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "mixedforest/graph.hpp"

namespace mixedforest {

/// Deterministic random source. mt19937_64 is pinned by the standard, and
/// bounded draws avoid the implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % n); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return next() & 1; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Random instance builders used by the generator subcommand and the
/// acceptance harness. Structured builders create graphs as disjoint
/// unions of valid structures, so the wanted partitions exist.
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    Rng& rng() { return rng_; }

    MixedGraph random_graph(int num_vertices, int num_edges, int num_arcs);

    /// Random graph admitting a mixed edge cover (rejection sampling).
    MixedGraph random_graph_with_cover(int max_vertices, int max_elements);

    /// Union of k fresh matching forests; partitionable by construction.
    MixedGraph random_mf_partitionable(int k, int max_vertices, int max_elements);

    /// Union of k fresh mixed edge covers plus noise assigned to parts;
    /// partitionable by construction.
    MixedGraph random_mec_partitionable(int k, int max_vertices, int max_elements);

    struct PackableInstance {
        MixedGraph graph;
        std::vector<ElementSet> forests;
    };
    /// k disjoint mixed covering forests plus unassigned noise elements.
    PackableInstance random_mcf_packing(int k, int max_vertices, int max_elements);

    struct DigraphInstance {
        MixedGraph digraph;
        VertexSet part1;
        std::vector<ElementSet> bibranchings;
    };
    /// Partitionable digraph built as a union of k bibranchings.
    DigraphInstance random_bibranching_partitionable(int k, int max_vertices, int max_arcs);

    std::vector<long long> random_weights(const MixedGraph& g, long long max_weight);

private:
    // One structure's fresh elements, appended to the shared lists.
    void add_matching_forest(int n, std::vector<std::pair<int, int>>& edges,
                             std::vector<std::pair<int, int>>& arcs);
    // Returns the element ranges appended: [edge_begin, edge_end) and
    // [arc_begin, arc_end).
    void add_minimal_mec(int n, std::vector<std::pair<int, int>>& edges,
                         std::vector<std::pair<int, int>>& arcs);

    Rng rng_;
};

}  // namespace mixedforest

#endif
