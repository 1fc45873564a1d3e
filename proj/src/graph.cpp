// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mixedforest {

namespace {

// Union-find over vertex ids; used for underlying-cycle detection.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    // Returns false if x and y were already in the same component.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[rx] = ry;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

MixedGraph::MixedGraph(int num_vertices,
                       std::vector<std::pair<int, int>> edges,
                       std::vector<std::pair<int, int>> arcs)
    : num_vertices_(num_vertices), edges_(std::move(edges)), arcs_(std::move(arcs)) {
    if (num_vertices_ < 0 || num_vertices_ > kMaxVertices)
        throw UsageError("vertex count out of range [0, " + std::to_string(kMaxVertices) + "]");
    if (static_cast<int>(edges_.size()) > kMaxElements ||
        static_cast<int>(arcs_.size()) > kMaxElements)
        throw UsageError("element count exceeds cap of " + std::to_string(kMaxElements));
    auto check = [&](std::pair<int, int> uv, const char* what) {
        auto [u, v] = uv;
        if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_)
            throw UsageError(std::string(what) + " endpoint out of range");
        if (u == v)
            throw UsageError(std::string("loop ") + what + " rejected");
    };
    for (const auto& e : edges_) check(e, "edge");
    for (const auto& a : arcs_) check(a, "arc");
}

std::pair<int, int> MixedGraph::edge(int index) const {
    require_valid(edge_id(index));
    return edges_[index];
}

std::pair<int, int> MixedGraph::arc(int index) const {
    require_valid(arc_id(index));
    return arcs_[index];
}

void MixedGraph::require_valid(ElementId e) const {
    if (!valid(e))
        throw UsageError("invalid element id: " +
                         std::string(e.kind == ElementKind::Edge ? "edge " : "arc ") +
                         std::to_string(e.index));
}

void MixedGraph::require_valid(const ElementSet& set) const {
    for (ElementId e : set.to_vector()) require_valid(e);
}

ElementSet MixedGraph::all_elements() const {
    ElementSet s;
    for (int i = 0; i < num_edges(); ++i) s.insert(edge_id(i));
    for (int i = 0; i < num_arcs(); ++i) s.insert(arc_id(i));
    return s;
}

bool MixedGraph::incident(ElementId e, int v) const {
    require_valid(e);
    auto [a, b] = e.kind == ElementKind::Edge ? edges_[e.index] : arcs_[e.index];
    return a == v || b == v;
}

VertexSet heads(const MixedGraph& g, ElementId e) {
    g.require_valid(e);
    VertexSet h;
    if (e.kind == ElementKind::Edge) {
        auto [u, v] = g.edge(e.index);
        h.insert(u);
        h.insert(v);
    } else {
        h.insert(g.arc(e.index).second);
    }
    return h;
}

VertexSet covered(const MixedGraph& g, const ElementSet& F) {
    VertexSet c;
    for (ElementId e : F.to_vector()) c |= heads(g, e);
    return c;
}

std::vector<int> cover_counts(const MixedGraph& g, const ElementSet& F) {
    std::vector<int> counts(g.num_vertices(), 0);
    for (ElementId e : F.to_vector())
        for (int v : heads(g, e).to_vector()) ++counts[v];
    return counts;
}

bool underlying_has_cycle(const MixedGraph& g, const ElementSet& F) {
    g.require_valid(F);
    UnionFind uf(g.num_vertices());
    for (ElementId e : F.to_vector()) {
        auto [a, b] = e.kind == ElementKind::Edge ? g.edge(e.index) : g.arc(e.index);
        if (!uf.unite(a, b)) return true;
    }
    return false;
}

VertexSet reachable_from(const MixedGraph& g, const ElementSet& B, const VertexSet& sources) {
    g.require_valid(B);
    if (B.has_edges()) throw UsageError("reachable_from: arc set contains an edge");
    VertexSet reached = sources;
    bool grew = true;
    while (grew) {
        grew = false;
        for (ElementId e : B.to_vector()) {
            auto [t, h] = g.arc(e.index);
            if (reached.contains(t) && !reached.contains(h)) {
                reached.insert(h);
                grew = true;
            }
        }
    }
    return reached;
}

std::vector<VertexSet> source_components(const MixedGraph& g, const ElementSet& D) {
    g.require_valid(D);
    if (D.has_edges()) throw UsageError("source_components: arc set contains an edge");
    int n = g.num_vertices();
    std::vector<std::vector<int>> out(n);
    for (ElementId e : D.to_vector()) {
        auto [t, h] = g.arc(e.index);
        out[t].push_back(h);
    }

    // Tarjan's strongly connected components, iterative.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, num_comps = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child < out[v].size()) {
                int w = out[v][child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = num_comps;
                    } while (w != v);
                    ++num_comps;
                }
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }

    std::vector<VertexSet> members(num_comps);
    for (int v = 0; v < n; ++v) members[comp[v]].insert(v);
    std::vector<bool> has_entering(num_comps, false);
    for (ElementId e : D.to_vector()) {
        auto [t, h] = g.arc(e.index);
        if (comp[t] != comp[h]) has_entering[comp[h]] = true;
    }
    std::vector<VertexSet> sources;
    for (int c = 0; c < num_comps; ++c)
        if (!has_entering[c]) sources.push_back(members[c]);
    // Canonical order: by smallest member.
    std::sort(sources.begin(), sources.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.to_vector() < b.to_vector();
    });
    return sources;
}

}  // namespace mixedforest
