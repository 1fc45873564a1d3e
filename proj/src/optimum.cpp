// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/optimum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace mixedforest {

std::string MixSize::str() const {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled / 2) + ".5";
}

std::vector<std::optional<int>> dist_from_covered_edges(const MixedGraph& g) {
    std::vector<std::optional<int>> dist(g.num_vertices());
    std::deque<int> queue;
    for (int v : covered(g, g.all_edges()).to_vector()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.num_arcs(); ++i) {
            auto [t, h] = g.arc(i);
            if (t == u && !dist[h]) {
                dist[h] = *dist[u] + 1;
                queue.push_back(h);
            }
        }
    }
    return dist;
}

bool admits_mixed_edge_cover(const MixedGraph& g) {
    // Mixed edge covers are closed upward, so the whole element set decides.
    return is_mixed_edge_cover(g, g.all_elements());
}

namespace {

// Exhaustive maximum-mix-size matching forest; first maximizer in
// canonical enumeration order.
std::pair<MixSize, ElementSet> max_matching_forest_raw(const MixedGraph& g) {
    std::vector<ElementId> elements = g.all_elements().to_vector();
    ElementSet current, best;
    int best_doubled = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == elements.size()) {
            int doubled = MixSize::of(current).doubled;
            if (doubled > best_doubled) {
                best_doubled = doubled;
                best = current;
            }
            return;
        }
        current.insert(elements[i]);
        if (is_matching_forest(g, current)) rec(i + 1);
        current.erase(elements[i]);
        rec(i + 1);
    };
    rec(0);
    return {MixSize{best_doubled}, best};
}

}  // namespace

std::pair<MixSize, ElementSet> max_matching_forest(const MixedGraph& g) {
    auto [nu, forest] = max_matching_forest_raw(g);
    std::vector<std::optional<int>> dist = dist_from_covered_edges(g);

    // Shortest-path arc exchanges drive every uncovered vertex into
    // covered(E) without losing mix-size.
    while (true) {
        VertexSet uncovered = g.all_vertices() - covered(g, forest);
        int target = -1;
        for (int v : uncovered.to_vector())
            if (dist[v] && *dist[v] >= 1) {
                target = v;
                break;
            }
        if (target == -1) break;

        // Last arc of a shortest path from covered(E) to the target.
        int arc_in = -1;
        for (int i = 0; i < g.num_arcs() && arc_in == -1; ++i) {
            auto [t, h] = g.arc(i);
            if (h == target && dist[t] && *dist[t] + 1 == *dist[target]) arc_in = i;
        }
        internal_check(arc_in != -1, "shortest path has a final arc");
        int tail = g.arc(arc_in).first;

        ElementSet extended = forest;
        extended.insert(arc_id(arc_in));
        internal_check(!is_matching_forest(g, extended),
                       "adding the arc must close a cycle at a maximum forest");
        // The directed cycle enters the tail by its unique in-arc in F.
        int arc_out = -1;
        for (ElementId e : forest.arcs_only().to_vector())
            if (g.arc(e.index).second == tail) arc_out = e.index;
        internal_check(arc_out != -1, "cycle predecessor arc exists");
        extended.erase(arc_id(arc_out));
        internal_check(is_matching_forest(g, extended), "exchange keeps a matching forest");
        internal_check(MixSize::of(extended) == nu, "exchange keeps the mix-size");
        forest = extended;
    }
    return {nu, forest};
}

ElementSet mf_to_mec_cover(const MixedGraph& g, const ElementSet& max_forest) {
    if (!is_matching_forest(g, max_forest))
        throw DomainError("mf_to_mec_cover: not a matching forest");
    ElementSet cover = max_forest;
    VertexSet uncovered = g.all_vertices() - covered(g, max_forest);
    for (int v : uncovered.to_vector()) {
        int chosen = -1;
        for (int i = 0; i < g.num_edges() && chosen == -1; ++i) {
            auto [a, b] = g.edge(i);
            if (a == v || b == v) {
                int other = a == v ? b : a;
                if (uncovered.contains(other))
                    throw DomainError(
                        "mf_to_mec_cover: an edge joins two uncovered vertices, the input is "
                        "not a maximum matching forest");
                chosen = i;
            }
        }
        if (chosen == -1)
            throw DomainError("mf_to_mec_cover: uncovered vertex " + std::to_string(v) +
                              " has no incident edge");
        cover.insert(edge_id(chosen));
    }
    internal_check(is_mixed_edge_cover(g, cover), "extension is a mixed edge cover");
    internal_check(MixSize::of(cover).doubled ==
                       MixSize::of(max_forest).doubled + 2 * uncovered.size(),
                   "mix-size of the extension");
    return cover;
}

std::pair<MixSize, ElementSet> min_mixed_edge_cover(const MixedGraph& g) {
    if (!admits_mixed_edge_cover(g))
        throw DomainError("min_mixed_edge_cover: graph admits no mixed edge cover");

    std::vector<ElementId> elements = g.all_elements().to_vector();
    std::vector<ElementSet> suffix(elements.size() + 1);
    for (int i = static_cast<int>(elements.size()) - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        suffix[i].insert(elements[i]);
    }

    ElementSet current, best = g.all_elements();
    int best_doubled = MixSize::of(best).doubled;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (MixSize::of(current).doubled >= best_doubled) return;
        if (!is_mixed_edge_cover(g, current | suffix[i])) return;
        if (is_mixed_edge_cover(g, current)) {
            best_doubled = MixSize::of(current).doubled;
            best = current;
            return;
        }
        if (i == elements.size()) return;
        current.insert(elements[i]);
        rec(i + 1);
        current.erase(elements[i]);
        rec(i + 1);
    };
    rec(0);
    return {MixSize{best_doubled}, best};
}

ElementSet mec_to_mf(const MixedGraph& g, const ElementSet& minimal_cover) {
    if (!is_minimal_mec(g, minimal_cover))
        throw DomainError("mec_to_mf: not a minimal mixed edge cover");
    // All arcs belong to every maximal matching forest inside a minimal
    // cover; edges are added greedily.
    ElementSet forest = minimal_cover.arcs_only();
    internal_check(is_matching_forest(g, forest), "arc part of a minimal cover is a branching");
    for (ElementId e : minimal_cover.edges_only().to_vector()) {
        ElementSet extended = forest;
        extended.insert(e);
        if (is_matching_forest(g, extended)) forest = extended;
    }
    for (ElementId e : (minimal_cover - forest).to_vector()) {
        ElementSet extended = forest;
        extended.insert(e);
        internal_check(!is_matching_forest(g, extended), "greedy result is maximal");
    }
    internal_check(MixSize::of(forest).doubled >=
                       2 * g.num_vertices() - MixSize::of(minimal_cover).doubled,
                   "mix-size bound of the inner forest");
    return forest;
}

OptimumReport gallai_report(const MixedGraph& g) {
    auto [nu, forest] = max_matching_forest(g);
    auto [rho, cover] = min_mixed_edge_cover(g);
    internal_check(nu.doubled + rho.doubled == 2 * g.num_vertices(),
                   "Gallai identity nu + rho = |V|");
    return OptimumReport{nu, rho, forest, cover};
}

ReductionGraph build_reduction(const MixedGraph& g, const std::vector<long long>& weights) {
    if (static_cast<int>(weights.size()) != g.num_elements())
        throw UsageError("build_reduction: one weight per element required");
    for (long long w : weights)
        if (w < 0) throw UsageError("build_reduction: weights must be nonnegative");

    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges, arcs;
    std::vector<long long> edge_cost, arc_cost;

    for (int i = 0; i < g.num_edges(); ++i) {
        edges.push_back(g.edge(i));
        edge_cost.push_back(weights[i]);
    }
    // One edge vv' per vertex with an incident edge, priced at the
    // cheapest edge there. Absence stands in for an infinite cost.
    for (int v = 0; v < n; ++v) {
        long long cheapest = -1;
        for (int i = 0; i < g.num_edges(); ++i) {
            auto [a, b] = g.edge(i);
            if (a == v || b == v)
                if (cheapest < 0 || weights[i] < cheapest) cheapest = weights[i];
        }
        if (cheapest >= 0) {
            edges.emplace_back(v, n + v);
            edge_cost.push_back(cheapest);
        }
    }
    for (int i = 0; i < g.num_arcs(); ++i) {
        arcs.push_back(g.arc(i));
        arc_cost.push_back(weights[g.num_edges() + i]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            arcs.emplace_back(u, n + v);
            arc_cost.push_back(0);
        }

    ReductionGraph reduction{MixedGraph(2 * n, edges, arcs), {}, n, g.num_edges(), g.num_arcs()};
    reduction.cost = std::move(edge_cost);
    reduction.cost.insert(reduction.cost.end(), arc_cost.begin(), arc_cost.end());
    return reduction;
}

long long ReductionGraph::cost_of(ElementId e) const {
    if (e.kind == ElementKind::Edge) return cost.at(e.index);
    return cost.at(graph.num_edges() + e.index);
}

ElementSet ReductionGraph::original_part(const ElementSet& F) const {
    ElementSet out;
    for (ElementId e : F.to_vector()) {
        if (e.kind == ElementKind::Edge && e.index < original_edges) out.insert(e);
        if (e.kind == ElementKind::Arc && e.index < original_arcs) out.insert(e);
    }
    return out;
}

namespace {

// Union-find with rollback; no path compression.
class RewindableUnionFind {
public:
    explicit RewindableUnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        history_.push_back(ry);
        return true;
    }
    std::size_t mark() const { return history_.size(); }
    void rewind(std::size_t mark) {
        while (history_.size() > mark) {
            int child = history_.back();
            history_.pop_back();
            size_[find(child)] -= size_[child];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

}  // namespace

std::optional<std::pair<long long, ElementSet>> min_cost_perfect_matching_forest(
    const MixedGraph& g, const std::vector<long long>& cost) {
    if (static_cast<int>(cost.size()) != g.num_elements())
        throw UsageError("min_cost_perfect_matching_forest: one cost per element required");
    int n = g.num_vertices();

    // Elements covering each vertex, in canonical order.
    std::vector<std::vector<ElementId>> covering(n);
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [u, v] = g.edge(i);
        covering[u].push_back(edge_id(i));
        covering[v].push_back(edge_id(i));
    }
    for (int i = 0; i < g.num_arcs(); ++i) covering[g.arc(i).second].push_back(arc_id(i));

    auto cost_of = [&](ElementId e) {
        return e.kind == ElementKind::Edge ? cost[e.index] : cost[g.num_edges() + e.index];
    };

    RewindableUnionFind uf(n);
    std::vector<bool> vertex_covered(n, false);
    ElementSet current, best;
    long long best_cost = std::numeric_limits<long long>::max();
    bool found = false;

    // Covers vertices in index order; each branch picks the covering
    // element of the lowest uncovered vertex.
    std::function<void(int, long long)> rec = [&](int v, long long acc) {
        if (acc >= best_cost) return;
        while (v < n && vertex_covered[v]) ++v;
        if (v == n) {
            best_cost = acc;
            best = current;
            found = true;
            return;
        }
        for (ElementId e : covering[v]) {
            if (current.contains(e)) continue;
            auto [a, b] = e.kind == ElementKind::Edge ? g.edge(e.index) : g.arc(e.index);
            int other_head = -1;
            if (e.kind == ElementKind::Edge) other_head = a == v ? b : a;
            if (other_head != -1 && vertex_covered[other_head]) continue;
            if (uf.find(a) == uf.find(b)) continue;

            std::size_t mark = uf.mark();
            uf.unite(a, b);
            vertex_covered[v] = true;
            if (other_head != -1) vertex_covered[other_head] = true;
            current.insert(e);
            rec(v + 1, acc + cost_of(e));
            current.erase(e);
            vertex_covered[v] = false;
            if (other_head != -1) vertex_covered[other_head] = false;
            uf.rewind(mark);
        }
    };
    rec(0, 0);
    if (!found) return std::nullopt;
    internal_check(is_perfect_matching_forest(g, best), "solver output is a perfect forest");
    return std::make_pair(best_cost, best);
}

std::pair<long long, ElementSet> min_weight_mec(const MixedGraph& g,
                                                const std::vector<long long>& weights) {
    if (!admits_mixed_edge_cover(g)) throw DomainError("min_weight_mec: graph admits no cover");
    ReductionGraph reduction = build_reduction(g, weights);
    auto solved = min_cost_perfect_matching_forest(reduction.graph, reduction.cost);
    internal_check(solved.has_value(), "reduction graph has a perfect matching forest");
    auto [pmf_cost, pmf] = *solved;

    // Back-map: vv' edges become the cheapest original edge at v, the
    // completion arcs into the copies are dropped.
    ElementSet cover = reduction.original_part(pmf);
    int n = g.num_vertices();
    for (ElementId e : pmf.to_vector()) {
        if (e.kind != ElementKind::Edge || e.index < reduction.original_edges) continue;
        int v = reduction.graph.edge(e.index).first;
        internal_check(reduction.graph.edge(e.index).second == n + v, "vv' edge shape");
        int chosen = -1;
        long long chosen_weight = -1;
        for (int i = 0; i < g.num_edges(); ++i) {
            auto [a, b] = g.edge(i);
            if (a != v && b != v) continue;
            if (chosen == -1 || weights[i] < chosen_weight) {
                chosen = i;
                chosen_weight = weights[i];
            }
        }
        internal_check(chosen != -1, "vv' edge exists only when v has an edge");
        cover.insert(edge_id(chosen));
    }
    internal_check(is_mixed_edge_cover(g, cover), "back-mapped set is a mixed edge cover");

    long long weight = 0;
    for (ElementId e : cover.to_vector())
        weight += e.kind == ElementKind::Edge ? weights[e.index] : weights[g.num_edges() + e.index];
    // Both optima coincide, so the back-mapped weight matches exactly.
    internal_check(weight == pmf_cost, "back-mapped weight equals the reduction optimum");
    return {weight, cover};
}

}  // namespace mixedforest
