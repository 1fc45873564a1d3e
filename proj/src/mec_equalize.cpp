// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/mec_equalize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "mixedforest/branching_exchange.hpp"

namespace mixedforest {

namespace {

// Alternating-path type table for mixed edge covers; index is the type.
constexpr int kTypeN[11] = {0, 1, 1, 1, -1, -1, -1, 0, 0, 0, 0};
constexpr int kTypeF[11] = {0, 1, 0, -1, -1, 0, 1, 0, 1, -1, 0};

}  // namespace

PiChoice choose_pi(const MixedGraph& g, const ElementSet& F) {
    if (!is_minimal_mec(g, F)) throw DomainError("choose_pi: not a minimal mixed edge cover");
    ElementSet N = F.edges_only();
    VertexSet roots = root_set(g, F.arcs_only());
    internal_check(roots == covered(g, N), "minimal cover roots equal edge-covered vertices");

    PiChoice pi;
    pi.chosen_edge.assign(g.num_vertices(), -1);
    for (ElementId e : N.to_vector()) {
        auto [u, v] = g.edge(e.index);
        for (int w : {u, v})
            if (pi.chosen_edge[w] == -1) pi.chosen_edge[w] = e.index;
    }
    // Every edge of N is chosen by at least one endpoint: the endpoint
    // covered only by that edge has no other choice.
    for (ElementId e : N.to_vector()) {
        auto [u, v] = g.edge(e.index);
        internal_check(pi.chosen_edge[u] == e.index || pi.chosen_edge[v] == e.index,
                       "every edge chosen by an endpoint");
    }
    return pi;
}

AuxGraphMEC build_aux_mec(const MixedGraph& g, const ElementSet& F1, const ElementSet& F2) {
    if (F1.intersects(F2)) throw DomainError("build_aux_mec: inputs are not disjoint");
    if (!is_minimal_mec(g, F1) || !is_minimal_mec(g, F2))
        throw DomainError("build_aux_mec: input is not a minimal mixed edge cover");

    int n = g.num_vertices();
    AuxGraphMEC aux;
    aux.num_vertices = n;
    aux.pi1 = choose_pi(g, F1);
    aux.pi2 = choose_pi(g, F2);

    const ElementSet N[2] = {F1.edges_only(), F2.edges_only()};
    const ElementSet B[2] = {F1.arcs_only(), F2.arcs_only()};
    const PiChoice* pi[2] = {&aux.pi1, &aux.pi2};
    VertexSet roots[2];
    for (int i = 0; i < 2; ++i) roots[i] = root_set(g, B[i]);

    int next_node = n;
    int round_count[2] = {0, 0};
    for (int i = 0; i < 2; ++i) {
        for (ElementId e : N[i].to_vector()) {
            auto [u, v] = g.edge(e.index);
            bool u_chose = pi[i]->chosen_edge[u] == e.index;
            bool v_chose = pi[i]->chosen_edge[v] == e.index;
            internal_check(u_chose || v_chose, "unchosen edge in star decomposition");
            if (u_chose && v_chose) {
                aux.core.edges.push_back(AuxEdge{i + 1, u, v, e, false});
                ++round_count[i];
            } else {
                // Split the non-choosing endpoint (a star center): the edge
                // runs from the chooser's base node to a private split node.
                int chooser = u_chose ? u : v;
                aux.core.edges.push_back(AuxEdge{i + 1, chooser, next_node++, e, true});
            }
        }
    }
    aux.core.num_nodes = next_node;

    aux.core.merged_into.resize(next_node);
    std::iota(aux.core.merged_into.begin(), aux.core.merged_into.end(), 0);
    for (const VertexSet& comp : source_components(g, B[0] | B[1])) {
        VertexSet only1 = comp & (roots[0] - roots[1]);
        VertexSet only2 = comp & (roots[1] - roots[0]);
        if (only1.empty() || only2.empty()) continue;
        int u = only1.to_vector().front();
        int v = only2.to_vector().front();
        aux.core.contractions.emplace_back(u, v);
        aux.core.merged_into[v] = u;
    }

    // Counting identities: |R_i| = 2|N°_i| + |N•_i| and |F_i| = |V| - |N°_i|.
    for (int i = 0; i < 2; ++i) {
        int split_count = N[i].size() - round_count[i];
        internal_check(roots[i].size() == 2 * round_count[i] + split_count,
                       "root count identity |R| = 2|N°| + |N•|");
        internal_check((i == 0 ? F1 : F2).size() == n - round_count[i],
                       "size identity |F| = |V| - |N°|");
    }
    return aux;
}

AltDecomposition decompose_alternating(const AuxGraphMEC& aux) { return decompose_core(aux.core); }

PathClassMEC classify_path_mec(const AuxGraphMEC& aux, const std::vector<int>& path) {
    PathProfile p = path_profile(aux.core, path);
    int type;
    if (p.side1 == p.side2 + 1) {
        internal_check(p.end_class2 == 0, "side-1-ended path with interior split edge");
        type = p.end_class1 == 2 ? 1 : p.end_class1 == 1 ? 2 : 3;
    } else if (p.side2 == p.side1 + 1) {
        internal_check(p.end_class1 == 0, "side-2-ended path with interior split edge");
        type = p.end_class2 == 2 ? 4 : p.end_class2 == 1 ? 5 : 6;
    } else {
        internal_check(p.side1 == p.side2, "path side counts differ by more than one");
        if (p.end_class1 == 1 && p.end_class2 == 1) type = 7;
        else if (p.end_class1 == 1 && p.end_class2 == 0) type = 8;
        else if (p.end_class1 == 0 && p.end_class2 == 1) type = 9;
        else type = 10;
    }
    PathClassMEC cls{type, kTypeN[type], kTypeF[type]};
    int value_n = p.side1 - p.side2;
    int value_f = (p.side2 - p.end_class2) - (p.side1 - p.end_class1);
    internal_check(value_n == cls.n && value_f == cls.f,
                   "path values disagree with the type table");
    return cls;
}

std::pair<ElementSet, ElementSet> apply_paths_mec(const MixedGraph& g, const ElementSet& F1,
                                                  const ElementSet& F2, const AuxGraphMEC& aux,
                                                  const AltDecomposition& dec,
                                                  const std::vector<int>& selected_paths) {
    std::vector<bool> selected(dec.paths.size(), false);
    for (int idx : selected_paths) {
        if (idx < 0 || idx >= static_cast<int>(dec.paths.size()))
            throw UsageError("apply_paths_mec: path index out of range");
        if (selected[idx]) throw UsageError("apply_paths_mec: duplicate path selected");
        selected[idx] = true;
    }

    std::vector<bool> on_path(aux.core.edges.size(), false);
    int sum_n = 0, sum_f = 0;
    for (int idx : selected_paths) {
        PathClassMEC cls = classify_path_mec(aux, dec.paths[idx]);
        sum_n += cls.n;
        sum_f += cls.f;
        for (int e : dec.paths[idx]) on_path[e] = true;
    }

    ElementSet new_n1 = F1.edges_only();
    ElementSet new_n2 = F2.edges_only();
    VertexSet new_roots1, new_roots2;
    for (std::size_t i = 0; i < aux.core.edges.size(); ++i) {
        const AuxEdge& e = aux.core.edges[i];
        int side_after = on_path[i] ? 3 - e.side : e.side;
        if (on_path[i]) {
            // The walk in the original graph swaps this edge's side; the
            // symmetric difference is on edge identities.
            if (e.side == 1) {
                new_n1.erase(*e.element);
                new_n2.insert(*e.element);
            } else {
                new_n2.erase(*e.element);
                new_n1.insert(*e.element);
            }
        }
        VertexSet& target = side_after == 1 ? new_roots1 : new_roots2;
        for (int node : {e.node_a, e.node_b})
            if (node < aux.num_vertices) target.insert(node);
    }

    internal_check(new_n1.size() - new_n2.size() ==
                       F1.edge_count() - F2.edge_count() - 2 * sum_n,
                   "edge-count exchange identity");

    VertexSet roots1 = root_set(g, F1.arcs_only());
    VertexSet roots2 = root_set(g, F2.arcs_only());
    internal_check(new_roots1.size() - new_roots2.size() ==
                       roots1.size() - roots2.size() - 2 * sum_n + 2 * sum_f,
                   "root-count exchange identity");
    internal_check(new_roots1.is_subset_of(covered(g, new_n1)) &&
                       new_roots2.is_subset_of(covered(g, new_n2)),
                   "new roots are edge-covered");

    RootExchangeRequest req{F1.arcs_only(), F2.arcs_only(), new_roots1, new_roots2};
    bool feasible = false;
    try {
        feasible = exchange_feasible(g, req);
    } catch (const DomainError&) {
        feasible = false;
    }
    internal_check(feasible, "contractions guarantee a feasible root exchange");
    auto [new_b1, new_b2] = exchange_roots(g, req);

    ElementSet out1 = new_n1 | new_b1;
    ElementSet out2 = new_n2 | new_b2;
    internal_check(is_mixed_edge_cover(g, out1) && is_mixed_edge_cover(g, out2),
                   "exchange outputs are mixed edge covers");
    internal_check(!out1.intersects(out2) && (out1 | out2) == (F1 | F2),
                   "exchange outputs partition the union");
    internal_check(out1.size() - out2.size() == F1.size() - F2.size() - 2 * sum_f,
                   "total-count exchange identity");
    return {out1, out2};
}

std::pair<ElementSet, ElementSet> apply_paths_mec(const MixedGraph& g, const ElementSet& F1,
                                                  const ElementSet& F2,
                                                  const std::vector<int>& selected_paths) {
    AuxGraphMEC aux = build_aux_mec(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    return apply_paths_mec(g, F1, F2, aux, dec, selected_paths);
}

namespace {

std::optional<std::vector<int>> pick_paths(const std::vector<int>& types,
                                           const std::vector<int>& wanted) {
    std::vector<int> picked;
    for (int want : wanted) {
        bool found = false;
        for (int i = 0; i < static_cast<int>(types.size()) && !found; ++i) {
            if (types[i] == want &&
                std::find(picked.begin(), picked.end(), i) == picked.end()) {
                picked.push_back(i);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return picked;
}

std::vector<int> classified_types(const MixedGraph& g, const ElementSet& F1,
                                  const ElementSet& F2, const AuxGraphMEC& aux,
                                  const AltDecomposition& dec) {
    std::vector<int> types;
    int sum_n = 0, sum_f = 0;
    for (const auto& path : dec.paths) {
        PathClassMEC cls = classify_path_mec(aux, path);
        types.push_back(cls.type);
        sum_n += cls.n;
        sum_f += cls.f;
    }
    internal_check(sum_n == F1.edge_count() - F2.edge_count(), "sum of n(P) over paths");
    internal_check(sum_f == F1.size() - F2.size(), "sum of f(P) over paths");
    return types;
}

// Operations 1/2 on minimal covers: reduces |N1|-|N2| by exactly 2.
std::pair<ElementSet, ElementSet> op_reduce_edge_gap_ordered(const MixedGraph& g,
                                                             const ElementSet& F1,
                                                             const ElementSet& F2) {
    int edge_gap = F1.edge_count() - F2.edge_count();
    int total_gap = F1.size() - F2.size();
    internal_check(edge_gap > 0, "operation applied with wrong sign");

    AuxGraphMEC aux = build_aux_mec(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    std::vector<int> types = classified_types(g, F1, F2, aux, dec);

    std::vector<std::vector<int>> preferences;
    if (total_gap >= 0)
        preferences = {{1}, {2}, {3, 8}};  // Operation 1
    else
        preferences = {{2}, {3}, {1, 9}};  // Operation 2

    for (const auto& wanted : preferences)
        if (auto picked = pick_paths(types, wanted))
            return apply_paths_mec(g, F1, F2, aux, dec, *picked);
    throw InternalError("no realizing path set for edge-gap operation");
}

// Operations 3/4 on minimal covers: reduces |F1|-|F2| by exactly 2.
std::pair<ElementSet, ElementSet> op_reduce_total_gap_ordered(const MixedGraph& g,
                                                              const ElementSet& F1,
                                                              const ElementSet& F2) {
    int edge_gap = F1.edge_count() - F2.edge_count();
    int total_gap = F1.size() - F2.size();
    internal_check(total_gap > 0, "operation applied with wrong sign");

    AuxGraphMEC aux = build_aux_mec(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    std::vector<int> types = classified_types(g, F1, F2, aux, dec);

    std::vector<std::vector<int>> preferences;
    if (edge_gap >= 0)
        preferences = {{1}, {8}, {2, 6}};  // Operation 3
    else
        preferences = {{6}, {8}, {1, 5}};  // Operation 4

    for (const auto& wanted : preferences)
        if (auto picked = pick_paths(types, wanted))
            return apply_paths_mec(g, F1, F2, aux, dec, *picked);
    throw InternalError("no realizing path set for total-gap operation");
}

std::pair<ElementSet, ElementSet> op_reduce_edge_gap(const MixedGraph& g, const ElementSet& F1,
                                                     const ElementSet& F2) {
    if (F1.edge_count() > F2.edge_count()) return op_reduce_edge_gap_ordered(g, F1, F2);
    auto [b, a] = op_reduce_edge_gap_ordered(g, F2, F1);
    return {a, b};
}

std::pair<ElementSet, ElementSet> op_reduce_total_gap(const MixedGraph& g, const ElementSet& F1,
                                                      const ElementSet& F2) {
    if (F1.size() > F2.size()) return op_reduce_total_gap_ordered(g, F1, F2);
    auto [b, a] = op_reduce_total_gap_ordered(g, F2, F1);
    return {a, b};
}

using Triple = std::tuple<int, int, int>;

Triple termination_triple(const ElementSet& a, const ElementSet& b, EqualizeMode mode) {
    int edge_gap = std::abs(a.edge_count() - b.edge_count());
    int total_gap = std::abs(a.size() - b.size());
    if (mode == EqualizeMode::TotalFirst)
        return {(a | b).size(), std::max(edge_gap, 2), total_gap};
    return {(a | b).size(), std::max(total_gap, 2), edge_gap};
}

}  // namespace

std::pair<ElementSet, ElementSet> equalize_pair_mec(const MixedGraph& g, const ElementSet& F1,
                                                    const ElementSet& F2, EqualizeMode mode) {
    if (F1.intersects(F2)) throw DomainError("equalize_pair_mec: inputs are not disjoint");
    if (!is_mixed_edge_cover(g, F1) || !is_mixed_edge_cover(g, F2))
        throw DomainError("equalize_pair_mec: input is not a mixed edge cover");

    ElementSet a = F1, b = F2;
    int guard = 4 * (a.size() + b.size()) + 16;
    while (guard-- > 0) {
        // Each round first restores minimality; operations assume it.
        ElementSet min_a = minimalize_mec(g, a);
        ElementSet min_b = minimalize_mec(g, b);
        bool shrank = min_a != a || min_b != b;
        Triple before = termination_triple(min_a, min_b, mode);
        if (shrank)
            internal_check(before < termination_triple(a, b, mode), "shrinking decreases measure");
        a = min_a;
        b = min_b;

        int edge_gap = std::abs(a.edge_count() - b.edge_count());
        int total_gap = std::abs(a.size() - b.size());
        if (mode == EqualizeMode::TotalFirst) {
            if (edge_gap > 2) std::tie(a, b) = op_reduce_edge_gap(g, a, b);
            else if (total_gap > 1) std::tie(a, b) = op_reduce_total_gap(g, a, b);
            else break;
        } else {
            if (total_gap > 2) std::tie(a, b) = op_reduce_total_gap(g, a, b);
            else if (edge_gap > 1) std::tie(a, b) = op_reduce_edge_gap(g, a, b);
            else break;
        }
        internal_check(termination_triple(a, b, mode) < before,
                       "operation decreases the termination measure");
    }
    internal_check(guard > 0, "pair equalization did not terminate");

    // Boundary case: one more operation brings the gap sum down to 2.
    int edge_gap = std::abs(a.edge_count() - b.edge_count());
    int total_gap = std::abs(a.size() - b.size());
    if (mode == EqualizeMode::TotalFirst && edge_gap == 2 && total_gap == 1)
        std::tie(a, b) = op_reduce_edge_gap(g, a, b);
    if (mode == EqualizeMode::EdgeFirst && total_gap == 2 && edge_gap == 1)
        std::tie(a, b) = op_reduce_total_gap(g, a, b);

    edge_gap = std::abs(a.edge_count() - b.edge_count());
    total_gap = std::abs(a.size() - b.size());
    if (mode == EqualizeMode::TotalFirst)
        internal_check(total_gap <= 1 && edge_gap + total_gap <= 2, "pair lemma bounds");
    else
        internal_check(edge_gap <= 1 && edge_gap + total_gap <= 2, "pair lemma bounds");
    internal_check((a | b).is_subset_of(F1 | F2) && !a.intersects(b),
                   "outputs are disjoint subsets of the input union");
    return {a, b};
}

std::vector<std::pair<int, int>> pair_state_set(EqualizeMode mode) {
    std::vector<std::pair<int, int>> states = {{0, 0}, {0, 1},  {0, -1}, {1, 0},  {-1, 0},
                                               {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    if (mode == EqualizeMode::TotalFirst) {
        states.emplace_back(2, 0);
        states.emplace_back(-2, 0);
    } else {
        states.emplace_back(0, 2);
        states.emplace_back(0, -2);
    }
    return states;
}

bool in_pair_state_set(EqualizeMode mode, int edge_delta, int total_delta, bool extended) {
    for (auto [dn, df] : pair_state_set(mode))
        if (dn == edge_delta && df == total_delta) return true;
    if (extended && mode == EqualizeMode::TotalFirst)
        return (edge_delta == 2 && total_delta == 1) || (edge_delta == -2 && total_delta == -1);
    return false;
}

std::vector<ElementSet> distribute_leftovers(const MixedGraph& g, std::vector<ElementSet> parts,
                                             EqualizeMode mode) {
    int k = static_cast<int>(parts.size());
    if (k < 1) throw DomainError("distribute_leftovers: no parts");
    ElementSet assigned;
    for (const ElementSet& part : parts) {
        if (!is_mixed_edge_cover(g, part))
            throw DomainError("distribute_leftovers: part is not a mixed edge cover");
        if (assigned.intersects(part)) throw DomainError("distribute_leftovers: parts overlap");
        assigned |= part;
    }

    bool input_in_states = true;
    for (int i = 0; i < k && input_in_states; ++i)
        for (int j = 0; j < k && input_in_states; ++j)
            input_in_states =
                in_pair_state_set(mode, parts[i].edge_count() - parts[j].edge_count(),
                                  parts[i].size() - parts[j].size());

    // Order of part indices: the first (leftover mod k) many receive one
    // extra element. Ties break by part index.
    auto distribute = [&](std::vector<ElementId> items, auto key_fn) {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int i, int j) { return key_fn(i) < key_fn(j); });
        int base = static_cast<int>(items.size()) / k;
        int remainder = static_cast<int>(items.size()) % k;
        std::size_t next = 0;
        for (int rank = 0; rank < k; ++rank) {
            int quota = base + (rank < remainder ? 1 : 0);
            for (int c = 0; c < quota; ++c) parts[order[rank]].insert(items[next++]);
        }
        internal_check(next == items.size(), "all leftovers distributed");
    };

    std::vector<ElementId> leftover_edges, leftover_arcs;
    for (ElementId e : (g.all_elements() - assigned).to_vector())
        (e.kind == ElementKind::Edge ? leftover_edges : leftover_arcs).push_back(e);

    if (mode == EqualizeMode::TotalFirst)
        distribute(leftover_edges, [&](int i) {
            return std::tuple{parts[i].size(), parts[i].edge_count(), i};
        });
    else
        distribute(leftover_edges, [&](int i) {
            return std::tuple{parts[i].edge_count(), parts[i].size(), i};
        });

    distribute(leftover_arcs, [&](int i) {
        return std::tuple{parts[i].size(), -parts[i].edge_count(), i};
    });

    ElementSet everything;
    for (const ElementSet& part : parts) {
        internal_check(is_mixed_edge_cover(g, part), "supersets remain mixed edge covers");
        internal_check(!everything.intersects(part), "distributed parts disjoint");
        everything |= part;
    }
    internal_check(everything == g.all_elements(), "distribution covers all elements");

    if (input_in_states)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                internal_check(
                    in_pair_state_set(mode, parts[i].edge_count() - parts[j].edge_count(),
                                      parts[i].size() - parts[j].size(), /*extended=*/true),
                    "distribution keeps pair states admissible");
    return parts;
}

std::vector<ElementSet> equalize_disjoint_mecs(const MixedGraph& g, std::vector<ElementSet> parts,
                                               EqualizeMode mode,
                                               bool shrink_to_covering_forests) {
    int k = static_cast<int>(parts.size());

    auto primary = [&](const ElementSet& f) {
        return mode == EqualizeMode::TotalFirst ? f.size() : f.edge_count();
    };
    auto secondary = [&](const ElementSet& f) {
        return mode == EqualizeMode::TotalFirst ? f.edge_count() : f.size();
    };
    auto union_size = [&]() {
        int total = 0;
        for (const ElementSet& part : parts) total += part.size();
        return total;
    };
    auto measure = [&](auto size_fn) {
        std::vector<int> sizes;
        for (const ElementSet& part : parts) sizes.push_back(size_fn(part));
        auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
        int extremes = 0;
        for (int s : sizes)
            if (s == *lo || s == *hi) ++extremes;
        return std::tuple{union_size(), *hi - *lo, extremes};
    };

    // The loop restarts phase 1 whenever a phase-2 step shrinks the union;
    // that happens at most |E∪A| times.
    int restart_guard = g.num_elements() + 2;
    int step_guard = 16 * (g.num_elements() + 2) * (k + 2);
    bool done = false;
    while (!done) {
        internal_check(restart_guard-- > 0, "phase restarts bounded by element count");

        // Phase 1: primary criterion to two consecutive values.
        while (true) {
            internal_check(step_guard-- > 0, "phase 1 step budget");
            std::vector<int> sizes;
            for (const ElementSet& part : parts) sizes.push_back(primary(part));
            int i = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
            int j = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
            if (sizes[i] - sizes[j] <= 1) break;
            auto before = measure(primary);
            std::tie(parts[i], parts[j]) = equalize_pair_mec(g, parts[i], parts[j], mode);
            internal_check(measure(primary) < before, "phase 1 progress");
        }

        // Phase 2: secondary criterion, restarting on shrink.
        int q = primary(parts[0]);
        for (const ElementSet& part : parts) q = std::min(q, primary(part));
        bool all_equal = true;
        for (const ElementSet& part : parts) all_equal = all_equal && primary(part) == q;

        bool restarted = false;
        while (!restarted) {
            internal_check(step_guard-- > 0, "phase 2 step budget");
            std::vector<int> secondaries;
            for (const ElementSet& part : parts) secondaries.push_back(secondary(part));

            int best_i = -1, best_j = -1, best_gap = -1;
            if (all_equal) {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        int gap = secondaries[i] - secondaries[j];
                        if (gap > best_gap) {
                            best_gap = gap;
                            best_i = i;
                            best_j = j;
                        }
                    }
                if (best_gap <= 2) {
                    done = true;
                    break;
                }
            } else {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        if (primary(parts[i]) != q || primary(parts[j]) != q + 1) continue;
                        int gap = std::abs(secondaries[i] - secondaries[j]);
                        if (gap > best_gap) {
                            best_gap = gap;
                            best_i = i;
                            best_j = j;
                        }
                    }
                if (best_gap <= 1) {
                    done = true;
                    break;
                }
            }

            int union_before = (parts[best_i] | parts[best_j]).size();
            auto before = measure(secondary);
            std::tie(parts[best_i], parts[best_j]) =
                equalize_pair_mec(g, parts[best_i], parts[best_j], mode);
            if ((parts[best_i] | parts[best_j]).size() < union_before) {
                restarted = true;  // back to the beginning of the first phase
            } else {
                if (all_equal)
                    internal_check(primary(parts[best_i]) == q && primary(parts[best_j]) == q,
                                   "phase 2 preserves equal primary sizes");
                else
                    internal_check(std::minmax(primary(parts[best_i]), primary(parts[best_j])) ==
                                       std::minmax(q, q + 1),
                                   "phase 2 preserves the primary size classes");
                internal_check(measure(secondary) < before, "phase 2 progress");
            }
        }

        // Packing variant: any part that ended the pass with a cycle is
        // replaced by a minimal cover contained in it; that shrinks the
        // union strictly, so it counts toward the restart budget.
        if (done && shrink_to_covering_forests) {
            for (ElementSet& part : parts) {
                if (is_mixed_covering_forest(g, part)) continue;
                ElementSet shrunk = minimalize_mec(g, part);
                internal_check(shrunk.size() < part.size(), "cyclic cover shrinks strictly");
                part = shrunk;
                done = false;
            }
        }
    }

    // End state of the 2-phase loop.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            internal_check(in_pair_state_set(mode,
                                             parts[i].edge_count() - parts[j].edge_count(),
                                             parts[i].size() - parts[j].size()),
                           "pair states admissible after the phase loop");
    return parts;
}

PartitionReport equitable_partition_mec(const MixedGraph& g, std::vector<ElementSet> parts,
                                        EqualizeMode mode) {
    int k = static_cast<int>(parts.size());
    if (k < 1) throw DomainError("equitable_partition_mec: empty partition");
    ElementSet seen;
    for (const ElementSet& part : parts) {
        if (!is_mixed_edge_cover(g, part))
            throw DomainError("equitable_partition_mec: part is not a mixed edge cover");
        if (seen.intersects(part))
            throw DomainError("equitable_partition_mec: parts are not disjoint");
        seen |= part;
    }
    if (seen != g.all_elements())
        throw DomainError("equitable_partition_mec: parts do not cover all elements");

    auto bounds_of = [&](EqualizeMode m) {
        return m == EqualizeMode::TotalFirst ? std::array<int, 3>{2, 2, 1}
                                             : std::array<int, 3>{1, 2, 2};
    };
    auto [bound_edge, bound_arc, bound_total] = bounds_of(mode);
    if (k == 1) return make_report(parts, bound_edge, bound_arc, bound_total);

    parts = equalize_disjoint_mecs(g, std::move(parts), mode,
                                   /*shrink_to_covering_forests=*/false);
    parts = distribute_leftovers(g, parts, mode);

    PartitionReport report = make_report(parts, bound_edge, bound_arc, bound_total);
    internal_check(report.within_bounds(), "theorem bounds hold");
    return report;
}

}  // namespace mixedforest
