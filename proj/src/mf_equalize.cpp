// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/mf_equalize.hpp"

#include <algorithm>
#include <numeric>

#include "mixedforest/branching_exchange.hpp"

namespace mixedforest {

PartitionReport make_report(const std::vector<ElementSet>& parts, int bound_edge, int bound_arc,
                            int bound_total) {
    PartitionReport report;
    report.parts = parts;
    int k = static_cast<int>(parts.size());
    report.difference_matrix.assign(k, std::vector<GapTriple>(k, GapTriple{0, 0, 0}));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            GapTriple d{parts[i].edge_count() - parts[j].edge_count(),
                        parts[i].arc_count() - parts[j].arc_count(),
                        parts[i].size() - parts[j].size()};
            report.difference_matrix[i][j] = d;
            report.max_edge_gap = std::max(report.max_edge_gap, std::abs(d.edge));
            report.max_arc_gap = std::max(report.max_arc_gap, std::abs(d.arc));
            report.max_total_gap = std::max(report.max_total_gap, std::abs(d.total));
        }
    report.bound_edge_gap = bound_edge;
    report.bound_arc_gap = bound_arc;
    report.bound_total_gap = bound_total;
    return report;
}

namespace {

// Alternating-path type table for matching forests; index is the type.
constexpr int kTypeM[11] = {0, -1, 0, 1, 1, 0, -1, 0, 1, -1, 0};
constexpr int kTypeF[11] = {0, -1, -1, -1, 1, 1, 1, 0, 0, 0, 0};

}  // namespace

AuxGraphMF build_aux_mf(const MixedGraph& g, const ElementSet& F1, const ElementSet& F2) {
    if (F1.intersects(F2)) throw DomainError("build_aux_mf: inputs are not disjoint");
    if (!is_matching_forest(g, F1) || !is_matching_forest(g, F2))
        throw DomainError("build_aux_mf: input is not a matching forest");

    int n = g.num_vertices();
    AuxGraphMF aux;
    aux.num_vertices = n;
    aux.bullet_node.assign(n, -1);

    const ElementSet M[2] = {F1.edges_only(), F2.edges_only()};
    const ElementSet B[2] = {F1.arcs_only(), F2.arcs_only()};
    VertexSet roots[2], uncovered[2];
    for (int i = 0; i < 2; ++i) {
        roots[i] = g.all_vertices() - covered(g, B[i]);
        uncovered[i] = roots[i] - covered(g, M[i]);
    }

    int next_node = n;
    for (int v = 0; v < n; ++v)
        if (uncovered[0].contains(v) || uncovered[1].contains(v)) aux.bullet_node[v] = next_node++;
    aux.core.num_nodes = next_node;

    for (int i = 0; i < 2; ++i) {
        for (ElementId e : M[i].to_vector()) {
            auto [u, v] = g.edge(e.index);
            aux.core.edges.push_back(AuxEdge{i + 1, u, v, e, false});
        }
        for (int v = 0; v < n; ++v)
            if (uncovered[i].contains(v))
                aux.core.edges.push_back(AuxEdge{i + 1, aux.bullet_node[v], v, std::nullopt, true});
    }

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

    // |F_i| = |V| - |M*_i|
    for (int i = 0; i < 2; ++i) {
        int mstar = M[i].size() + uncovered[i].size();
        internal_check((i == 0 ? F1 : F2).size() == n - mstar, "aux size identity |F|=|V|-|M*|");
    }
    return aux;
}

AltDecomposition decompose_alternating(const AuxGraphMF& aux) { return decompose_core(aux.core); }

PathClassMF classify_path_mf(const AuxGraphMF& aux, const std::vector<int>& path) {
    PathProfile p = path_profile(aux.core, path);
    int type;
    if (p.side1 == p.side2 + 1) {
        internal_check(p.end_class2 == 0, "side-1-ended path with interior bullet");
        type = p.end_class1 == 2 ? 1 : p.end_class1 == 1 ? 2 : 3;
    } else if (p.side2 == p.side1 + 1) {
        internal_check(p.end_class1 == 0, "side-2-ended path with interior bullet");
        type = p.end_class2 == 2 ? 4 : p.end_class2 == 1 ? 5 : 6;
    } else {
        internal_check(p.side1 == p.side2, "path side counts differ by more than one");
        if (p.end_class1 == 1 && p.end_class2 == 1) type = 7;
        else if (p.end_class1 == 0 && p.end_class2 == 1) type = 8;
        else if (p.end_class1 == 1 && p.end_class2 == 0) type = 9;
        else type = 10;
    }
    PathClassMF cls{type, kTypeM[type], kTypeF[type]};
    int m = (p.side1 - p.end_class1) - (p.side2 - p.end_class2);
    int f = p.side2 - p.side1;
    internal_check(m == cls.m && f == cls.f, "path values disagree with the type table");
    return cls;
}

std::pair<ElementSet, ElementSet> apply_paths_mf(const MixedGraph& g, const ElementSet& F1,
                                                 const ElementSet& F2, const AuxGraphMF& aux,
                                                 const AltDecomposition& dec,
                                                 const std::vector<int>& selected_paths) {
    std::vector<bool> selected(dec.paths.size(), false);
    for (int idx : selected_paths) {
        if (idx < 0 || idx >= static_cast<int>(dec.paths.size()))
            throw UsageError("apply_paths_mf: path index out of range");
        if (selected[idx]) throw UsageError("apply_paths_mf: duplicate path selected");
        selected[idx] = true;
    }

    std::vector<bool> on_path(aux.core.edges.size(), false);
    int sum_m = 0, sum_f = 0;
    for (int idx : selected_paths) {
        PathClassMF cls = classify_path_mf(aux, dec.paths[idx]);
        sum_m += cls.m;
        sum_f += cls.f;
        for (int e : dec.paths[idx]) on_path[e] = true;
    }

    ElementSet new_m1 = F1.edges_only();
    ElementSet new_m2 = F2.edges_only();
    VertexSet new_roots1, new_roots2;
    for (std::size_t i = 0; i < aux.core.edges.size(); ++i) {
        const AuxEdge& e = aux.core.edges[i];
        int side_after = on_path[i] ? 3 - e.side : e.side;
        if (e.element && on_path[i]) {
            if (e.side == 1) {
                new_m1.erase(*e.element);
                new_m2.insert(*e.element);
            } else {
                new_m2.erase(*e.element);
                new_m1.insert(*e.element);
            }
        }
        // New root sets: base nodes covered by M*_i after the exchange,
        // with uncontracted incidence.
        VertexSet& target = side_after == 1 ? new_roots1 : new_roots2;
        for (int node : {e.node_a, e.node_b})
            if (node < aux.num_vertices) target.insert(node);
    }

    internal_check(new_m1.size() - new_m2.size() ==
                       F1.edge_count() - F2.edge_count() - 2 * sum_m,
                   "edge-count exchange identity");

    RootExchangeRequest req{F1.arcs_only(), F2.arcs_only(), new_roots1, new_roots2};
    bool feasible = false;
    try {
        feasible = exchange_feasible(g, req);
    } catch (const DomainError&) {
        feasible = false;
    }
    internal_check(feasible, "contractions guarantee a feasible root exchange");
    auto [new_b1, new_b2] = exchange_roots(g, req);

    ElementSet out1 = new_m1 | new_b1;
    ElementSet out2 = new_m2 | new_b2;
    internal_check(is_matching_forest(g, out1) && is_matching_forest(g, out2),
                   "exchange outputs are matching forests");
    internal_check(!out1.intersects(out2) && (out1 | out2) == (F1 | F2),
                   "exchange outputs partition the union");
    internal_check(out1.size() - out2.size() == F1.size() - F2.size() - 2 * sum_f,
                   "total-count exchange identity");
    return {out1, out2};
}

std::pair<ElementSet, ElementSet> apply_paths_mf(const MixedGraph& g, const ElementSet& F1,
                                                 const ElementSet& F2,
                                                 const std::vector<int>& selected_paths) {
    AuxGraphMF aux = build_aux_mf(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    return apply_paths_mf(g, F1, F2, aux, dec, selected_paths);
}

namespace {

// Picks one path per requested type, lowest indices first, all distinct.
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

// All decomposition paths classified, with the counting identities
// sum m(P) = |M1|-|M2| and sum f(P) = |F1|-|F2| verified.
std::vector<int> classified_types(const MixedGraph& g, const ElementSet& F1,
                                  const ElementSet& F2, const AuxGraphMF& aux,
                                  const AltDecomposition& dec) {
    std::vector<int> types;
    int sum_m = 0, sum_f = 0;
    for (const auto& path : dec.paths) {
        PathClassMF cls = classify_path_mf(aux, path);
        types.push_back(cls.type);
        sum_m += cls.m;
        sum_f += cls.f;
    }
    internal_check(sum_m == F1.edge_count() - F2.edge_count(), "sum of m(P) over paths");
    internal_check(sum_f == F1.size() - F2.size(), "sum of f(P) over paths");
    return types;
}

// Operations 1/2: reduces |M1|-|M2| by exactly 2; requires |M1| > |M2|.
// Changes |F1|-|F2| by 0 or -2 when it is >= 0 (Operation 1), by 0 or +2
// when it is <= 0 (Operation 2).
std::pair<ElementSet, ElementSet> op_reduce_edge_gap_ordered(const MixedGraph& g,
                                                             const ElementSet& F1,
                                                             const ElementSet& F2) {
    int edge_gap = F1.edge_count() - F2.edge_count();
    int total_gap = F1.size() - F2.size();
    internal_check(edge_gap > 0, "operation applied with wrong sign");

    AuxGraphMF aux = build_aux_mf(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    std::vector<int> types = classified_types(g, F1, F2, aux, dec);

    std::vector<std::vector<int>> preferences;
    if (total_gap >= 0)
        preferences = {{4}, {8}, {3, 5}};  // Operation 1
    else
        preferences = {{3}, {8}, {2, 4}};  // Operation 2

    for (const auto& wanted : preferences)
        if (auto picked = pick_paths(types, wanted))
            return apply_paths_mf(g, F1, F2, aux, dec, *picked);
    throw InternalError("no realizing path set for edge-gap operation");
}

// Operations 3/4: reduces |F1|-|F2| by exactly 2; requires |F1| > |F2|.
std::pair<ElementSet, ElementSet> op_reduce_total_gap_ordered(const MixedGraph& g,
                                                              const ElementSet& F1,
                                                              const ElementSet& F2) {
    int edge_gap = F1.edge_count() - F2.edge_count();
    int total_gap = F1.size() - F2.size();
    internal_check(total_gap > 0, "operation applied with wrong sign");

    AuxGraphMF aux = build_aux_mf(g, F1, F2);
    AltDecomposition dec = decompose_alternating(aux);
    std::vector<int> types = classified_types(g, F1, F2, aux, dec);

    std::vector<std::vector<int>> preferences;
    if (edge_gap >= 0)
        preferences = {{4}, {5}, {6, 8}};  // Operation 3
    else
        preferences = {{5}, {6}, {4, 9}};  // Operation 4

    for (const auto& wanted : preferences)
        if (auto picked = pick_paths(types, wanted))
            return apply_paths_mf(g, F1, F2, aux, dec, *picked);
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

}  // namespace

std::pair<ElementSet, ElementSet> equalize_pair_mf(const MixedGraph& g, const ElementSet& F1,
                                                   const ElementSet& F2, EqualizeMode mode) {
    if (F1.intersects(F2)) throw DomainError("equalize_pair_mf: inputs are not disjoint");
    if (!is_matching_forest(g, F1) || !is_matching_forest(g, F2))
        throw DomainError("equalize_pair_mf: input is not a matching forest");

    ElementSet a = F1, b = F2;
    int guard = 2 * (a.size() + b.size()) + 8;
    while (guard-- > 0) {
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
    }
    internal_check(guard > 0, "pair equalization did not terminate");

    // One final operation lands on gap sum <= 2 in the boundary case.
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
    return {a, b};
}

namespace {

// Progress measure for a phase: (spread, number of extreme indices) must
// strictly decrease lexicographically with every pair update.
std::pair<int, int> phase_measure(const std::vector<int>& sizes) {
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    int extremes = 0;
    for (int s : sizes)
        if (s == *lo || s == *hi) ++extremes;
    return {*hi - *lo, extremes};
}

}  // namespace

PartitionReport equitable_partition_mf(const MixedGraph& g, std::vector<ElementSet> parts,
                                       EqualizeMode mode) {
    int k = static_cast<int>(parts.size());
    if (k < 1) throw DomainError("equitable_partition_mf: empty partition");
    ElementSet seen;
    for (const ElementSet& part : parts) {
        if (!is_matching_forest(g, part))
            throw DomainError("equitable_partition_mf: part is not a matching forest");
        if (seen.intersects(part))
            throw DomainError("equitable_partition_mf: parts are not disjoint");
        seen |= part;
    }
    if (seen != g.all_elements())
        throw DomainError("equitable_partition_mf: parts do not cover all elements");

    auto bounds_of = [&](EqualizeMode m) {
        return m == EqualizeMode::TotalFirst ? std::array<int, 3>{2, 2, 1}
                                             : std::array<int, 3>{1, 2, 2};
    };
    auto [bound_edge, bound_arc, bound_total] = bounds_of(mode);
    if (k == 1) return make_report(parts, bound_edge, bound_arc, bound_total);

    auto primary = [&](const ElementSet& f) {
        return mode == EqualizeMode::TotalFirst ? f.size() : f.edge_count();
    };
    auto secondary = [&](const ElementSet& f) {
        return mode == EqualizeMode::TotalFirst ? f.edge_count() : f.size();
    };
    ElementSet whole = seen;
    auto run_pair = [&](int i, int j) {
        std::tie(parts[i], parts[j]) = equalize_pair_mf(g, parts[i], parts[j], mode);
    };

    // Phase 1: equalize the primary criterion to two consecutive values.
    int guard = 4 * (g.num_elements() + 2) * (k + 2);
    while (guard-- > 0) {
        std::vector<int> sizes;
        for (const ElementSet& part : parts) sizes.push_back(primary(part));
        int i = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
        int j = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
        if (sizes[i] - sizes[j] <= 1) break;
        auto before = phase_measure(sizes);
        run_pair(i, j);
        std::vector<int> after_sizes;
        for (const ElementSet& part : parts) after_sizes.push_back(primary(part));
        internal_check(phase_measure(after_sizes) < before, "phase 1 progress");
    }
    internal_check(guard > 0, "phase 1 did not terminate");

    // Phase 2: equalize the secondary criterion within the primary classes.
    int q = primary(parts[0]);
    for (const ElementSet& part : parts) q = std::min(q, primary(part));
    bool all_equal = true;
    for (const ElementSet& part : parts) all_equal = all_equal && primary(part) == q;

    guard = 4 * (g.num_elements() + 2) * (k + 2);
    while (guard-- > 0) {
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
            if (best_gap <= 2) break;
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
            if (best_gap <= 1) break;
        }

        auto before = phase_measure(secondaries);
        run_pair(best_i, best_j);
        if (all_equal)
            internal_check(primary(parts[best_i]) == q && primary(parts[best_j]) == q,
                           "phase 2 preserves equal primary sizes");
        else
            internal_check(std::minmax(primary(parts[best_i]), primary(parts[best_j])) ==
                               std::minmax(q, q + 1),
                           "phase 2 preserves the primary size classes");
        std::vector<int> after;
        for (const ElementSet& part : parts) after.push_back(secondary(part));
        internal_check(phase_measure(after) < before, "phase 2 progress");
    }
    internal_check(guard > 0, "phase 2 did not terminate");

    // Conservation and validity.
    ElementSet out_union;
    for (const ElementSet& part : parts) {
        internal_check(is_matching_forest(g, part), "output part validity");
        internal_check(!out_union.intersects(part), "output parts disjoint");
        out_union |= part;
    }
    internal_check(out_union == whole, "output partitions the input union");

    PartitionReport report = make_report(parts, bound_edge, bound_arc, bound_total);
    internal_check(report.within_bounds(), "theorem bounds hold");
    return report;
}

}  // namespace mixedforest
