// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/oracle.hpp"

#include <algorithm>

namespace mixedforest {

void OracleBudget::check_instance(const MixedGraph& g) const {
    if (g.num_vertices() > max_vertices || g.num_elements() > max_elements)
        throw BudgetError("oracle budget exceeded: " + std::to_string(g.num_vertices()) +
                          " vertices, " + std::to_string(g.num_elements()) + " elements");
}

void OracleBudget::check_k(int k) const {
    if (k < 1 || k > max_k) throw BudgetError("oracle budget exceeded: k=" + std::to_string(k));
}

namespace {

// Necessary condition on a partial set that some superset passes the
// predicate; exploits the downward-closed half of each definition.
bool partial_ok(const MixedGraph& g, const ElementSet& F, StructureKind kind) {
    switch (kind) {
        case StructureKind::Matching: return is_matching(g, F);
        case StructureKind::Branching: return is_branching(g, F);
        case StructureKind::MatchingForest:
        case StructureKind::PerfectMatchingForest:
            return is_matching_forest(g, F);
        case StructureKind::MixedCoveringForest: return !underlying_has_cycle(g, F);
        case StructureKind::MixedEdgeCover: return true;
    }
    return true;
}

// Necessary condition that the partial set plus some subset of the still
// unassigned elements passes; exploits the upward-closed half.
bool completable(const MixedGraph& g, const ElementSet& F, const ElementSet& remaining,
                 StructureKind kind) {
    switch (kind) {
        case StructureKind::PerfectMatchingForest:
        case StructureKind::MixedCoveringForest:
            return covered(g, F | remaining) == g.all_vertices();
        case StructureKind::MixedEdgeCover:
            return is_mixed_edge_cover(g, F | remaining);
        default:
            return true;
    }
}

}  // namespace

void for_each_structure(const MixedGraph& g, StructureKind kind, const OracleBudget& budget,
                        const std::function<bool(const ElementSet&)>& visit) {
    budget.check_instance(g);
    std::vector<ElementId> elements = g.all_elements().to_vector();
    ElementSet current;
    bool keep_going = true;

    std::vector<ElementSet> suffix(elements.size() + 1);
    for (int i = static_cast<int>(elements.size()) - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        suffix[i].insert(elements[i]);
    }

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!keep_going) return;
        if (i == elements.size()) {
            if (satisfies(g, current, kind)) keep_going = visit(current);
            return;
        }
        if (!completable(g, current, suffix[i], kind)) return;
        rec(i + 1);
        if (!keep_going) return;
        current.insert(elements[i]);
        if (partial_ok(g, current, kind)) rec(i + 1);
        current.erase(elements[i]);
    };
    rec(0);
}

std::vector<ElementSet> enumerate_structures(const MixedGraph& g, StructureKind kind,
                                             const OracleBudget& budget) {
    std::vector<ElementSet> out;
    for_each_structure(g, kind, budget, [&](const ElementSet& F) {
        out.push_back(F);
        return true;
    });
    return out;
}

namespace {

// Shared recursion for partitions (every element assigned a part) and
// disjoint families (elements may stay unassigned).
void family_search(const MixedGraph& g, int k, StructureKind kind, bool allow_unassigned,
                   const std::function<bool(const std::vector<ElementSet>&)>& visit) {
    std::vector<ElementId> elements = g.all_elements().to_vector();
    std::vector<ElementSet> parts(k);
    bool keep_going = true;

    std::vector<ElementSet> suffix(elements.size() + 1);
    for (int i = static_cast<int>(elements.size()) - 1; i >= 0; --i) {
        suffix[i] = suffix[i + 1];
        suffix[i].insert(elements[i]);
    }

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!keep_going) return;
        if (i == elements.size()) {
            for (const ElementSet& part : parts)
                if (!satisfies(g, part, kind)) return;
            keep_going = visit(parts);
            return;
        }
        for (const ElementSet& part : parts)
            if (!completable(g, part, suffix[i], kind)) return;
        for (int p = 0; p < k && keep_going; ++p) {
            parts[p].insert(elements[i]);
            if (partial_ok(g, parts[p], kind)) rec(i + 1);
            parts[p].erase(elements[i]);
        }
        if (allow_unassigned && keep_going) rec(i + 1);
    };
    rec(0);
}

}  // namespace

void for_each_partition(const MixedGraph& g, int k, StructureKind kind,
                        const OracleBudget& budget,
                        const std::function<bool(const std::vector<ElementSet>&)>& visit) {
    budget.check_instance(g);
    budget.check_k(k);
    family_search(g, k, kind, /*allow_unassigned=*/false, visit);
}

std::vector<std::vector<ElementSet>> enumerate_partitions(const MixedGraph& g, int k,
                                                          StructureKind kind,
                                                          const OracleBudget& budget) {
    std::vector<std::vector<ElementSet>> out;
    for_each_partition(g, k, kind, budget, [&](const std::vector<ElementSet>& parts) {
        out.push_back(parts);
        return true;
    });
    return out;
}

std::optional<std::vector<ElementSet>> find_partition(const MixedGraph& g, int k,
                                                      StructureKind kind,
                                                      const OracleBudget& budget) {
    std::optional<std::vector<ElementSet>> found;
    for_each_partition(g, k, kind, budget, [&](const std::vector<ElementSet>& parts) {
        found = parts;
        return false;
    });
    return found;
}

std::optional<std::vector<ElementSet>> find_disjoint_family(const MixedGraph& g, int k,
                                                            StructureKind kind,
                                                            const OracleBudget& budget) {
    budget.check_instance(g);
    budget.check_k(k);
    std::optional<std::vector<ElementSet>> found;
    family_search(g, k, kind, /*allow_unassigned=*/true,
                  [&](const std::vector<ElementSet>& parts) {
                      found = parts;
                      return false;
                  });
    return found;
}

BestBounds best_bounds(const MixedGraph& g, int k, StructureKind kind,
                       const OracleBudget& budget) {
    BestBounds best;
    auto consider = [&](const std::vector<ElementSet>& parts) {
        int edge_gap = 0, arc_gap = 0, total_gap = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                edge_gap = std::max(edge_gap,
                                    std::abs(parts[i].edge_count() - parts[j].edge_count()));
                arc_gap = std::max(arc_gap, std::abs(parts[i].arc_count() - parts[j].arc_count()));
                total_gap = std::max(total_gap, std::abs(parts[i].size() - parts[j].size()));
            }
        ++best.partition_count;
        auto improve = [](int& slot, int value) {
            if (slot < 0 || value < slot) slot = value;
        };
        improve(best.min_edge_gap, edge_gap);
        improve(best.min_arc_gap, arc_gap);
        improve(best.min_total_gap, total_gap);
        return std::tuple{edge_gap, arc_gap, total_gap};
    };

    // Two passes: the joint statistics need the per-criterion optima first.
    std::vector<std::tuple<int, int, int>> gaps;
    for_each_partition(g, k, kind, budget, [&](const std::vector<ElementSet>& parts) {
        gaps.push_back(consider(parts));
        return true;
    });
    for (auto [e, a, t] : gaps) {
        (void)a;
        if (e == best.min_edge_gap &&
            (best.min_total_gap_at_best_edge < 0 || t < best.min_total_gap_at_best_edge))
            best.min_total_gap_at_best_edge = t;
        if (t == best.min_total_gap &&
            (best.min_edge_gap_at_best_total < 0 || e < best.min_edge_gap_at_best_total))
            best.min_edge_gap_at_best_total = e;
    }
    return best;
}

}  // namespace mixedforest
