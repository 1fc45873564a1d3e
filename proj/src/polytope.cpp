// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/polytope.hpp"

#include <algorithm>

namespace mixedforest {

IncidenceVector indicator_vector(const MixedGraph& g, const ElementSet& F) {
    IncidenceVector x(g.num_elements(), 0);
    for (ElementId e : F.to_vector())
        x[e.kind == ElementKind::Edge ? e.index : g.num_edges() + e.index] = 1;
    return x;
}

void for_each_subpartition(const MixedGraph& g,
                           const std::function<void(const Subpartition&)>& visit) {
    if (g.num_vertices() > kSubpartitionVertexCap)
        throw UsageError("subpartition enumeration capped at " +
                         std::to_string(kSubpartitionVertexCap) + " vertices");
    int n = g.num_vertices();
    Subpartition current;
    // Each vertex either skips or joins an existing class or opens a new
    // one; classes stay ordered by smallest member.
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            visit(current);
            return;
        }
        rec(v + 1);  // v in no class
        for (std::size_t c = 0; c < current.classes.size(); ++c) {
            current.classes[c].insert(v);
            rec(v + 1);
            current.classes[c].erase(v);
        }
        current.classes.push_back(VertexSet{});
        current.classes.back().insert(v);
        rec(v + 1);
        current.classes.pop_back();
    };
    rec(0);
}

std::vector<Subpartition> enumerate_subpartitions(const MixedGraph& g) {
    std::vector<Subpartition> out;
    for_each_subpartition(g, [&](const Subpartition& s) { out.push_back(s); });
    return out;
}

namespace {

int x_edge(const MixedGraph&, const IncidenceVector& x, int i) { return x[i]; }
int x_arc(const MixedGraph& g, const IncidenceVector& x, int i) { return x[g.num_edges() + i]; }

// x(delta_head(v)): edges incident to v plus arcs with head v.
int head_sum(const MixedGraph& g, const IncidenceVector& x, int v) {
    int sum = 0;
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [a, b] = g.edge(i);
        if (a == v || b == v) sum += x_edge(g, x, i);
    }
    for (int i = 0; i < g.num_arcs(); ++i)
        if (g.arc(i).second == v) sum += x_arc(g, x, i);
    return sum;
}

// x(E[U]): edges with both endpoints in U.
int induced_edges(const MixedGraph& g, const IncidenceVector& x, const VertexSet& u) {
    int sum = 0;
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [a, b] = g.edge(i);
        if (u.contains(a) && u.contains(b)) sum += x_edge(g, x, i);
    }
    return sum;
}

// x(A[Z]): arcs with both endpoints in Z.
int induced_arcs(const MixedGraph& g, const IncidenceVector& x, const VertexSet& z) {
    int sum = 0;
    for (int i = 0; i < g.num_arcs(); ++i) {
        auto [t, h] = g.arc(i);
        if (z.contains(t) && z.contains(h)) sum += x_arc(g, x, i);
    }
    return sum;
}

// x(delta_E(U)): edges with exactly one endpoint in U.
int boundary_edges(const MixedGraph& g, const IncidenceVector& x, const VertexSet& u) {
    int sum = 0;
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [a, b] = g.edge(i);
        if (u.contains(a) != u.contains(b)) sum += x_edge(g, x, i);
    }
    return sum;
}

// x(delta_in_A(Z)): arcs entering Z from outside.
int entering_arcs(const MixedGraph& g, const IncidenceVector& x, const VertexSet& z) {
    int sum = 0;
    for (int i = 0; i < g.num_arcs(); ++i) {
        auto [t, h] = g.arc(i);
        if (!z.contains(t) && z.contains(h)) sum += x_arc(g, x, i);
    }
    return sum;
}

std::string describe(const Subpartition& s) {
    std::string out = "subpartition {";
    for (const VertexSet& z : s.classes) {
        out += " {";
        for (int v : z.to_vector()) out += " " + std::to_string(v);
        out += " }";
    }
    return out + " }";
}

int covering_lhs(const MixedGraph& g, const IncidenceVector& x, const Subpartition& s) {
    VertexSet u = s.union_of();
    int lhs = induced_edges(g, x, u) + boundary_edges(g, x, u);
    for (const VertexSet& z : s.classes) lhs += entering_arcs(g, x, z);
    return lhs;
}

void require_length(const MixedGraph& g, const IncidenceVector& x) {
    if (static_cast<int>(x.size()) != g.num_elements())
        throw UsageError("incidence vector length must be |E|+|A|");
}

}  // namespace

SystemCheck mf_system_check(const MixedGraph& g, const IncidenceVector& x) {
    require_length(g, x);
    SystemCheck result;
    for (int i = 0; i < g.num_elements(); ++i)
        if (x[i] < 0) return {false, "x_" + std::to_string(i) + " < 0"};
    for (int v = 0; v < g.num_vertices(); ++v)
        if (head_sum(g, x, v) > 1)
            return {false, "x(delta_head(" + std::to_string(v) + ")) > 1"};
    for_each_subpartition(g, [&](const Subpartition& s) {
        if (!result.satisfied || s.size() == 0) return;
        VertexSet u = s.union_of();
        int lhs = induced_edges(g, x, u);
        for (const VertexSet& z : s.classes) lhs += induced_arcs(g, x, z);
        int rhs = u.size() - (s.size() + 1) / 2;
        if (lhs > rhs) result = {false, describe(s) + ": " + std::to_string(lhs) + " > " +
                                            std::to_string(rhs)};
    });
    return result;
}

SystemCheck pmf_system_check(const MixedGraph& g, const IncidenceVector& x) {
    require_length(g, x);
    SystemCheck result;
    for (int i = 0; i < g.num_elements(); ++i)
        if (x[i] < 0) return {false, "x_" + std::to_string(i) + " < 0"};
    for (int v = 0; v < g.num_vertices(); ++v)
        if (head_sum(g, x, v) != 1)
            return {false, "x(delta_head(" + std::to_string(v) + ")) != 1"};
    for_each_subpartition(g, [&](const Subpartition& s) {
        if (!result.satisfied || s.size() == 0) return;
        int lhs = covering_lhs(g, x, s);
        int rhs = (s.size() + 1) / 2;
        if (lhs < rhs) result = {false, describe(s) + ": " + std::to_string(lhs) + " < " +
                                            std::to_string(rhs)};
    });
    return result;
}

SystemCheck mec_system_check(const MixedGraph& g, const IncidenceVector& x) {
    require_length(g, x);
    SystemCheck result;
    for (int i = 0; i < g.num_elements(); ++i) {
        if (x[i] < 0) return {false, "x_" + std::to_string(i) + " < 0"};
        if (x[i] > 1) return {false, "x_" + std::to_string(i) + " > 1"};
    }
    for_each_subpartition(g, [&](const Subpartition& s) {
        if (!result.satisfied || s.size() == 0) return;
        int lhs = covering_lhs(g, x, s);
        int rhs = (s.size() + 1) / 2;
        if (lhs < rhs) result = {false, describe(s) + ": " + std::to_string(lhs) + " < " +
                                            std::to_string(rhs)};
    });
    return result;
}

bool verify_integer_hull(const MixedGraph& g, StructureKind kind) {
    if (g.num_vertices() > kHullVertexCap || g.num_elements() > kHullElementCap)
        throw UsageError("hull verification capped at " + std::to_string(kHullVertexCap) +
                         " vertices and " + std::to_string(kHullElementCap) + " elements");
    auto check = [&](const IncidenceVector& x) -> bool {
        switch (kind) {
            case StructureKind::MatchingForest: return mf_system_check(g, x).satisfied;
            case StructureKind::PerfectMatchingForest: return pmf_system_check(g, x).satisfied;
            case StructureKind::MixedEdgeCover: return mec_system_check(g, x).satisfied;
            default:
                throw UsageError("no inequality system for kind " + to_string(kind));
        }
    };

    // The head constraints (or the box for covers) pin every integer
    // solution into {0,1}, so 0/1 enumeration is exhaustive.
    int m = g.num_elements();
    std::vector<ElementId> elements = g.all_elements().to_vector();
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        ElementSet F;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) F.insert(elements[i]);
        bool in_system = check(indicator_vector(g, F));
        bool in_family = satisfies(g, F, kind);
        if (in_system != in_family) return false;
    }
    return true;
}

}  // namespace mixedforest
