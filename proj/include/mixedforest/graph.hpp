// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_GRAPH_HPP
#define MIXEDFOREST_GRAPH_HPP

#include <bitset>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixedforest/errors.hpp"

namespace mixedforest {

// Size caps for the dense set representations. Desk-scale exhaustive
// algorithms dominate this library; graphs beyond the caps are rejected
// at construction time.
inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxElements = 256;  // per kind

enum class ElementKind : std::uint8_t { Edge, Arc };

/// Identifier of one edge or arc: its kind plus its position in the
/// corresponding list. Parallel elements are distinct identifiers.
struct ElementId {
    ElementKind kind;
    int index;

    friend bool operator==(const ElementId&, const ElementId&) = default;
    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

inline ElementId edge_id(int index) { return {ElementKind::Edge, index}; }
inline ElementId arc_id(int index) { return {ElementKind::Arc, index}; }

/// Dense set of vertex identifiers, all < kMaxVertices.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet all(int n) {
        VertexSet s;
        s.bits_ = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    bool contains(int v) const { return (bits_ >> v) & 1u; }
    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    bool empty() const { return bits_ == 0; }
    int size() const { return static_cast<int>(std::popcount(bits_)); }

    VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    bool is_subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 0; v < kMaxVertices; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Set of element identifiers of one mixed graph. The universal currency
/// for F and its views M/N = F∩E and B = F∩A.
class ElementSet {
public:
    ElementSet() = default;

    bool contains(ElementId e) const { return bits(e.kind).test(e.index); }
    void insert(ElementId e) { bits(e.kind).set(e.index); }
    void erase(ElementId e) { bits(e.kind).reset(e.index); }
    bool empty() const { return edges_.none() && arcs_.none(); }
    int size() const { return static_cast<int>(edges_.count() + arcs_.count()); }
    int edge_count() const { return static_cast<int>(edges_.count()); }
    int arc_count() const { return static_cast<int>(arcs_.count()); }

    ElementSet edges_only() const { ElementSet s; s.edges_ = edges_; return s; }
    ElementSet arcs_only() const { ElementSet s; s.arcs_ = arcs_; return s; }
    bool has_arcs() const { return arcs_.any(); }
    bool has_edges() const { return edges_.any(); }

    ElementSet operator|(const ElementSet& o) const {
        ElementSet s;
        s.edges_ = edges_ | o.edges_;
        s.arcs_ = arcs_ | o.arcs_;
        return s;
    }
    ElementSet operator&(const ElementSet& o) const {
        ElementSet s;
        s.edges_ = edges_ & o.edges_;
        s.arcs_ = arcs_ & o.arcs_;
        return s;
    }
    ElementSet operator-(const ElementSet& o) const {
        ElementSet s;
        s.edges_ = edges_ & ~o.edges_;
        s.arcs_ = arcs_ & ~o.arcs_;
        return s;
    }
    ElementSet operator^(const ElementSet& o) const {
        ElementSet s;
        s.edges_ = edges_ ^ o.edges_;
        s.arcs_ = arcs_ ^ o.arcs_;
        return s;
    }
    ElementSet& operator|=(const ElementSet& o) { return *this = *this | o; }

    bool is_subset_of(const ElementSet& o) const {
        return (edges_ & ~o.edges_).none() && (arcs_ & ~o.arcs_).none();
    }
    bool intersects(const ElementSet& o) const {
        return (edges_ & o.edges_).any() || (arcs_ & o.arcs_).any();
    }

    /// Members in canonical order: edges ascending, then arcs ascending.
    std::vector<ElementId> to_vector() const {
        std::vector<ElementId> out;
        for (int i = 0; i < kMaxElements; ++i)
            if (edges_.test(i)) out.push_back(edge_id(i));
        for (int i = 0; i < kMaxElements; ++i)
            if (arcs_.test(i)) out.push_back(arc_id(i));
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::bitset<kMaxElements>& bits(ElementKind k) {
        return k == ElementKind::Edge ? edges_ : arcs_;
    }
    const std::bitset<kMaxElements>& bits(ElementKind k) const {
        return k == ElementKind::Edge ? edges_ : arcs_;
    }

    std::bitset<kMaxElements> edges_;
    std::bitset<kMaxElements> arcs_;
};

/// Immutable mixed graph: undirected edges {u,v} and directed arcs (tail, head).
/// No loops; parallel edges/arcs permitted and distinguished by index.
class MixedGraph {
public:
    MixedGraph(int num_vertices,
               std::vector<std::pair<int, int>> edges,
               std::vector<std::pair<int, int>> arcs);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    int num_elements() const { return num_edges() + num_arcs(); }

    /// Endpoints of an edge, as given at construction.
    std::pair<int, int> edge(int index) const;
    /// (tail, head) of an arc.
    std::pair<int, int> arc(int index) const;

    bool valid(ElementId e) const {
        int n = e.kind == ElementKind::Edge ? num_edges() : num_arcs();
        return e.index >= 0 && e.index < n;
    }
    void require_valid(ElementId e) const;
    void require_valid(const ElementSet& set) const;

    VertexSet all_vertices() const { return VertexSet::all(num_vertices_); }
    ElementSet all_elements() const;
    ElementSet all_edges() const { return all_elements().edges_only(); }
    ElementSet all_arcs() const { return all_elements().arcs_only(); }

    /// True if v is an endpoint (edge) or the tail/head (arc) of e.
    bool incident(ElementId e, int v) const;

private:
    int num_vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> arcs_;
};

/// Heads of an element: both endpoints of an edge, the head of an arc.
VertexSet heads(const MixedGraph& g, ElementId e);

/// Vertices covered by F: union of heads over members of F.
VertexSet covered(const MixedGraph& g, const ElementSet& F);

/// Per-vertex count of members of F having that vertex as a head.
std::vector<int> cover_counts(const MixedGraph& g, const ElementSet& F);

/// True iff the multigraph obtained by forgetting orientations in F has a
/// cycle. Parallel elements between the same vertex pair form a 2-cycle.
bool underlying_has_cycle(const MixedGraph& g, const ElementSet& F);

/// Vertices reachable from `sources` by directed paths in the arc set B,
/// including the sources themselves (length-0 paths). B must be arcs only.
VertexSet reachable_from(const MixedGraph& g, const ElementSet& B, const VertexSet& sources);

/// Strong components of the digraph (V, D) with no arc of D entering from
/// outside. Isolated vertices are singleton source components. D arcs only.
std::vector<VertexSet> source_components(const MixedGraph& g, const ElementSet& D);

}  // namespace mixedforest

#endif
