// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_TEXTIO_HPP
#define MIXEDFOREST_TEXTIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixedforest/graph.hpp"

namespace mixedforest {

/// Parsed graph file: the graph plus whatever weights and partition labels
/// the file carried. Line-oriented format:
///
///   V n           vertex count (required, first non-comment line)
///   E u v         undirected edge
///   A t h         arc from t to h
///   W K i w       weight w for edge (K=E) or arc (K=A) index i
///   P p K i       element i of kind K belongs to part p (0-based)
///   # ...         comment
///
/// Element indices follow file order per kind.
struct GraphFile {
    MixedGraph graph;
    std::vector<std::optional<long long>> weights;  // per element, edges then arcs
    std::map<int, ElementSet> parts;                // part label -> elements

    bool has_weights() const;
    /// Weights with unset entries defaulted to 1.
    std::vector<long long> weights_or_default() const;
    /// Parts as a dense vector; usage error if labels are not 0..k-1.
    std::vector<ElementSet> partition_vector() const;
};

/// Parses the text format; errors carry line numbers.
GraphFile parse_graph(const std::string& text);

/// Canonical serialization: V line, then E, A, W, P lines in index order.
/// parse-serialize round-trips are idempotent.
std::string serialize_graph(const GraphFile& file);

/// DOT rendering of the graph, with optional per-part coloring.
std::string to_dot(const MixedGraph& g, const std::vector<ElementSet>& parts = {});

}  // namespace mixedforest

#endif
