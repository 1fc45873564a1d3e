// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MIXEDFOREST_REPORT_HPP
#define MIXEDFOREST_REPORT_HPP

#include <array>
#include <vector>

#include "mixedforest/graph.hpp"

namespace mixedforest {

/// Which size criterion the equalization prioritizes: total size first
/// (gap <= 1 on |F|) or edge size first (gap <= 1 on |M| resp. |N|).
enum class EqualizeMode { TotalFirst, EdgeFirst };

/// Signed pairwise differences of one ordered pair of parts.
struct GapTriple {
    int edge;
    int arc;
    int total;
};

/// Result of a k-way equalization: the parts, the pairwise difference
/// matrix and the achieved worst-case gaps, plus the bounds the run is
/// expected to satisfy.
struct PartitionReport {
    std::vector<ElementSet> parts;
    std::vector<std::vector<GapTriple>> difference_matrix;  // [i][j] = part i - part j
    int max_edge_gap = 0;
    int max_arc_gap = 0;
    int max_total_gap = 0;
    int bound_edge_gap = 0;
    int bound_arc_gap = 0;
    int bound_total_gap = 0;

    bool within_bounds() const {
        return max_edge_gap <= bound_edge_gap && max_arc_gap <= bound_arc_gap &&
               max_total_gap <= bound_total_gap;
    }
};

/// Fills the difference matrix and achieved gaps from the parts.
PartitionReport make_report(const std::vector<ElementSet>& parts, int bound_edge, int bound_arc,
                            int bound_total);

}  // namespace mixedforest

#endif
