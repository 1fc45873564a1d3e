// Copyright (c) the mixedforest developers. See LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mixedforest/textio.hpp"

#include <sstream>

namespace mixedforest {

bool GraphFile::has_weights() const {
    for (const auto& w : weights)
        if (w) return true;
    return false;
}

std::vector<long long> GraphFile::weights_or_default() const {
    std::vector<long long> out;
    out.reserve(weights.size());
    for (const auto& w : weights) out.push_back(w.value_or(1));
    return out;
}

std::vector<ElementSet> GraphFile::partition_vector() const {
    if (parts.empty()) throw UsageError("no partition labels in file");
    int k = static_cast<int>(parts.size());
    std::vector<ElementSet> out(k);
    for (const auto& [label, members] : parts) {
        if (label < 0 || label >= k)
            throw UsageError("partition labels must be 0..k-1, got " + std::to_string(label));
        out[label] = members;
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw UsageError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::optional<int> num_vertices;
    std::vector<std::pair<int, int>> edges, arcs;
    struct WeightLine {
        int line;
        char kind;
        int index;
        long long value;
    };
    struct PartLine {
        int line;
        int part;
        char kind;
        int index;
    };
    std::vector<WeightLine> weight_lines;
    std::vector<PartLine> part_lines;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag[0] == '#') continue;

        auto expect_int = [&](const char* what) {
            long long v;
            if (!(fields >> v)) parse_fail(line_no, std::string("expected ") + what);
            return v;
        };
        auto expect_kind = [&]() {
            std::string k;
            if (!(fields >> k) || (k != "E" && k != "A"))
                parse_fail(line_no, "expected element kind E or A");
            return k[0];
        };

        if (tag == "V") {
            if (num_vertices) parse_fail(line_no, "duplicate V line");
            num_vertices = static_cast<int>(expect_int("vertex count"));
        } else if (tag == "E") {
            int u = static_cast<int>(expect_int("edge endpoint"));
            int v = static_cast<int>(expect_int("edge endpoint"));
            edges.emplace_back(u, v);
        } else if (tag == "A") {
            int t = static_cast<int>(expect_int("arc tail"));
            int h = static_cast<int>(expect_int("arc head"));
            arcs.emplace_back(t, h);
        } else if (tag == "W") {
            char kind = expect_kind();
            int index = static_cast<int>(expect_int("element index"));
            long long w = expect_int("weight");
            weight_lines.push_back({line_no, kind, index, w});
        } else if (tag == "P") {
            int part = static_cast<int>(expect_int("part label"));
            char kind = expect_kind();
            int index = static_cast<int>(expect_int("element index"));
            part_lines.push_back({line_no, part, kind, index});
        } else {
            parse_fail(line_no, "unknown line tag '" + tag + "'");
        }
        std::string trailing;
        if (fields >> trailing && trailing[0] != '#')
            parse_fail(line_no, "trailing content '" + trailing + "'");
    }

    if (!num_vertices) throw UsageError("missing V line");
    MixedGraph graph = [&] {
        try {
            return MixedGraph(*num_vertices, edges, arcs);
        } catch (const UsageError& e) {
            throw UsageError(std::string("invalid graph: ") + e.what());
        }
    }();

    GraphFile file{std::move(graph), {}, {}};
    file.weights.assign(file.graph.num_elements(), std::nullopt);
    auto element_at = [&](int line, char kind, int index) {
        ElementId e{kind == 'E' ? ElementKind::Edge : ElementKind::Arc, index};
        if (!file.graph.valid(e)) parse_fail(line, "element index out of range");
        return e;
    };
    for (const auto& w : weight_lines) {
        ElementId e = element_at(w.line, w.kind, w.index);
        int slot = e.kind == ElementKind::Edge ? e.index : file.graph.num_edges() + e.index;
        if (file.weights[slot]) parse_fail(w.line, "duplicate weight");
        file.weights[slot] = w.value;
    }
    for (const auto& p : part_lines) {
        ElementId e = element_at(p.line, p.kind, p.index);
        for (const auto& [label, members] : file.parts)
            if (members.contains(e)) parse_fail(p.line, "element assigned to two parts");
        file.parts[p.part].insert(e);
    }
    return file;
}

std::string serialize_graph(const GraphFile& file) {
    std::ostringstream out;
    const MixedGraph& g = file.graph;
    out << "V " << g.num_vertices() << "\n";
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [u, v] = g.edge(i);
        out << "E " << u << " " << v << "\n";
    }
    for (int i = 0; i < g.num_arcs(); ++i) {
        auto [t, h] = g.arc(i);
        out << "A " << t << " " << h << "\n";
    }
    for (int i = 0; i < g.num_edges(); ++i)
        if (file.weights[i]) out << "W E " << i << " " << *file.weights[i] << "\n";
    for (int i = 0; i < g.num_arcs(); ++i)
        if (file.weights[g.num_edges() + i])
            out << "W A " << i << " " << *file.weights[g.num_edges() + i] << "\n";
    for (const auto& [label, members] : file.parts) {
        for (ElementId e : members.to_vector())
            out << "P " << label << " " << (e.kind == ElementKind::Edge ? "E" : "A") << " "
                << e.index << "\n";
    }
    return out.str();
}

std::string to_dot(const MixedGraph& g, const std::vector<ElementSet>& parts) {
    static const char* kPalette[] = {"black",  "crimson", "royalblue", "forestgreen",
                                     "orange", "purple",  "saddlebrown"};
    auto color_of = [&](ElementId e) -> std::string {
        for (std::size_t p = 0; p < parts.size(); ++p)
            if (parts[p].contains(e)) return kPalette[p % std::size(kPalette)];
        return "gray";
    };

    std::ostringstream out;
    out << "digraph mixed {\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << "  v" << v << " [shape=circle];\n";
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [u, v] = g.edge(i);
        out << "  v" << u << " -> v" << v << " [dir=none, label=\"e" << i << "\", color="
            << (parts.empty() ? "black" : color_of(edge_id(i))) << "];\n";
    }
    for (int i = 0; i < g.num_arcs(); ++i) {
        auto [t, h] = g.arc(i);
        out << "  v" << t << " -> v" << h << " [label=\"a" << i << "\", color="
            << (parts.empty() ? "black" : color_of(arc_id(i))) << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mixedforest
