// Copyright 2026 The monotile Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONOTILE_CONSTRUCT_HPP
#define MONOTILE_CONSTRUCT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotile/analysis.hpp"
#include "monotile/patch.hpp"
#include "monotile/search.hpp"

// Generators: the standard patches (a pinned outer triangle whose interior is
// forced by line continuity alone), charge assignment over edge-graph
// components, and finite windows of the fault-line and cycle families.

namespace monotile {

inline constexpr int kMaxStandardLevel = 9;

// An anticlockwise triangle line of the given size: sides travel headings
// 0, 2 and 4 starting from the bottom-left corner tile at `anchor`.
struct TriangleSpec {
    Cell anchor;
    int size = 1;

    std::array<Cell, 3> corners() const {
        return {anchor, anchor + step(0) * size, anchor + step(0) * size + step(2) * size};
    }

    // Full poses of the triangle's own tiles: straight side cells plus the
    // three turning corners.  Corner tiles take the rotation whose top turn
    // carries the triangle line, matching the corners of forced interior
    // triangles.
    std::map<Cell, PoseEntry> line_pins() const {
        std::map<Cell, PoseEntry> pins;
        std::array<Cell, 3> cs = corners();
        const int side_rot[3] = {0, 2, 4};
        for (int side = 0; side < 3; ++side) {
            Cell from = cs[side];
            pins[from] = PoseEntry{mod6(side_rot[side] + 5), -1};  // corner turn
            for (int i = 1; i < size; ++i)
                pins[from + step(side_rot[side]) * i] = PoseEntry{side_rot[side], -1};
        }
        return pins;
    }
};

// The unique line skeleton on the closed region of a size-2^n triangle whose
// outer boundary is that triangle: the boundary is pinned and the interior
// recovered by propagation, which must not branch.
inline Patch standard_skeleton(int n) {
    if (n < 0 || n > kMaxStandardLevel)
        throw std::invalid_argument("standard_skeleton: level out of range");
    int size = 1 << n;
    Region region = triangle_region(size);
    region.pins = TriangleSpec{{0, 0}, size}.line_pins();
    ForceResult f = force_region(region, RuleMode::r1);
    if (f.status == ForceResult::Status::contradiction)
        throw std::logic_error("standard_skeleton: contradictory boundary");
    if (f.status == ForceResult::Status::stalled)
        throw std::logic_error("standard_skeleton: interior not forced by propagation");
    return *f.patch;
}

// ---------------------------------------------------------------------------
// Charge assignment.

// One charge per edge-graph component, keyed by component id.
struct ChargeChoice {
    std::map<int, ChargeSign> root_sign;
};

inline ChargeChoice uniform_charge_choice(const EdgeGraph& g, ChargeSign s) {
    ChargeChoice c;
    for (int id = 0; id < g.components_all; ++id) c.root_sign[id] = s;
    return c;
}

// Root of each component: the node with the lexicographically smallest
// straight cell.
inline std::vector<int> component_roots(const EdgeGraph& g, const Trace& tr) {
    std::vector<int> root(g.components_all, -1);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        int comp = g.component[i];
        int ei = g.nodes[i];
        if (root[comp] < 0 ||
            tr.edges[ei].cells.front() < tr.edges[root[comp]].cells.front())
            root[comp] = ei;
    }
    return root;
}

// Propagates the chosen root charges through the leads-to graph (near arcs
// preserve charge, far arcs flip it) and realizes every edge's charge as the
// chirality of its straight tiles.  Turning-only decisions follow from each
// tile carrying exactly one straight piece.
inline Patch assign_charges(const Patch& skeleton, const ChargeChoice& choice) {
    Trace tr = trace_lines(skeleton);
    EdgeGraph g = build_edge_graph(tr);

    std::vector<int> roots = component_roots(g, tr);
    for (int comp = 0; comp < g.components_all; ++comp)
        if (!choice.root_sign.count(comp))
            throw std::invalid_argument("charge choice misses component " +
                                        std::to_string(comp));

    // Undirected adjacency with flip labels.
    std::map<int, std::vector<std::pair<int, bool>>> adj;
    for (const EdgeArc& a : g.arcs) {
        bool flip = !a.near_label;
        adj[a.from].push_back({a.to, flip});
        adj[a.to].push_back({a.from, flip});
    }

    std::map<int, ChargeSign> sign;
    for (int comp = 0; comp < g.components_all; ++comp) {
        int root = roots[comp];
        sign[root] = choice.root_sign.at(comp);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (const auto& [other, flip] : adj[e]) {
                ChargeSign want = flip ? star(sign.at(e)) : sign.at(e);
                auto it = sign.find(other);
                if (it == sign.end()) {
                    sign[other] = want;
                    stack.push_back(other);
                } else if (it->second != want) {
                    throw std::runtime_error("charge propagation contradiction");
                }
            }
        }
    }

    Patch out = skeleton;
    for (auto& [cell, entry] : out.cells()) {
        int ei = tr.straight_edge_of.at(cell);
        entry.m = static_cast<int8_t>(chirality_for(sign.at(ei)));
    }
    return out;
}

inline Patch assign_charges(const Patch& skeleton) {
    Trace tr = trace_lines(skeleton);
    EdgeGraph g = build_edge_graph(tr);
    return assign_charges(skeleton, uniform_charge_choice(g, ChargeSign::minus));
}

// ---------------------------------------------------------------------------
// Fault-line windows.
//
// Inside a large standard patch the bottom side of the central second-level
// triangle is a long straight east-heading line with standard structure both
// above and below it.  A fault window is a slab around that line with the
// lower half translated horizontally; the line row consists of identical
// tiles, so the seam constraints are translation invariant.

struct FaultLineLayout {
    int level = 0;    // standard patch level used as the sample
    int size = 0;     // 2^level
    int row = 0;      // sample row of the fault line (size/4)
    int col0 = 0;     // leftmost sample column of the window's line row
};

inline FaultLineLayout fault_line_layout(int width, int height, int shift) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("fault_line_window: empty window");
    int spread = std::abs(shift);
    FaultLineLayout l;
    for (l.level = 3; l.level <= kMaxStandardLevel; ++l.level) {
        l.size = 1 << l.level;
        bool fits = width + spread <= l.size / 4 - 2 && height <= l.size / 4 - 1 &&
                    width + height + spread + 1 <= l.size / 2;
        if (fits) break;
    }
    if (l.level > kMaxStandardLevel)
        throw std::invalid_argument("fault_line_window: dimensions out of bounds");
    l.row = l.size / 4;
    l.col0 = l.size / 4 + 2 + std::max(shift, 0);
    return l;
}

// Window cells (x, y) with x in [0, width) and y in [-height, height]; the
// fault line is the row y = 0.  Rows below it show the sample shifted
// `shift` cells to the east.
inline Patch fault_line_window(int width, int height, int shift) {
    FaultLineLayout l = fault_line_layout(width, height, shift);
    Patch sample = assign_charges(standard_skeleton(l.level));
    Patch out;
    for (int y = -height; y <= height; ++y) {
        for (int x = 0; x < width; ++x) {
            Cell src{l.col0 + x - (y < 0 ? shift : 0), l.row + y};
            const PoseEntry* e = sample.find(src);
            if (!e) throw std::logic_error("fault_line_window: sample cell missing");
            out.set({x, y}, *e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle windows.
//
// Three lines, each with a single turn, arranged cyclically with 2^n tiles
// from one turning tile to the next; every incoming edge leads far into the
// following line's outgoing edge.  The three turning tiles and the line
// cells are pinned (charges chosen per component) and the rest of the window
// is completed by search.

struct CycleLayout {
    int spacing = 1;  // 2^n
    std::array<Cell, 3> turns;      // turning tiles T1, T2, T3
    std::array<PoseEntry, 3> turn_poses;
    Cell center;                    // disc centre of the window
};

inline CycleLayout n_cycle_layout(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("n_cycle_window: n out of range");
    CycleLayout l;
    int a = 1 << n;
    l.spacing = a;
    l.turns = {Cell{0, 0}, Cell{0, a}, Cell{-a, a}};
    l.turn_poses = {PoseEntry{4, 1}, PoseEntry{0, 1}, PoseEntry{2, 1}};
    l.center = {-(a / 3), (2 * a) / 3};
    return l;
}

inline Patch n_cycle_window(int n, int radius) {
    CycleLayout l = n_cycle_layout(n);
    int a = l.spacing;
    if (radius < a + 2 || radius > 24)
        throw std::invalid_argument("n_cycle_window: radius out of bounds");

    Region region = disc_region(l.center, radius);
    std::map<Cell, PoseEntry> pins;
    for (int i = 0; i < 3; ++i) pins[l.turns[i]] = l.turn_poses[i];

    // The six line rays; incoming edges carry negative charge, outgoing
    // edges (through the turning tiles) positive.
    struct Ray {
        Cell from;
        int dir;
        PoseEntry pose;
    };
    const Ray rays[6] = {
        {{0, 0}, 3, PoseEntry{0, 0}},    // incoming east-heading line, to the west
        {{0, 0}, 2, PoseEntry{2, 1}},    // outgoing through T3
        {{0, a}, 5, PoseEntry{2, 0}},    // incoming, to the south-east
        {{0, a}, 4, PoseEntry{4, 1}},    // outgoing through T1
        {{-a, a}, 1, PoseEntry{4, 0}},   // incoming, to the north
        {{-a, a}, 0, PoseEntry{0, 1}},   // outgoing through T2
    };
    for (const Ray& ray : rays) {
        for (int i = 1;; ++i) {
            Cell c = ray.from + step(ray.dir) * i;
            if (hex_distance(c, l.center) > radius) break;
            pins[c] = ray.pose;
        }
    }
    region.pins = std::move(pins);

    SearchResult res = complete_region(region, RuleMode::full);
    if (res.verdict != Verdict::sat)
        throw std::logic_error("n_cycle_window: completion failed");
    return *res.patch;
}

}  // namespace monotile

#endif  // MONOTILE_CONSTRUCT_HPP
