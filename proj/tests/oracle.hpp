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

// Test-only exact geometric model of the decorated tile.  Poses act on
// integer coordinates as explicit linear maps; adjacency is decided by
// matching edge endpoints and crossing points as exact integer pairs, fully
// independent of the modular-arithmetic decoration tables in the library.

#ifndef MONOTILE_TESTS_ORACLE_HPP
#define MONOTILE_TESTS_ORACLE_HPP

#include <array>
#include <optional>
#include <stdexcept>

#include "monotile/lattice.hpp"
#include "monotile/tile.hpp"

namespace monotile::oracle {

// Coordinates here are the library's scaled integers multiplied by 4 so that
// crossing points (quarter-edge offsets) stay integral.
struct GeoEdge {
    IntPoint end_a, end_b;   // unordered endpoints, x4
    IntPoint crossing;       // x4
    ChargeSign sign = ChargeSign::minus;
    uint8_t flags = 0;
};

using GeoTile = std::array<GeoEdge, 6>;

inline IntPoint rot60(const IntPoint& p) {
    // (x, y) in (2x_real, 2*sqrt(3)*y_real) coordinates; the image is again
    // integral because x and y always share parity on this lattice.
    if (((p.x - p.y) % 2) != 0) throw std::logic_error("rot60: parity violation");
    return {(p.x - p.y) / 2, (3 * p.x + p.y) / 2};
}

inline IntPoint reflect_vertical(const IntPoint& p) { return {-p.x, p.y}; }

// The canonical tile at the origin, straight from the base decoration data.
inline GeoTile base_geo_tile() {
    GeoTile t;
    for (int d = 0; d < 6; ++d) {
        const Decoration& dec = kBaseTable[d];
        IntPoint va = vertex_xy({0, 0}, mod6(d - 1)) * 4;
        IntPoint vb = vertex_xy({0, 0}, d) * 4;
        IntPoint pn = vertex_xy({0, 0}, dec.near_vertex) * 4;
        IntPoint pf = dec.near_vertex == d ? va : vb;
        t[d] = {va, vb, {(3 * pn.x + pf.x) / 4, (3 * pn.y + pf.y) / 4}, dec.sign, dec.flags};
    }
    return t;
}

inline GeoTile place(const TilePose& pose, const Cell& cell) {
    GeoTile t = base_geo_tile();
    for (GeoEdge& e : t) {
        if (pose.m == 1) {
            e.end_a = reflect_vertical(e.end_a);
            e.end_b = reflect_vertical(e.end_b);
            e.crossing = reflect_vertical(e.crossing);
            e.flags = mirror_flags(e.flags);
        }
        for (int i = 0; i < pose.k; ++i) {
            e.end_a = rot60(e.end_a);
            e.end_b = rot60(e.end_b);
            e.crossing = rot60(e.crossing);
        }
        IntPoint off = center_xy(cell) * 4;
        e.end_a = e.end_a + off;
        e.end_b = e.end_b + off;
        e.crossing = e.crossing + off;
    }
    return t;
}

inline bool same_segment(const GeoEdge& a, const GeoEdge& b) {
    return (a.end_a == b.end_a && a.end_b == b.end_b) ||
           (a.end_a == b.end_b && a.end_b == b.end_a);
}

struct SharedEdge {
    GeoEdge a, b;
};

// The unique geometric edge shared by tile A at the origin and tile B at the
// d-neighbour cell.
inline SharedEdge shared_edge(const TilePose& pa, const TilePose& pb, int d) {
    GeoTile ta = place(pa, {0, 0});
    GeoTile tb = place(pb, step(d));
    for (const GeoEdge& ea : ta)
        for (const GeoEdge& eb : tb)
            if (same_segment(ea, eb)) return {ea, eb};
    throw std::logic_error("tiles do not share an edge");
}

inline bool r1_match_geo(const TilePose& pa, const TilePose& pb, int d) {
    SharedEdge s = shared_edge(pa, pb, d);
    return s.a.crossing == s.b.crossing;
}

inline bool r2_match_geo(const TilePose& pa, const TilePose& pb, int d) {
    SharedEdge s = shared_edge(pa, pb, d);
    return !((s.a.flags & kCW) && (s.b.flags & kCW) && s.a.sign == s.b.sign);
}

inline bool valid_adjacency_geo(const TilePose& pa, const TilePose& pb, int d) {
    return r1_match_geo(pa, pb, d) && r2_match_geo(pa, pb, d);
}

// Geometric vertex correspondence: the neighbour's index of the same point.
inline int vertex_correspondence_geo(int d, int v) {
    IntPoint p = vertex_xy({0, 0}, v);
    Cell n = step(d);
    for (int j = 0; j < 6; ++j)
        if (vertex_xy(n, j) == p) return j;
    throw std::logic_error("vertex not shared with neighbour");
}

// World decoration re-read geometrically: the decoration of the posed tile
// on the world edge d, identified by edge endpoints.
inline Decoration world_decoration_geo(const TilePose& pose, int d) {
    GeoTile t = place(pose, {0, 0});
    IntPoint va = vertex_xy({0, 0}, mod6(d - 1)) * 4;
    IntPoint vb = vertex_xy({0, 0}, d) * 4;
    for (const GeoEdge& e : t) {
        if (!((e.end_a == va && e.end_b == vb) || (e.end_a == vb && e.end_b == va)))
            continue;
        Decoration dec;
        dec.sign = e.sign;
        dec.flags = e.flags;
        // Near vertex: the endpoint closer to the crossing.
        auto d2 = [](const IntPoint& x, const IntPoint& y) {
            long long dx = x.x - y.x, dy = x.y - y.y;
            return dx * dx + dy * dy;
        };
        dec.near_vertex = d2(e.crossing, va) < d2(e.crossing, vb) ? mod6(d - 1) : d;
        return dec;
    }
    throw std::logic_error("edge not found");
}

}  // namespace monotile::oracle

#endif  // MONOTILE_TESTS_ORACLE_HPP
