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

#ifndef MONOTILE_TILE_HPP
#define MONOTILE_TILE_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>

#include "monotile/lattice.hpp"

// The decorated hexagonal tile and its matching rules.
//
// Each edge of the tile carries three pieces of data:
//   * a charge sign (+ or -),
//   * a nonempty set of orientation flags (clockwise / anticlockwise),
//   * the position of the single black-line crossing on that edge, stored as
//     the edge vertex the crossing is offset towards ("near vertex").
//
// Two tiles may meet across a shared edge only if
//   R1: the black-line crossings coincide (near vertices correspond), and
//   R2: when both sides carry a clockwise-oriented charge at the edge, the
//       two signs are opposite.
//
// In the canonical pose the tile has one horizontal straight line segment,
// offset towards the top, entering at the west edge and leaving at the east
// edge, plus two turning segments around the top and bottom vertices.  The
// twelve poses are rotation k in 0..5 (60-degree anticlockwise steps) applied
// after an optional reflection across the vertical axis (chirality m).

namespace monotile {

enum class ChargeSign : uint8_t { minus = 0, plus = 1 };

inline ChargeSign star(ChargeSign s) {
    return s == ChargeSign::minus ? ChargeSign::plus : ChargeSign::minus;
}

inline char to_char(ChargeSign s) { return s == ChargeSign::minus ? '-' : '+'; }

// Orientation flag bitmask; a decoration always carries at least one flag.
inline constexpr uint8_t kCW = 1;
inline constexpr uint8_t kCCW = 2;
inline constexpr uint8_t kBoth = kCW | kCCW;

struct Decoration {
    ChargeSign sign = ChargeSign::minus;
    uint8_t flags = kBoth;
    int near_vertex = 0;  // one of the two vertices of the decorated edge

    friend bool operator==(const Decoration&, const Decoration&) = default;
};

struct TilePose {
    int k = 0;  // rotation, 0..5
    int m = 0;  // chirality: 0 = canonical tile, 1 = mirror image

    friend auto operator<=>(const TilePose&, const TilePose&) = default;
};

// Dense pose index with k ascending, then m: index = 2k + m.
inline int pose_index(const TilePose& p) { return 2 * p.k + p.m; }
inline TilePose pose_from_index(int i) { return {i / 2, i % 2}; }
inline constexpr int kPoseCount = 12;

// Canonical-pose decoration table, edge d0 (east) through d5 (south-east).
inline constexpr std::array<Decoration, 6> kBaseTable = {{
    {ChargeSign::plus, kBoth, 0},   // d0 E : straight-line exit
    {ChargeSign::plus, kCCW, 1},    // d1 NE: top-turn exit
    {ChargeSign::minus, kCW, 1},    // d2 NW: top-turn entry
    {ChargeSign::minus, kBoth, 2},  // d3 W : straight-line entry
    {ChargeSign::minus, kCCW, 4},   // d4 SW: bottom-turn exit
    {ChargeSign::plus, kCW, 4},     // d5 SE: bottom-turn entry
}};

inline int mirror_edge(int d) { return mod6(3 - d); }
inline int mirror_vertex(int v) { return mod6(2 - v); }

inline uint8_t mirror_flags(uint8_t flags) {
    uint8_t out = 0;
    if (flags & kCW) out |= kCCW;
    if (flags & kCCW) out |= kCW;
    return out;
}

// Decoration presented by a posed tile at world edge d.  The reflection is
// applied before the rotation; it preserves signs, swaps the orientation
// flags and mirrors the near vertex.
inline Decoration world_decoration(const TilePose& p, int d) {
    d = mod6(d);
    if (p.m == 0) {
        Decoration dec = kBaseTable[mod6(d - p.k)];
        dec.near_vertex = mod6(dec.near_vertex + p.k);
        return dec;
    }
    Decoration dec = kBaseTable[mirror_edge(mod6(d - p.k))];
    dec.flags = mirror_flags(dec.flags);
    dec.near_vertex = mod6(mirror_vertex(dec.near_vertex) + p.k);
    return dec;
}

// pb occupies the d-neighbour of pa's cell.
inline bool r1_match(const TilePose& pa, const TilePose& pb, int d) {
    int want = vertex_correspondence(d, world_decoration(pa, d).near_vertex);
    return world_decoration(pb, d + 3).near_vertex == want;
}

inline bool r2_match(const TilePose& pa, const TilePose& pb, int d) {
    Decoration a = world_decoration(pa, d);
    Decoration b = world_decoration(pb, d + 3);
    return !((a.flags & kCW) && (b.flags & kCW) && a.sign == b.sign);
}

inline bool valid_adjacency(const TilePose& pa, const TilePose& pb, int d) {
    return r1_match(pa, pb, d) && r2_match(pa, pb, d);
}

// The clockwise charge on the inner side of the tile's straight segment.
inline ChargeSign tile_charge(const TilePose& p) {
    return p.m == 0 ? ChargeSign::minus : ChargeSign::plus;
}

inline int chirality_for(ChargeSign s) { return s == ChargeSign::minus ? 0 : 1; }

// ---------------------------------------------------------------------------
// Black-line piece model.
//
// Every pose splits its decoration into three directed pieces.  For rotation
// k (chirality does not move the lines):
//   straight     enters edge 3+k, leaves edge k,   heading 60*k degrees;
//   top turn     enters edge 2+k, leaves edge 1+k  (corner at vertex 1+k);
//   bottom turn  enters edge 5+k, leaves edge 4+k  (corner at vertex 4+k).
// Exit crossings sit near vertex e of exit edge e, entry crossings near
// vertex f-1 of entry edge f, so a line always continues into a piece of the
// neighbour travelling the same way; turns bend 120 degrees to the left.

enum class Piece : uint8_t { straight = 0, turn_top = 1, turn_bottom = 2 };

inline int piece_entry_edge(int k, Piece p) {
    switch (p) {
        case Piece::straight: return mod6(3 + k);
        case Piece::turn_top: return mod6(2 + k);
        default: return mod6(5 + k);
    }
}

inline int piece_exit_edge(int k, Piece p) {
    switch (p) {
        case Piece::straight: return mod6(k);
        case Piece::turn_top: return mod6(1 + k);
        default: return mod6(4 + k);
    }
}

// Heading (direction index) of the line as it leaves the piece.
inline int piece_exit_heading(int k, Piece p) { return piece_exit_edge(k, p); }

// Which piece of a rotation-k tile has its entry crossing on world edge f,
// if any (otherwise the crossing on f is an exit).
inline std::optional<Piece> piece_entered_at(int k, int f) {
    f = mod6(f);
    if (f == mod6(3 + k)) return Piece::straight;
    if (f == mod6(2 + k)) return Piece::turn_top;
    if (f == mod6(5 + k)) return Piece::turn_bottom;
    return std::nullopt;
}

inline std::optional<Piece> piece_exited_at(int k, int f) {
    f = mod6(f);
    if (f == mod6(k)) return Piece::straight;
    if (f == mod6(1 + k)) return Piece::turn_top;
    if (f == mod6(4 + k)) return Piece::turn_bottom;
    return std::nullopt;
}

// Rotations whose named piece receives a line arriving with the given
// heading: straight continues with rotation h, a top turn needs h+1 and a
// bottom turn needs h+4.
inline int rotation_for_entry(int heading, Piece p) {
    switch (p) {
        case Piece::straight: return mod6(heading);
        case Piece::turn_top: return mod6(heading + 1);
        default: return mod6(heading + 4);
    }
}

}  // namespace monotile

#endif  // MONOTILE_TILE_HPP
