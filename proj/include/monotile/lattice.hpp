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

#ifndef MONOTILE_LATTICE_HPP
#define MONOTILE_LATTICE_HPP

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

// Hexagonal lattice conventions used throughout:
//
//   * axial coordinates (q, r); cell centres in cartesian coordinates are
//     q*(1,0) + r*(1/2, sqrt(3)/2), y axis up, unit centre spacing;
//   * direction d in 0..5 points at an angle of 60*d degrees; edge d of a
//     hexagon is the edge whose midpoint lies in direction d from the centre;
//   * vertex j in 0..5 sits at an angle of 30 + 60*j degrees, so edge d spans
//     vertices (d-1 mod 6) and d.
//
// All core logic is integer-only. For exact geometry (tests, rendering) we
// use scaled integer coordinates (X, Y) = (2x, 2*sqrt(3)*y): cell centres map
// to (2q+r, 3r) and all hexagon vertices land on integer points.

namespace monotile {

inline int mod6(int a) { return ((a % 6) + 6) % 6; }

struct Cell {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
    Cell operator+(const Cell& o) const { return {q + o.q, r + o.r}; }
    Cell operator-(const Cell& o) const { return {q - o.q, r - o.r}; }
    Cell operator*(int s) const { return {q * s, r * s}; }
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.q) + "," + std::to_string(c.r) + ")";
}

// Axial step vectors, step(d) at angle 60*d degrees.
inline constexpr std::array<Cell, 6> kSteps = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

inline Cell step(int d) { return kSteps[mod6(d)]; }

inline Cell neighbor(const Cell& c, int d) { return c + step(d); }

// Rotation by 60 degrees anticlockwise about the origin.
inline Cell rotate60(const Cell& c) { return {-c.r, c.q + c.r}; }

inline Cell rotate(const Cell& c, int sixths) {
    Cell out = c;
    for (int i = 0; i < mod6(sixths); ++i) out = rotate60(out);
    return out;
}

inline int hex_distance(const Cell& a, const Cell& b) {
    int dq = a.q - b.q, dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

// Integer cartesian coordinates (X, Y) = (2x, 2*sqrt(3)*y) of a cell centre.
struct IntPoint {
    long long x = 0;
    long long y = 0;
    friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
    IntPoint operator+(const IntPoint& o) const { return {x + o.x, y + o.y}; }
    IntPoint operator-(const IntPoint& o) const { return {x - o.x, y - o.y}; }
    IntPoint operator*(long long s) const { return {x * s, y * s}; }
};

inline IntPoint center_xy(const Cell& c) { return {2LL * c.q + c.r, 3LL * c.r}; }

// Offset of vertex j from the cell centre, same scaled coordinates.
inline constexpr std::array<IntPoint, 6> kVertexOffset = {{
    {1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1},
}};

inline IntPoint vertex_xy(const Cell& c, int j) {
    return center_xy(c) + kVertexOffset[mod6(j)];
}

inline long long cross(const IntPoint& a, const IntPoint& b) {
    return a.x * b.y - a.y * b.x;
}

// Index of the neighbour's vertex that coincides with vertex v of edge d.
// v must be one of the two vertices of edge d, i.e. v == d or v == d-1.
inline int vertex_correspondence(int d, int v) {
    d = mod6(d);
    v = mod6(v);
    if (v == d) return mod6(d + 2);
    assert(v == mod6(d - 1));
    return mod6(d + 3);
}

// Canonical identifier of the undirected edge between a cell and its
// d-neighbour: the representation with d in 0..2 is canonical.
struct EdgeId {
    Cell cell;
    int d = 0;
    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

inline EdgeId canonical_edge(const Cell& c, int d) {
    d = mod6(d);
    if (d < 3) return {c, d};
    return {neighbor(c, d), d - 3};
}

inline std::string to_string(const EdgeId& e) {
    return to_string(e.cell) + ":d" + std::to_string(e.d);
}

// A finite-index sublattice of the cell lattice, stored as the column
// Hermite normal form basis {(a,0), (b,c)} with a,c >= 1 and 0 <= b < a.
// Representatives are the cells with 0 <= q < a and 0 <= r < c.
struct TorusDomain {
    int a = 1;
    int b = 0;
    int c = 1;

    friend auto operator<=>(const TorusDomain&, const TorusDomain&) = default;

    int index() const { return a * c; }

    Cell reduce(const Cell& cell) const {
        long long r = cell.r % c;
        if (r < 0) r += c;
        long long k = (cell.r - r) / c;
        long long q = (cell.q - k * b) % a;
        if (q < 0) q += a;
        return {static_cast<int>(q), static_cast<int>(r)};
    }

    std::vector<Cell> representatives() const {
        std::vector<Cell> out;
        out.reserve(static_cast<size_t>(index()));
        for (int r = 0; r < c; ++r)
            for (int q = 0; q < a; ++q) out.push_back({q, r});
        return out;
    }
};

inline std::string to_string(const TorusDomain& t) {
    return "[[" + std::to_string(t.a) + "," + std::to_string(t.b) + "],[0," +
           std::to_string(t.c) + "]]";
}

// All sublattices of index <= max_index, each exactly once, ordered by
// (index, a, b). The count at index k is the divisor sum sigma(k).
inline std::vector<TorusDomain> enumerate_sublattices(int max_index) {
    assert(max_index >= 1);
    std::vector<TorusDomain> out;
    for (int n = 1; n <= max_index; ++n)
        for (int a = 1; a <= n; ++a) {
            if (n % a != 0) continue;
            int c = n / a;
            for (int b = 0; b < a; ++b) out.push_back({a, b, c});
        }
    return out;
}

}  // namespace monotile

template <>
struct std::hash<monotile::Cell> {
    size_t operator()(const monotile::Cell& c) const {
        return std::hash<long long>()((static_cast<long long>(c.q) << 32) ^
                                      static_cast<unsigned>(c.r));
    }
};

#endif  // MONOTILE_LATTICE_HPP
