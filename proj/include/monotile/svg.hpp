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

#ifndef MONOTILE_SVG_HPP
#define MONOTILE_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "monotile/patch.hpp"

// SVG 1.1 rendering: one hexagon per cell, black polylines for the line
// decorations (crossings offset a quarter edge towards their near vertex),
// charge signs with orientation arrows, grey fill for reflected tiles.
// Output is byte-identical for identical input and options.

namespace monotile {

struct SvgOptions {
    double scale = 36.0;    // pixels per lattice spacing
    bool show_charges = true;
    double margin = 0.6;    // lattice units around the bounding box
};

namespace detail {

struct Pt {
    double x = 0, y = 0;
    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(double s) const { return {x * s, y * s}; }
};

// Lattice coordinates to drawing coordinates (y axis flipped for SVG).
inline Pt to_draw(const IntPoint& p, double scale) {
    return {scale * p.x / 2.0, -scale * p.y / (2.0 * std::sqrt(3.0))};
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid negative zero
    if (std::string(buf) == "-0.00") return "0.00";
    return buf;
}

inline Pt crossing_point(const Cell& cell, int edge, int near_vertex, double scale) {
    IntPoint pn = vertex_xy(cell, near_vertex);
    int far = near_vertex == mod6(edge) ? mod6(edge - 1) : mod6(edge);
    IntPoint pf = vertex_xy(cell, far);
    Pt a = to_draw(pn, scale), b = to_draw(pf, scale);
    return a * 0.75 + b * 0.25;
}

}  // namespace detail

inline std::string render_svg(const Patch& patch, const SvgOptions& opt = {}) {
    using detail::Pt;
    using detail::fmt;
    double s = opt.scale;

    if (patch.empty()) {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
               "width=\"16\" height=\"16\" viewBox=\"0 0 16 16\"></svg>\n";
    }

    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const auto& [cell, e] : patch.cells()) {
        for (int j = 0; j < 6; ++j) {
            Pt p = detail::to_draw(vertex_xy(cell, j), s);
            minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
        }
    }
    double m = opt.margin * s;
    minx -= m, miny -= m, maxx += m, maxy += m;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(maxx - minx) + "\" height=\"" + fmt(maxy - miny) + "\" viewBox=\"" +
           fmt(minx) + " " + fmt(miny) + " " + fmt(maxx - minx) + " " +
           fmt(maxy - miny) + "\">\n";

    auto line = [&](Pt a, Pt b, const std::string& stroke, double width) {
        out += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" +
               fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\" stroke=\"" + stroke +
               "\" stroke-width=\"" + fmt(width) + "\" stroke-linecap=\"round\"/>\n";
    };

    // Hexagons first, then decorations on top.
    for (const auto& [cell, e] : patch.cells()) {
        out += "<polygon points=\"";
        for (int j = 0; j < 6; ++j) {
            Pt p = detail::to_draw(vertex_xy(cell, j), s);
            if (j) out += " ";
            out += fmt(p.x) + "," + fmt(p.y);
        }
        const char* fill = (!e.is_skeleton() && e.m == 1) ? "#cccccc" : "#ffffff";
        out += std::string("\" fill=\"") + fill + "\" stroke=\"#888888\" stroke-width=\"" +
               fmt(s * 0.02) + "\"/>\n";
    }

    for (const auto& [cell, e] : patch.cells()) {
        double lw = s * 0.05;
        Pt center = detail::to_draw(center_xy(cell), s);
        // Straight piece.
        {
            int ein = piece_entry_edge(e.k, Piece::straight);
            int eout = piece_exit_edge(e.k, Piece::straight);
            Pt a = detail::crossing_point(cell, ein, world_decoration({e.k, 0}, ein).near_vertex, s);
            Pt b = detail::crossing_point(cell, eout, world_decoration({e.k, 0}, eout).near_vertex, s);
            line(a, b, "black", lw);
        }
        // Turns, drawn as two segments through an elbow near the corner.
        for (Piece piece : {Piece::turn_top, Piece::turn_bottom}) {
            int ein = piece_entry_edge(e.k, piece);
            int eout = piece_exit_edge(e.k, piece);
            int corner = piece == Piece::turn_top ? mod6(1 + e.k) : mod6(4 + e.k);
            Pt a = detail::crossing_point(cell, ein, world_decoration({e.k, 0}, ein).near_vertex, s);
            Pt b = detail::crossing_point(cell, eout, world_decoration({e.k, 0}, eout).near_vertex, s);
            Pt v = detail::to_draw(vertex_xy(cell, corner), s);
            Pt elbow = v + (center - v) * 0.25;
            line(a, elbow, "black", lw);
            line(elbow, b, "black", lw);
        }
        if (!opt.show_charges || e.is_skeleton()) continue;
        // Charge signs and orientation arrows along each edge.
        for (int d = 0; d < 6; ++d) {
            Decoration dec = world_decoration(e.pose(), d);
            double theta = M_PI / 3.0 * d;
            Pt radial{std::cos(theta), -std::sin(theta)};  // y flipped
            Pt glyph = center + radial * (0.33 * s);
            out += "<text x=\"" + fmt(glyph.x) + "\" y=\"" + fmt(glyph.y + 0.06 * s) +
                   "\" font-size=\"" + fmt(0.18 * s) +
                   "\" text-anchor=\"middle\" fill=\"#333333\">";
            out += dec.sign == ChargeSign::plus ? '+' : '-';
            out += "</text>\n";
            Pt tangent{-std::sin(theta), -std::cos(theta)};  // anticlockwise, y flipped
            for (int f = 0; f < 2; ++f) {
                bool cw = f == 0;
                if (!(dec.flags & (cw ? kCW : kCCW))) continue;
                Pt dir = cw ? tangent * -1.0 : tangent;
                Pt base = center + radial * ((cw ? 0.42 : 0.47) * s);
                Pt tip = base + dir * (0.16 * s);
                Pt tail = base - dir * (0.16 * s);
                line(tail, tip, "#555555", s * 0.015);
                Pt back = tip - dir * (0.05 * s);
                Pt side{dir.y, -dir.x};
                line(tip, back + side * (0.04 * s), "#555555", s * 0.015);
                line(tip, back - side * (0.04 * s), "#555555", s * 0.015);
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace monotile

#endif  // MONOTILE_SVG_HPP
