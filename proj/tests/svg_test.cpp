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

#include <catch2/catch_amalgamated.hpp>

#include "monotile/construct.hpp"
#include "monotile/svg.hpp"

using namespace monotile;

TEST_CASE("empty patch renders to a valid empty document") {
    std::string svg = render_svg(Patch{});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polygon") == std::string::npos);
}

TEST_CASE("canonical tile shows a horizontal segment above the centre") {
    Patch p;
    p.set({0, 0}, PoseEntry{0, 0});
    SvgOptions opt;
    opt.scale = 40;
    std::string svg = render_svg(p, opt);
    // Crossings of the straight piece: west and east edges (x = +-20 at the
    // apothem), both a quarter edge above the midline.  In drawing
    // coordinates (y down, centre 0): y = -40 * (1/2) / (2*sqrt(3)) = -5.77.
    CHECK(svg.find("<line x1=\"-20.00\" y1=\"-5.77\" x2=\"20.00\" y2=\"-5.77\"") !=
          std::string::npos);
    CHECK(svg.find("fill=\"#ffffff\"") != std::string::npos);
    CHECK(svg.find("fill=\"#cccccc\"") == std::string::npos);
}

TEST_CASE("reflected tiles are shaded grey") {
    Patch p;
    p.set({0, 0}, PoseEntry{0, 1});
    std::string svg = render_svg(p);
    CHECK(svg.find("fill=\"#cccccc\"") != std::string::npos);
}

TEST_CASE("skeleton entries render without charge glyphs") {
    Patch p;
    p.set({0, 0}, PoseEntry{0, -1});
    std::string svg = render_svg(p);
    CHECK(svg.find("<text") == std::string::npos);

    Patch q;
    q.set({0, 0}, PoseEntry{0, 0});
    CHECK(render_svg(q).find("<text") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    Patch p = assign_charges(standard_skeleton(2));
    CHECK(render_svg(p) == render_svg(p));
}

TEST_CASE("every cell gets a hexagon and three line pieces") {
    Patch p = standard_skeleton(1);
    std::string svg = render_svg(p);
    size_t polygons = 0, pos = 0;
    while ((pos = svg.find("<polygon", pos)) != std::string::npos) ++polygons, ++pos;
    CHECK(polygons == p.size());
}
