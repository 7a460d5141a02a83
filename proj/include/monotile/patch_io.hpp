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

#ifndef MONOTILE_PATCH_IO_HPP
#define MONOTILE_PATCH_IO_HPP

#include <sstream>
#include <stdexcept>
#include <string>

#include "monotile/patch.hpp"

// Text format, version 1.
//
//   monotile-patch v1            (or: monotile-torus v1 <a> <b> <c>)
//   # comment
//   <q> <r> <k> <m>              one cell per line, m in {0, 1, ?}
//
// Cell order is irrelevant on input; serialization emits cells in
// lexicographic (q, r) order so output is byte-stable.

namespace monotile {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

inline std::string serialize(const Patch& p) {
    std::ostringstream os;
    if (p.torus()) {
        const TorusDomain& t = *p.torus();
        os << "monotile-torus v1 " << t.a << ' ' << t.b << ' ' << t.c << '\n';
    } else {
        os << "monotile-patch v1\n";
    }
    for (const auto& [cell, e] : p.cells()) {
        os << cell.q << ' ' << cell.r << ' ' << int(e.k) << ' ';
        if (e.is_skeleton())
            os << '?';
        else
            os << int(e.m);
        os << '\n';
    }
    return os.str();
}

inline Patch parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            ++lineno;
            size_t pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            size_t end = line.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            out = line.substr(0, end + 1);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(lineno, "missing header");

    Patch patch;
    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic == "monotile-patch") {
        if (version != "v1") throw ParseError(lineno, "unsupported version '" + version + "'");
        std::string extra;
        if (hs >> extra) throw ParseError(lineno, "trailing tokens in header");
    } else if (magic == "monotile-torus") {
        if (version != "v1") throw ParseError(lineno, "unsupported version '" + version + "'");
        TorusDomain t;
        if (!(hs >> t.a >> t.b >> t.c)) throw ParseError(lineno, "bad torus basis");
        if (t.a < 1 || t.c < 1 || t.b < 0 || t.b >= t.a)
            throw ParseError(lineno, "torus basis not in Hermite normal form");
        patch = Patch(t);
    } else {
        throw ParseError(lineno, "unrecognized header '" + header + "'");
    }

    std::string content;
    while (next_content_line(content)) {
        std::istringstream ls(content);
        Cell cell;
        int k;
        std::string mtok;
        if (!(ls >> cell.q >> cell.r >> k >> mtok))
            throw ParseError(lineno, "expected 'q r k m'");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
        if (k < 0 || k > 5) throw ParseError(lineno, "rotation out of range");
        PoseEntry e;
        e.k = static_cast<int8_t>(k);
        if (mtok == "?")
            e.m = -1;
        else if (mtok == "0")
            e.m = 0;
        else if (mtok == "1")
            e.m = 1;
        else
            throw ParseError(lineno, "chirality must be 0, 1 or ?");
        if (!patch.insert(cell, e))
            throw ParseError(lineno, "duplicate cell " + to_string(patch.reduce(cell)));
    }
    return patch;
}

}  // namespace monotile

#endif  // MONOTILE_PATCH_IO_HPP
