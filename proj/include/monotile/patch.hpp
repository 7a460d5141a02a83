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

#ifndef MONOTILE_PATCH_HPP
#define MONOTILE_PATCH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotile/lattice.hpp"
#include "monotile/tile.hpp"

namespace monotile {

// A placed tile: rotation always known, chirality optionally unassigned
// ("skeleton" entries carry line decorations but no charges).
struct PoseEntry {
    int8_t k = 0;
    int8_t m = -1;  // 0 or 1 when charged, -1 for skeleton entries

    PoseEntry() = default;
    PoseEntry(int k_, int m_) : k(static_cast<int8_t>(k_)), m(static_cast<int8_t>(m_)) {}
    explicit PoseEntry(const TilePose& p) : k(static_cast<int8_t>(p.k)), m(static_cast<int8_t>(p.m)) {}

    bool is_skeleton() const { return m < 0; }
    TilePose pose() const { return {k, m < 0 ? 0 : m}; }

    friend bool operator==(const PoseEntry&, const PoseEntry&) = default;
};

// Finite map from cells to pose entries.  When a torus domain is present the
// patch lives on the quotient: cells are reduced to representatives and
// adjacency wraps through the lattice.
class Patch {
public:
    Patch() = default;
    explicit Patch(TorusDomain t) : torus_(t) {}

    const std::optional<TorusDomain>& torus() const { return torus_; }

    Cell reduce(const Cell& c) const { return torus_ ? torus_->reduce(c) : c; }

    void set(const Cell& cell, PoseEntry e) { cells_[reduce(cell)] = e; }

    // Inserts, refusing duplicates (after torus reduction).
    bool insert(const Cell& cell, PoseEntry e) {
        return cells_.emplace(reduce(cell), e).second;
    }

    const PoseEntry* find(const Cell& cell) const {
        auto it = cells_.find(reduce(cell));
        return it == cells_.end() ? nullptr : &it->second;
    }

    bool contains(const Cell& cell) const { return find(cell) != nullptr; }

    const PoseEntry* find_neighbor(const Cell& cell, int d) const {
        return find(neighbor(cell, d));
    }

    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    // Deterministically ordered (lexicographic by cell).
    const std::map<Cell, PoseEntry>& cells() const { return cells_; }
    std::map<Cell, PoseEntry>& cells() { return cells_; }

    friend bool operator==(const Patch& a, const Patch& b) {
        return a.torus_ == b.torus_ && a.cells_ == b.cells_;
    }

private:
    std::map<Cell, PoseEntry> cells_;
    std::optional<TorusDomain> torus_;
};

enum class Rule : uint8_t { R1 = 1, R2 = 2 };

struct Violation {
    EdgeId edge;
    Rule rule = Rule::R1;
    // World decorations of the two sides; for skeleton entries only the
    // near-vertex field is meaningful.
    Decoration side_a;
    Decoration side_b;
    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string to_string(const Violation& v) {
    std::string s = (v.rule == Rule::R1 ? "R1" : "R2");
    s += " violation at edge " + to_string(v.edge);
    if (v.rule == Rule::R2) {
        s += " (";
        s += to_char(v.side_a.sign);
        s += " vs ";
        s += to_char(v.side_b.sign);
        s += ")";
    }
    return s;
}

// Checks every shared edge once.  Pairs involving a skeleton entry are held
// to R1 only; boundary edges impose no constraint.
inline std::vector<Violation> validate(const Patch& p) {
    std::vector<Violation> out;
    for (const auto& [cell, entry] : p.cells()) {
        for (int d = 0; d < 3; ++d) {
            const PoseEntry* other = p.find_neighbor(cell, d);
            if (!other) continue;
            TilePose pa = entry.pose();
            TilePose pb = other->pose();
            if (!r1_match(pa, pb, d)) {
                out.push_back({canonical_edge(cell, d), Rule::R1,
                               world_decoration(pa, d), world_decoration(pb, d + 3)});
            } else if (!entry.is_skeleton() && !other->is_skeleton() &&
                       !r2_match(pa, pb, d)) {
                out.push_back({canonical_edge(cell, d), Rule::R2,
                               world_decoration(pa, d), world_decoration(pb, d + 3)});
            }
        }
    }
    return out;
}

// Forgets the charge decorations: every entry becomes a skeleton entry.
inline Patch strip_charges(const Patch& p) {
    Patch out = p;
    for (auto& [cell, entry] : out.cells()) entry.m = -1;
    return out;
}

// Rotates a planar patch by 60*sixths degrees about the origin and then
// translates it.  Chirality is preserved; rotations advance by sixths.
inline Patch transform(const Patch& p, int sixths, const Cell& translation) {
    if (p.torus()) throw std::invalid_argument("transform: torus patch");
    Patch out;
    for (const auto& [cell, entry] : p.cells()) {
        PoseEntry e = entry;
        e.k = static_cast<int8_t>(mod6(e.k + sixths));
        out.set(rotate(cell, sixths) + translation, e);
    }
    return out;
}

}  // namespace monotile

#endif  // MONOTILE_PATCH_HPP
