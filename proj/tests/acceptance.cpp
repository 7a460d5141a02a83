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

// Acceptance suite: end-to-end verification of the laboratory's guarantees,
// one pass/fail line per criterion.  Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monotile/analysis.hpp"
#include "monotile/construct.hpp"
#include "monotile/patch_io.hpp"
#include "monotile/search.hpp"
#include "oracle.hpp"

using namespace monotile;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Corpus {
    std::vector<std::pair<std::string, Patch>> patches;
};

// Shared corpus: charged standard patches, exotic windows, and 100
// deterministic search-completed discs of radius 4.
Corpus build_corpus() {
    Corpus c;
    for (int n = 0; n <= 5; ++n)
        c.patches.push_back({"standard-" + std::to_string(n),
                             assign_charges(standard_skeleton(n))});
    for (int shift : {0, 1, 2})
        c.patches.push_back({"fault-line-shift-" + std::to_string(shift),
                             fault_line_window(6, 3, shift)});
    for (int n : {0, 1, 2})
        c.patches.push_back({"n-cycle-" + std::to_string(n),
                             n_cycle_window(n, (1 << n) + 4)});

    int found = 0;
    for (unsigned seed = 0; found < 100; ++seed) {
        std::mt19937 rng(seed);
        Region r = disc_region({0, 0}, 4);
        std::uniform_int_distribution<int> coord(-2, 2), pose(0, 11);
        for (int pins = 0; pins < 2; ++pins) {
            int v = pose(rng);
            r.pins[{coord(rng), coord(rng)}] = PoseEntry{v / 2, v % 2};
        }
        SearchResult res = complete_region(r, RuleMode::full, 2'000'000);
        if (res.verdict != Verdict::sat) continue;
        c.patches.push_back({"disc-seed-" + std::to_string(seed), *res.patch});
        ++found;
        if (seed > 10000) throw std::runtime_error("disc corpus generation stuck");
    }
    return c;
}

bool criterion_existence(std::string& detail) {
    double t0 = now_ms();
    bool ok = true;
    size_t p5_tiles = 0;
    double p5_ms = 0;
    for (int n = 0; n <= 5; ++n) {
        double s0 = now_ms();
        Patch full = assign_charges(standard_skeleton(n));
        size_t violations = validate(full).size();
        double s1 = now_ms();
        ok = ok && violations == 0;
        if (n == 5) {
            p5_tiles = full.size();
            p5_ms = s1 - s0;
        }
    }
    ok = ok && p5_tiles >= 500 && p5_ms < 5000.0;
    std::ostringstream os;
    os << "levels 0..5 zero violations; level 5 has " << p5_tiles << " tiles in "
       << static_cast<long long>(p5_ms) << " ms (limit 5000); total "
       << static_cast<long long>(now_ms() - t0) << " ms";
    detail = os.str();
    return ok;
}

bool criterion_ruler_sequence(std::string& detail) {
    Patch p4 = standard_skeleton(4);
    Trace tr = trace_lines(p4);
    std::map<PieceRef, int> turn_size;
    for (const Triangle& t : tr.triangles)
        for (const PieceRef& pr : tr.lines[t.line].pieces)
            if (pr.piece != Piece::straight) turn_size[pr] = t.size;

    const std::vector<int> want = {1, 2, 1, 4, 1, 2, 1, 8, 1, 2, 1, 4, 1, 2};
    std::vector<int> got;
    for (int i = 1; i <= 14; ++i) {
        auto it = turn_size.find({{i, 0}, Piece::turn_top});
        got.push_back(it == turn_size.end() ? -1 : it->second);
    }
    auto corner = turn_size.find({{16, 0}, Piece::turn_top});
    int sixteenth = corner == turn_size.end() ? -1 : corner->second;

    std::ostringstream os;
    os << "sizes along the level-4 bottom edge:";
    for (int s : got) os << ' ' << s;
    os << "; 16th = " << sixteenth;
    detail = os.str();
    return got == want && sixteenth == 16;
}

bool criterion_power_of_two(const Corpus& corpus, std::string& detail) {
    const std::set<int> allowed = {1, 2, 4, 8, 16, 32};
    long long triangles = 0;
    for (const auto& [name, p] : corpus.patches) {
        Trace tr = trace_lines(p);
        for (const Triangle& t : tr.triangles) {
            ++triangles;
            if (!allowed.count(t.size)) {
                detail = "triangle of size " + std::to_string(t.size) + " in " + name;
                return false;
            }
        }
    }
    detail = std::to_string(triangles) + " complete triangles across " +
             std::to_string(corpus.patches.size()) + " patches, all in {1,2,4,8,16,32}";
    return triangles > 0;
}

bool criterion_charge_transfer(const Corpus& corpus, std::string& detail) {
    long long checked = 0;
    for (const auto& [name, p] : corpus.patches) {
        if (name.rfind("standard-", 0) == 0 && name < "standard-2") continue;
        Trace tr = trace_lines(p);
        EdgeGraph g = build_edge_graph(tr);
        CheckStats st = check_charge_transfer(g, tr);
        checked += st.checked;
        if (!st.ok || st.skipped != 0) {
            detail = "failure in " + name;
            return false;
        }
    }
    detail = std::to_string(checked) + " arcs checked, all consistent";
    return checked > 0;
}

bool criterion_no_fff(const Corpus& corpus, std::string& detail) {
    for (const auto& [name, p] : corpus.patches) {
        Trace tr = trace_lines(p);
        if (!check_no_fff_cycle(build_edge_graph(tr))) {
            detail = "far 3-cycle in " + name;
            return false;
        }
    }
    detail = "zero far 3-cycles across " + std::to_string(corpus.patches.size()) +
             " patches";
    return true;
}

bool criterion_length_growth(const Corpus& corpus, std::string& detail) {
    long long checked = 0, skipped = 0;
    for (const auto& [name, p] : corpus.patches) {
        Trace tr = trace_lines(p);
        CheckStats st = check_length_growth(build_edge_graph(tr), tr);
        checked += st.checked;
        skipped += st.skipped;
        if (!st.ok) {
            detail = "violation in " + name;
            return false;
        }
    }
    std::ostringstream os;
    os << checked << " fully interior runs checked (" << skipped << " truncated skipped)";
    detail = os.str();
    return checked > 0;
}

bool criterion_sweep(std::string& detail) {
    double t0 = now_ms();
    SweepReport small = aperiodicity_sweep(4);
    double small_ms = now_ms() - t0;
    bool small_ok = small.pass() && small_ms < 60'000.0;

    double t1 = now_ms();
    SweepReport big = aperiodicity_sweep(12);
    double big_ms = now_ms() - t1;
    bool big_ok = big.pass() && big_ms < 1'800'000.0;
    for (const SweepEntry& e : big.entries) big_ok = big_ok && e.verdict == Verdict::unsat;

    long long nodes = 0;
    for (const SweepEntry& e : big.entries) nodes += e.nodes;
    std::ostringstream os;
    os << "max-index 4: " << small.entries.size() << " domains UNSAT in "
       << static_cast<long long>(small_ms) << " ms (limit 60000); max-index 12: "
       << big.entries.size() << " domains UNSAT in " << static_cast<long long>(big_ms)
       << " ms (limit 1800000), " << nodes << " nodes, no timeouts";
    detail = os.str();
    return small_ok && big_ok;
}

bool criterion_charge_lift_count(std::string& detail) {
    Patch skel = standard_skeleton(3);
    Trace tr = trace_lines(skel);
    EdgeGraph g = build_edge_graph(tr);

    // Interior core: complete edges and the arcs among them.
    std::vector<int> core;  // edge indices
    std::map<int, int> core_pos;
    for (int ei : g.nodes)
        if (tr.edges[ei].complete()) {
            core_pos[ei] = static_cast<int>(core.size());
            core.push_back(ei);
        }
    std::vector<std::tuple<int, int, bool>> core_arcs;
    for (const EdgeArc& a : g.arcs)
        if (core_pos.count(a.from) && core_pos.count(a.to))
            core_arcs.emplace_back(core_pos[a.from], core_pos[a.to], a.near_label);

    // Brute force over all edge-charge assignments of the core.
    long long valid = 0;
    std::set<std::string> assignments;
    for (long long bits = 0; bits < (1LL << core.size()); ++bits) {
        bool ok = true;
        for (const auto& [from, to, near] : core_arcs) {
            bool equal = ((bits >> from) & 1) == ((bits >> to) & 1);
            if (equal != near) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++valid;
            std::string key;
            for (size_t i = 0; i < core.size(); ++i) key += char('0' + ((bits >> i) & 1));
            assignments.insert(key);
        }
    }
    long long expect = 1LL << g.components_interior;

    // assign_charges over every root choice, restricted to the core tiles.
    std::set<std::string> restrictions;
    for (int bits = 0; bits < (1 << g.components_all); ++bits) {
        ChargeChoice choice;
        for (int id = 0; id < g.components_all; ++id)
            choice.root_sign[id] = (bits >> id & 1) ? ChargeSign::plus : ChargeSign::minus;
        Patch full = assign_charges(skel, choice);
        std::string key;
        for (int ei : core)
            for (const Cell& c : tr.edges[ei].cells) key += char('0' + full.find(c)->m);
        restrictions.insert(key);
    }

    std::ostringstream os;
    os << core.size() << " interior edges, " << g.components_interior
       << " components: brute force " << valid << " = 2^" << g.components_interior
       << " = " << expect << "; distinct restricted assignments "
       << restrictions.size();
    detail = os.str();
    return valid == expect && static_cast<long long>(restrictions.size()) == expect;
}

bool criterion_exotic(std::string& detail) {
    for (int shift : {0, 1, 2})
        if (!validate(fault_line_window(6, 3, shift)).empty()) {
            detail = "fault-line shift " + std::to_string(shift) + " invalid";
            return false;
        }
    for (int n : {0, 1, 2})
        if (!validate(n_cycle_window(n, (1 << n) + 4)).empty()) {
            detail = "n-cycle " + std::to_string(n) + " invalid";
            return false;
        }

    // The forbidden all-far cycle: line-valid skeleton, no charge assignment.
    Patch forbidden;
    forbidden.set({0, 0}, PoseEntry{4, -1});
    forbidden.set({0, -1}, PoseEntry{2, -1});
    forbidden.set({-1, 0}, PoseEntry{0, -1});
    forbidden.set({-2, 0}, PoseEntry{0, -1});
    forbidden.set({0, 1}, PoseEntry{4, -1});
    forbidden.set({1, -2}, PoseEntry{2, -1});
    forbidden.set({-1, 1}, PoseEntry{2, -1});
    forbidden.set({1, -1}, PoseEntry{0, -1});
    forbidden.set({-1, -1}, PoseEntry{4, -1});
    if (!validate(forbidden).empty()) {
        detail = "forbidden configuration should be line-valid as a skeleton";
        return false;
    }
    std::vector<Cell> cells;
    for (const auto& [cell, e] : forbidden.cells()) cells.push_back(cell);
    for (int bits = 0; bits < (1 << 9); ++bits) {
        Patch full = forbidden;
        for (int i = 0; i < 9; ++i)
            full.cells()[cells[i]].m = static_cast<int8_t>(bits >> i & 1);
        if (validate(full).empty()) {
            detail = "forbidden configuration admitted charges";
            return false;
        }
    }
    bool threw = false;
    try {
        assign_charges(forbidden);
    } catch (const std::runtime_error&) {
        threw = true;
    }
    detail = "fault shifts {0,1,2} and cycles {0,1,2} valid; all 512 charge "
             "assignments of the far-cycle configuration rejected";
    return threw;
}

bool criterion_table_integrity(std::string& detail) {
    long long entries = 0;
    for (int d = 0; d < 6; ++d)
        for (int a = 0; a < kPoseCount; ++a)
            for (int b = 0; b < kPoseCount; ++b) {
                TilePose pa = pose_from_index(a), pb = pose_from_index(b);
                ++entries;
                if (valid_adjacency(pa, pb, d) != oracle::valid_adjacency_geo(pa, pb, d)) {
                    detail = "mismatch at d=" + std::to_string(d);
                    return false;
                }
            }

    // Group laws on world decoration tables.
    auto table = [](const TilePose& p) {
        std::vector<std::tuple<int, int, int>> t;
        for (int d = 0; d < 6; ++d) {
            Decoration dec = world_decoration(p, d);
            t.emplace_back(static_cast<int>(dec.sign), dec.flags, dec.near_vertex);
        }
        return t;
    };
    std::set<std::vector<std::tuple<int, int, int>>> distinct;
    for (int i = 0; i < kPoseCount; ++i) distinct.insert(table(pose_from_index(i)));
    bool group_ok = distinct.size() == kPoseCount;
    for (int m = 0; m < 2 && group_ok; ++m)
        for (int k = 0; k < 6 && group_ok; ++k) {
            // Rotation order six: six 60-degree steps act as identity.
            group_ok = table({k, m}) == table({(k + 6) % 6, m});
            // Geometric reflection applied twice is the identity pose map.
            for (int d = 0; d < 6 && group_ok; ++d) {
                Decoration dec = oracle::world_decoration_geo({k, m}, d);
                group_ok = dec == world_decoration({k, m}, d);
            }
        }

    detail = std::to_string(entries) + " adjacency entries equal the exact geometric "
             "re-derivation; 12 distinct pose tables; group laws hold";
    return entries == 864 && group_ok;
}

}  // namespace

int main() {
    Corpus corpus = build_corpus();

    struct Criterion {
        std::string name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {"1 existence: standard patches charge and validate",
         [&](std::string& d) { return criterion_existence(d); }},
        {"2 ruler sequence along the level-4 bottom edge",
         [&](std::string& d) { return criterion_ruler_sequence(d); }},
        {"3 power-of-two triangle sizes across the corpus",
         [&](std::string& d) { return criterion_power_of_two(corpus, d); }},
        {"4 charge transfer on every arc",
         [&](std::string& d) { return criterion_charge_transfer(corpus, d); }},
        {"5 no far 3-cycles",
         [&](std::string& d) { return criterion_no_fff(corpus, d); }},
        {"6 length growth on fully interior runs",
         [&](std::string& d) { return criterion_length_growth(corpus, d); }},
        {"7 aperiodicity sweep to index 12",
         [&](std::string& d) { return criterion_sweep(d); }},
        {"8 charge lift count on the level-3 interior core",
         [&](std::string& d) { return criterion_charge_lift_count(d); }},
        {"9 exotic families validate; the far-cycle configuration is rejected",
         [&](std::string& d) { return criterion_exotic(d); }},
        {"10 adjacency table integrity against exact geometry",
         [&](std::string& d) { return criterion_table_integrity(d); }},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && ok;
        std::printf("%s criterion %s%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
