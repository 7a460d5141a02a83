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

#ifndef MONOTILE_ANALYSIS_HPP
#define MONOTILE_ANALYSIS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotile/patch.hpp"

// Black-line analysis over a patch: traced lines, maximal straight sections
// (edges), triangles, the leads-to graph between edges with near/far labels,
// and the structural checkers built on top of them.

namespace monotile {

struct PieceRef {
    Cell cell;
    Piece piece = Piece::straight;
    friend auto operator<=>(const PieceRef&, const PieceRef&) = default;
};

struct R1Line {
    std::vector<PieceRef> pieces;  // in travel order
    bool closed = false;
    int turn_count = 0;
};

// A maximal straight section.  Runs of zero straight tiles between two turns
// (the sides of size-1 triangles) are kept as edges with an empty cell list.
struct R1Edge {
    std::vector<Cell> cells;  // straight cells in travel order
    int dir = 0;              // heading index of travel
    int line = -1;            // owning line
    bool origin_truncated = false;  // begins at the patch boundary
    bool end_truncated = false;     // ends at the patch boundary
    std::optional<PieceRef> origin_turn;
    std::optional<PieceRef> terminal_turn;
    std::optional<ChargeSign> charge;  // set when all straight cells are charged

    int length() const { return static_cast<int>(cells.size()); }
    bool complete() const { return !origin_truncated && !end_truncated; }
};

struct Triangle {
    int line = -1;
    int size = 1;  // side length plus one
    std::array<int, 3> edges{};
    std::array<Cell, 3> corners{};
};

struct Trace {
    std::vector<R1Line> lines;
    std::vector<R1Edge> edges;
    std::vector<Triangle> triangles;
    std::map<Cell, int> straight_edge_of;  // cell -> edge owning its straight piece

    std::map<int, int> triangle_census() const {
        std::map<int, int> census;
        for (const Triangle& t : triangles) ++census[t.size];
        return census;
    }
};

namespace detail {

// Piece the line enters after leaving `from`, or nullopt at the boundary.
// Throws when the neighbouring crossing cannot continue the line.
inline std::optional<PieceRef> next_piece(const Patch& p, const PieceRef& from) {
    const PoseEntry* e = p.find(from.cell);
    int exit_edge = piece_exit_edge(e->k, from.piece);
    Cell ncell = p.reduce(neighbor(from.cell, exit_edge));
    const PoseEntry* n = p.find(ncell);
    if (!n) return std::nullopt;
    std::optional<Piece> entered = piece_entered_at(n->k, exit_edge + 3);
    if (!entered)
        throw std::runtime_error("line tracing on R1-invalid patch at edge " +
                                 to_string(canonical_edge(from.cell, exit_edge)));
    return PieceRef{ncell, *entered};
}

inline std::optional<PieceRef> prev_piece(const Patch& p, const PieceRef& at) {
    const PoseEntry* e = p.find(at.cell);
    int entry_edge = piece_entry_edge(e->k, at.piece);
    Cell ncell = p.reduce(neighbor(at.cell, entry_edge));
    const PoseEntry* n = p.find(ncell);
    if (!n) return std::nullopt;
    std::optional<Piece> exited = piece_exited_at(n->k, entry_edge + 3);
    if (!exited)
        throw std::runtime_error("line tracing on R1-invalid patch at edge " +
                                 to_string(canonical_edge(at.cell, entry_edge)));
    return PieceRef{ncell, *exited};
}

}  // namespace detail

// Traces every black-line piece of the patch into maximal lines, splits them
// into edges at the turns, and certifies closed lines as triangles.  Output
// order is deterministic: lines sorted by their smallest piece.
inline Trace trace_lines(const Patch& p) {
    std::set<PieceRef> todo;
    for (const auto& [cell, entry] : p.cells())
        for (Piece piece : {Piece::straight, Piece::turn_top, Piece::turn_bottom})
            todo.insert({cell, piece});

    std::vector<std::vector<PieceRef>> open_lines, closed_lines;

    // Open lines start at pieces with no predecessor inside the patch.
    for (const PieceRef& start : std::set<PieceRef>(todo)) {
        if (!todo.count(start)) continue;
        if (detail::prev_piece(p, start)) continue;
        std::vector<PieceRef> line;
        for (std::optional<PieceRef> cur = start; cur; cur = detail::next_piece(p, *cur)) {
            line.push_back(*cur);
            todo.erase(*cur);
        }
        open_lines.push_back(std::move(line));
    }
    // Remaining pieces lie on closed lines; start each at its smallest piece.
    while (!todo.empty()) {
        PieceRef start = *todo.begin();
        std::vector<PieceRef> line;
        PieceRef cur = start;
        do {
            line.push_back(cur);
            todo.erase(cur);
            cur = *detail::next_piece(p, cur);
        } while (!(cur == start));
        closed_lines.push_back(std::move(line));
    }

    auto smaller_start = [](const std::vector<PieceRef>& a, const std::vector<PieceRef>& b) {
        return a.front() < b.front();
    };
    std::sort(open_lines.begin(), open_lines.end(), smaller_start);
    std::sort(closed_lines.begin(), closed_lines.end(), smaller_start);

    Trace tr;

    auto add_line = [&](std::vector<PieceRef> pieces, bool closed) {
        int line_idx = static_cast<int>(tr.lines.size());
        R1Line line;
        line.pieces = std::move(pieces);
        line.closed = closed;
        for (const PieceRef& pr : line.pieces)
            if (pr.piece != Piece::straight) ++line.turn_count;
        tr.lines.push_back(line);
        const R1Line& l = tr.lines.back();

        std::vector<int> edge_indices;

        auto push_edge = [&](std::vector<Cell> run, std::optional<PieceRef> origin,
                             std::optional<PieceRef> terminal) {
            R1Edge e;
            e.cells = std::move(run);
            e.line = line_idx;
            e.origin_truncated = !origin;
            e.end_truncated = !terminal;
            e.origin_turn = origin;
            e.terminal_turn = terminal;
            if (!e.cells.empty())
                e.dir = p.find(e.cells.front())->k;
            else
                e.dir = piece_exit_heading(p.find(origin->cell)->k, origin->piece);
            if (!e.cells.empty()) {
                bool charged = true;
                for (const Cell& c : e.cells) charged = charged && !p.find(c)->is_skeleton();
                if (charged) e.charge = tile_charge(p.find(e.cells.front())->pose());
            }
            int idx = static_cast<int>(tr.edges.size());
            for (const Cell& c : e.cells) tr.straight_edge_of[c] = idx;
            tr.edges.push_back(std::move(e));
            edge_indices.push_back(idx);
        };

        if (closed && l.turn_count == 0) {
            // A straight loop winding a torus: one cyclic edge, no turns.
            std::vector<Cell> run;
            for (const PieceRef& pr : l.pieces) run.push_back(pr.cell);
            R1Edge e;
            e.cells = std::move(run);
            e.line = line_idx;
            e.dir = p.find(e.cells.front())->k;
            bool charged = true;
            for (const Cell& c : e.cells) charged = charged && !p.find(c)->is_skeleton();
            if (charged) e.charge = tile_charge(p.find(e.cells.front())->pose());
            int idx = static_cast<int>(tr.edges.size());
            for (const Cell& c : e.cells) tr.straight_edge_of[c] = idx;
            tr.edges.push_back(std::move(e));
            return;
        }

        // Rotate closed lines so the sequence ends with a turn; the first
        // run's origin is then that final turn.
        std::vector<PieceRef> seq = l.pieces;
        std::optional<PieceRef> run_origin;
        if (closed) {
            size_t first_turn = 0;
            while (seq[first_turn].piece == Piece::straight) ++first_turn;
            std::rotate(seq.begin(), seq.begin() + first_turn + 1, seq.end());
            run_origin = seq.back();
        }

        std::vector<Cell> run;
        for (const PieceRef& pr : seq) {
            if (pr.piece == Piece::straight) {
                run.push_back(pr.cell);
                continue;
            }
            // A turn terminates the current run.  Empty runs are kept only
            // between two in-patch turns.
            if (!run.empty() || run_origin) push_edge(std::move(run), run_origin, pr);
            run.clear();
            run_origin = pr;
        }
        if (!closed && !run.empty()) push_edge(std::move(run), run_origin, std::nullopt);

        if (closed && l.turn_count == 3) {
            if (edge_indices.size() != 3)
                throw std::runtime_error("closed 3-turn line without 3 edges");
            Triangle t;
            t.line = line_idx;
            int len = tr.edges[edge_indices[0]].length();
            for (int ei : edge_indices)
                if (tr.edges[ei].length() != len)
                    throw std::runtime_error("triangle with unequal side lengths");
            t.size = len + 1;
            std::copy(edge_indices.begin(), edge_indices.end(), t.edges.begin());
            int ci = 0;
            for (const PieceRef& pr : l.pieces)
                if (pr.piece != Piece::straight) t.corners[ci++] = pr.cell;
            tr.triangles.push_back(t);
        }
    };

    for (auto& l : open_lines) add_line(std::move(l), false);
    for (auto& l : closed_lines) add_line(std::move(l), true);
    return tr;
}

// ---------------------------------------------------------------------------
// Leads-to relation and the edge graph.

struct LeadsTo {
    int target = -1;  // edge index
    bool near_label = false;
    PieceRef turn;  // the terminating turn realizing the relation
};

// Edge E leads to the edge through its terminating turn tile's straight
// piece; the label is near exactly when that turn is the tile's top turn.
inline std::optional<LeadsTo> leads_to(const Trace& tr, int edge_idx) {
    const R1Edge& e = tr.edges[edge_idx];
    if (!e.terminal_turn) return std::nullopt;
    const PieceRef& turn = *e.terminal_turn;
    auto it = tr.straight_edge_of.find(turn.cell);
    if (it == tr.straight_edge_of.end()) return std::nullopt;
    return LeadsTo{it->second, turn.piece == Piece::turn_top, turn};
}

struct EdgeArc {
    int from = -1;
    int to = -1;
    bool near_label = false;
    PieceRef turn;
};

// Directed graph over edges with at least one straight tile.  Arcs between
// such edges are exactly the meetings across which the charge rule binds;
// zero-length triangle sides carry no tiles and transfer nothing.
struct EdgeGraph {
    std::vector<int> nodes;          // edge indices with length >= 1
    std::vector<int> node_of_edge;   // edge index -> position in nodes, or -1
    std::vector<EdgeArc> arcs;
    std::vector<int> component;      // per node: component id over all nodes
    int components_all = 0;       // including purely truncated components
    int components_interior = 0;  // induced on complete edges only
    int components_anchored = 0;  // all-node components containing a complete edge
};

inline EdgeGraph build_edge_graph(const Trace& tr) {
    EdgeGraph g;
    g.node_of_edge.assign(tr.edges.size(), -1);
    for (size_t i = 0; i < tr.edges.size(); ++i) {
        if (tr.edges[i].length() >= 1) {
            g.node_of_edge[i] = static_cast<int>(g.nodes.size());
            g.nodes.push_back(static_cast<int>(i));
        }
    }
    for (int ei : g.nodes) {
        std::optional<LeadsTo> lt = leads_to(tr, ei);
        if (!lt) continue;
        if (g.node_of_edge[lt->target] < 0) continue;
        g.arcs.push_back({ei, lt->target, lt->near_label, lt->turn});
    }

    // Union-find over the full node set.
    std::vector<int> parent(g.nodes.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const EdgeArc& a : g.arcs) unite(g.node_of_edge[a.from], g.node_of_edge[a.to]);

    std::map<int, int> comp_id;
    g.component.resize(g.nodes.size());
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        int root = find(static_cast<int>(i));
        auto [it, fresh] = comp_id.emplace(root, static_cast<int>(comp_id.size()));
        g.component[i] = it->second;
    }
    g.components_all = static_cast<int>(comp_id.size());

    std::vector<bool> anchored(g.components_all, false);
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (tr.edges[g.nodes[i]].complete()) anchored[g.component[i]] = true;
    g.components_anchored = static_cast<int>(std::count(anchored.begin(), anchored.end(), true));

    // Components of the subgraph induced on complete edges.
    std::vector<int> iparent(g.nodes.size());
    for (size_t i = 0; i < iparent.size(); ++i) iparent[i] = static_cast<int>(i);
    auto ifind = [&](int x) {
        while (iparent[x] != x) x = iparent[x] = iparent[iparent[x]];
        return x;
    };
    for (const EdgeArc& a : g.arcs) {
        if (!tr.edges[a.from].complete() || !tr.edges[a.to].complete()) continue;
        iparent[ifind(g.node_of_edge[a.from])] = ifind(g.node_of_edge[a.to]);
    }
    std::set<int> iroots;
    for (size_t i = 0; i < g.nodes.size(); ++i)
        if (tr.edges[g.nodes[i]].complete()) iroots.insert(ifind(static_cast<int>(i)));
    g.components_interior = static_cast<int>(iroots.size());
    return g;
}

// ---------------------------------------------------------------------------
// Checkers.

struct CheckStats {
    bool ok = true;
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> failures;
};

// Near arcs must join equal charges, far arcs opposite charges.
inline CheckStats check_charge_transfer(const EdgeGraph& g, const Trace& tr) {
    CheckStats st;
    for (const EdgeArc& a : g.arcs) {
        const R1Edge& e1 = tr.edges[a.from];
        const R1Edge& e2 = tr.edges[a.to];
        if (!e1.charge || !e2.charge) {
            ++st.skipped;
            continue;
        }
        ++st.checked;
        bool equal = *e1.charge == *e2.charge;
        if (equal != a.near_label) {
            st.ok = false;
            st.failures.push_back("charge transfer violated at turn " + to_string(a.turn.cell));
        }
    }
    return st;
}

// No directed cycle of three far arcs.
inline bool check_no_fff_cycle(const EdgeGraph& g) {
    std::map<int, std::vector<int>> far;
    for (const EdgeArc& a : g.arcs)
        if (!a.near_label) far[a.from].push_back(a.to);
    for (const auto& [e1, outs1] : far)
        for (int e2 : outs1) {
            auto it2 = far.find(e2);
            if (it2 == far.end()) continue;
            for (int e3 : it2->second) {
                auto it3 = far.find(e3);
                if (it3 == far.end()) continue;
                for (int back : it3->second)
                    if (back == e1) return false;
            }
        }
    return true;
}

// For an arc E1 -> E2 via turn tile t, the run of E2 tiles from t onwards in
// heading dir(E1)+4 must be longer than length(E1).  Runs reaching the patch
// boundary are skipped, as are arcs from truncated sources.
inline CheckStats check_length_growth(const EdgeGraph& g, const Trace& tr) {
    CheckStats st;
    for (const EdgeArc& a : g.arcs) {
        const R1Edge& e1 = tr.edges[a.from];
        const R1Edge& e2 = tr.edges[a.to];
        if (!e1.complete()) {
            ++st.skipped;
            continue;
        }
        Cell t = a.turn.cell;
        auto pos = std::find(e2.cells.begin(), e2.cells.end(), t);
        if (pos == e2.cells.end())
            throw std::logic_error("turn tile missing from target edge");
        int idx = static_cast<int>(pos - e2.cells.begin());
        int run;
        if (a.near_label) {
            // Run extends against E2's direction, back to E2's origin.
            if (e2.origin_truncated) {
                ++st.skipped;
                continue;
            }
            run = idx + 1;
        } else {
            if (e2.end_truncated) {
                ++st.skipped;
                continue;
            }
            run = e2.length() - idx;
        }
        ++st.checked;
        if (run <= e1.length()) {
            st.ok = false;
            st.failures.push_back("length growth violated at turn " + to_string(t) +
                                  ": run " + std::to_string(run) + " vs length " +
                                  std::to_string(e1.length()));
        }
    }
    return st;
}

// Test oracle: the near label holds exactly when E1 lies on the left (inner)
// side of E2's supporting line.
inline bool near_label_by_containment(const Trace& tr, const EdgeArc& a) {
    const R1Edge& e1 = tr.edges[a.from];
    const R1Edge& e2 = tr.edges[a.to];
    Cell probe = e1.cells.empty() ? e1.origin_turn->cell : e1.cells.back();
    IntPoint on_line = center_xy(a.turn.cell);
    IntPoint dir = center_xy(step(e2.dir)) ;
    return cross(dir, center_xy(probe) - on_line) > 0;
}

// ---------------------------------------------------------------------------
// Structure of triangle sizes.

// Largest power of two dividing n.
inline long long ruler(long long n) { return n & -n; }

inline bool is_power_of_two(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

struct StructureReport {
    bool power_of_two_ok = true;
    int wedges_checked = 0;
    int wedge_values_checked = 0;
    int wedge_skipped = 0;
    std::vector<std::string> failures;
    bool ok() const { return power_of_two_ok && failures.empty(); }
};

namespace detail {

// Triangle containing the given turn piece, or -1 (open line).
inline int triangle_of_turn(const PieceRef& turn,
                            const std::map<PieceRef, int>& turn_to_triangle) {
    auto it = turn_to_triangle.find(turn);
    return it == turn_to_triangle.end() ? -1 : it->second;
}

}  // namespace detail

// Checks (a) that every complete triangle size is a power of two, and
// (b) the ruler sequence: wherever straight runs of k tiles flank a tile t
// in headings a and a+1, the triangles met along the first ray have sizes
// ruler(1), ..., ruler(k).
inline StructureReport check_structure(const Patch& p, const Trace& tr) {
    StructureReport rep;
    for (const Triangle& t : tr.triangles) {
        if (!is_power_of_two(t.size)) {
            rep.power_of_two_ok = false;
            rep.failures.push_back("triangle of size " + std::to_string(t.size) +
                                   " at " + to_string(t.corners[0]));
        }
    }

    std::map<PieceRef, int> turn_to_triangle;
    for (size_t i = 0; i < tr.triangles.size(); ++i) {
        const R1Line& line = tr.lines[tr.triangles[i].line];
        for (const PieceRef& pr : line.pieces)
            if (pr.piece != Piece::straight)
                turn_to_triangle[pr] = static_cast<int>(i);
    }

    auto ray_run = [&](const Cell& t, int alpha, int r0, int r1) {
        // Number of consecutive cells from t in direction alpha whose
        // straights are collinear with the ray (rotation r0 or r1); a valid
        // patch cannot mix the two rotations within one run.
        int i = 0;
        std::optional<int> rot;
        int bound = static_cast<int>(p.size());  // torus rays wrap
        for (; i <= bound; ++i) {
            const PoseEntry* e = p.find(neighbor(t, alpha) + step(alpha) * i);
            if (!e || (e->k != r0 && e->k != r1)) break;
            if (rot && *rot != e->k) break;
            rot = e->k;
        }
        return std::pair<int, int>(i, rot.value_or(-1));
    };

    for (const auto& [t, entry] : p.cells()) {
        for (int alpha = 0; alpha < 6; ++alpha) {
            auto [run_a, rot_a] = ray_run(t, alpha, alpha, mod6(alpha + 3));
            if (run_a == 0) continue;
            auto [run_b, rot_b] = ray_run(t, mod6(alpha + 1), mod6(alpha + 1), mod6(alpha + 4));
            int k = std::min(run_a, run_b);
            if (k == 0) continue;
            ++rep.wedges_checked;
            for (int i = 1; i <= k; ++i) {
                Cell ai = t + step(alpha) * i;
                // The turn of a_i facing into the wedge.
                Piece wedge_turn = (p.find(ai)->k == alpha) ? Piece::turn_top
                                                            : Piece::turn_bottom;
                int tri = detail::triangle_of_turn({ai, wedge_turn}, turn_to_triangle);
                if (tri < 0) {
                    ++rep.wedge_skipped;  // triangle truncated by the boundary
                    continue;
                }
                ++rep.wedge_values_checked;
                long long want = ruler(i);
                if (tr.triangles[tri].size != want) {
                    rep.failures.push_back(
                        "ruler sequence violated at " + to_string(t) + " dir " +
                        std::to_string(alpha) + " position " + std::to_string(i) +
                        ": size " + std::to_string(tr.triangles[tri].size) +
                        ", expected " + std::to_string(want));
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Chirality constancy along edges (holds in every valid charged patch).

inline bool chirality_constant_along_edges(const Patch& p, const Trace& tr) {
    for (const R1Edge& e : tr.edges) {
        std::optional<int> m;
        for (const Cell& c : e.cells) {
            const PoseEntry* pe = p.find(c);
            if (pe->is_skeleton()) continue;
            if (m && *m != pe->m) return false;
            m = pe->m;
        }
    }
    return true;
}

// Total turning of every closed line is +360 degrees (three left turns).
inline bool closed_lines_anticlockwise(const Trace& tr) {
    for (const R1Line& l : tr.lines)
        if (l.closed && l.turn_count != 0 && l.turn_count != 3) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Structured report.

struct AnalysisReport {
    std::map<int, int> census;
    int lines = 0;
    int edges_complete = 0;
    int edges_truncated = 0;
    int components_interior = 0;
    int components_anchored = 0;
    int components_all = 0;
    bool charged = false;
    CheckStats charge_transfer;
    bool no_fff_cycle = true;
    CheckStats length_growth;
    StructureReport structure;

    bool ok() const {
        return (!charged || charge_transfer.ok) && no_fff_cycle && length_growth.ok &&
               structure.ok();
    }
};

inline AnalysisReport analyze(const Patch& p) {
    Trace tr = trace_lines(p);
    EdgeGraph g = build_edge_graph(tr);
    AnalysisReport rep;
    rep.census = tr.triangle_census();
    rep.lines = static_cast<int>(tr.lines.size());
    for (const R1Edge& e : tr.edges) {
        if (e.length() == 0) continue;
        if (e.complete())
            ++rep.edges_complete;
        else
            ++rep.edges_truncated;
    }
    rep.components_interior = g.components_interior;
    rep.components_anchored = g.components_anchored;
    rep.components_all = g.components_all;
    rep.charged = true;
    for (const auto& [cell, e] : p.cells()) rep.charged = rep.charged && !e.is_skeleton();
    rep.charge_transfer = check_charge_transfer(g, tr);
    rep.no_fff_cycle = check_no_fff_cycle(g);
    rep.length_growth = check_length_growth(g, tr);
    rep.structure = check_structure(p, tr);
    return rep;
}

inline std::string format_report(const AnalysisReport& r) {
    std::ostringstream os;
    os << "lines: " << r.lines << '\n';
    os << "triangles:";
    if (r.census.empty()) os << " none";
    for (const auto& [size, count] : r.census)
        os << " size " << size << ": " << count << ";";
    os << '\n';
    os << "edges: " << r.edges_complete << " complete, " << r.edges_truncated
       << " truncated\n";
    os << "edge-graph components: " << r.components_interior << " interior, "
       << r.components_anchored << " anchored, " << r.components_all << " total\n";
    if (r.charged)
        os << "charge-transfer: " << (r.charge_transfer.ok ? "OK" : "FAIL") << " ("
           << r.charge_transfer.checked << " arcs, " << r.charge_transfer.skipped
           << " skipped)\n";
    else
        os << "charge-transfer: skipped (skeleton patch)\n";
    os << "no-fff-cycle: " << (r.no_fff_cycle ? "OK" : "FAIL") << '\n';
    os << "length-growth: " << (r.length_growth.ok ? "OK" : "FAIL") << " ("
       << r.length_growth.checked << " arcs, " << r.length_growth.skipped
       << " skipped)\n";
    os << "structure: " << (r.structure.ok() ? "OK" : "FAIL") << " ("
       << r.structure.wedge_values_checked << " ruler values, "
       << r.structure.wedge_skipped << " skipped)\n";
    for (const auto& f : r.charge_transfer.failures) os << "  " << f << '\n';
    for (const auto& f : r.length_growth.failures) os << "  " << f << '\n';
    for (const auto& f : r.structure.failures) os << "  " << f << '\n';
    return os.str();
}

}  // namespace monotile

#endif  // MONOTILE_ANALYSIS_HPP
