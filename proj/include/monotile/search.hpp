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

#ifndef MONOTILE_SEARCH_HPP
#define MONOTILE_SEARCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "monotile/patch.hpp"
#include "monotile/patch_io.hpp"

// Backtracking completion of finite regions and exhaustive search over torus
// quotients.  Plain depth-first search with per-cell candidate bitmasks and
// arc-consistency propagation over the adjacency tables; variable order is a
// spiral out from the region centroid, value order is pose index order.

namespace monotile {

enum class RuleMode : uint8_t {
    none,  // no constraints (diagnostic control)
    r1,    // line continuity only; domains are the 6 rotations
    full,  // both rules; domains are the 12 poses
};

inline std::string to_string(RuleMode m) {
    switch (m) {
        case RuleMode::none: return "none";
        case RuleMode::r1: return "r1";
        default: return "full";
    }
}

struct Region {
    std::vector<Cell> cells;
    std::map<Cell, PoseEntry> pins;
    std::optional<TorusDomain> torus;
};

inline Region disc_region(const Cell& center, int radius) {
    Region r;
    for (int q = -radius; q <= radius; ++q)
        for (int rr = -radius; rr <= radius; ++rr) {
            Cell c{center.q + q, center.r + rr};
            if (hex_distance(c, center) <= radius) r.cells.push_back(c);
        }
    return r;
}

// Closed triangular region: q, r >= 0 and q + r <= size.
inline Region triangle_region(int size) {
    Region r;
    for (int rr = 0; rr <= size; ++rr)
        for (int q = 0; q + rr <= size; ++q) r.cells.push_back({q, rr});
    return r;
}

inline Region rect_region(int w, int h) {
    Region r;
    for (int rr = 0; rr < h; ++rr)
        for (int q = 0; q < w; ++q) r.cells.push_back({q, rr});
    return r;
}

inline Region torus_region(const TorusDomain& t) {
    Region r;
    r.cells = t.representatives();
    r.torus = t;
    return r;
}

enum class Verdict : uint8_t { sat, unsat, timeout };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::sat: return "SAT";
        case Verdict::unsat: return "UNSAT";
        default: return "TIMEOUT";
    }
}

struct SearchResult {
    Verdict verdict = Verdict::unsat;
    std::optional<Patch> patch;  // first solution when SAT
    long long nodes = 0;
    int max_depth = 0;
    double wall_ms = 0.0;
    long long solutions = 0;               // solutions found (up to the cap)
    std::optional<EdgeId> conflict_edge;   // set when pins are inconsistent
};

inline constexpr long long kDefaultNodeBudget = 1'000'000'000LL;

namespace detail {

struct AdjTables {
    // allowed[mode][d][value] = bitmask of neighbour values across edge d.
    std::array<std::array<uint16_t, 12>, 6> full{};
    std::array<std::array<uint16_t, 6>, 6> r1{};

    AdjTables() {
        for (int d = 0; d < 6; ++d) {
            for (int a = 0; a < kPoseCount; ++a)
                for (int b = 0; b < kPoseCount; ++b)
                    if (valid_adjacency(pose_from_index(a), pose_from_index(b), d))
                        full[d][a] |= static_cast<uint16_t>(1u << b);
            for (int ka = 0; ka < 6; ++ka)
                for (int kb = 0; kb < 6; ++kb)
                    if (r1_match({ka, 0}, {kb, 0}, d))
                        r1[d][ka] |= static_cast<uint16_t>(1u << kb);
        }
    }
};

inline const AdjTables& adj_tables() {
    static const AdjTables t;
    return t;
}

class Solver {
public:
    Solver(const Region& region, RuleMode mode, long long node_budget)
        : mode_(mode), budget_(node_budget) {
        cells_ = region.cells;
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        torus_ = region.torus;
        values_ = mode == RuleMode::full ? kPoseCount : 6;
        full_mask_ = static_cast<uint16_t>((1u << values_) - 1);

        // Spiral order from the centroid.
        double cq = 0, cr = 0;
        size_t n = std::max<size_t>(1, cells_.size());
        for (const Cell& c : cells_) cq += c.q, cr += c.r;
        Cell centroid{static_cast<int>(std::lround(cq / n)),
                      static_cast<int>(std::lround(cr / n))};
        std::stable_sort(cells_.begin(), cells_.end(), [&](const Cell& a, const Cell& b) {
            int da = hex_distance(a, centroid), db = hex_distance(b, centroid);
            if (da != db) return da < db;
            return a < b;
        });

        std::map<Cell, int> index;
        for (size_t i = 0; i < cells_.size(); ++i) index[cells_[i]] = static_cast<int>(i);

        arcs_.resize(cells_.size());
        for (size_t i = 0; i < cells_.size(); ++i) {
            for (int d = 0; d < 6; ++d) {
                Cell n = neighbor(cells_[i], d);
                if (torus_) n = torus_->reduce(n);
                auto it = index.find(n);
                if (it == index.end()) continue;
                arcs_[i].push_back({it->second, d});
            }
        }

        domains_.assign(cells_.size(), full_mask_);
        for (const auto& [cell, pin] : region.pins) {
            Cell c = torus_ ? torus_->reduce(cell) : cell;
            auto it = index.find(c);
            if (it == index.end())
                throw std::invalid_argument("pinned cell outside region: " + to_string(cell));
            domains_[it->second] &= pin_mask(pin);
        }
        // Self-adjacency (small torus quotients) acts as a unary filter.
        for (size_t i = 0; i < cells_.size(); ++i)
            for (const auto& [j, d] : arcs_[i])
                if (j == static_cast<int>(i)) {
                    uint16_t keep = 0;
                    for (int v = 0; v < values_; ++v)
                        if ((domains_[i] >> v & 1) && (allowed(d, v) >> v & 1))
                            keep |= static_cast<uint16_t>(1u << v);
                    domains_[i] = keep;
                }
    }

    enum class ForceStatus { forced, contradiction, stalled };

    // Arc consistency to fixpoint, then singleton-consistency passes: a
    // candidate whose trial assignment wipes out some domain is discarded.
    // Ends when every cell is decided, a contradiction arises, or no further
    // progress is possible.
    ForceStatus force_all() {
        SearchResult dummy;
        if (!propagate_all(dummy)) return ForceStatus::contradiction;
        bool progress = true;
        while (progress) {
            progress = false;
            bool all_single = true;
            for (size_t i = 0; i < cells_.size(); ++i) {
                uint16_t dom = domains_[i];
                if ((dom & (dom - 1)) == 0) continue;
                all_single = false;
                for (int v = 0; v < values_; ++v) {
                    if (!(domains_[i] >> v & 1)) continue;
                    std::vector<uint16_t> saved = domains_;
                    domains_[i] = static_cast<uint16_t>(1u << v);
                    bool ok = propagate_from(static_cast<int>(i));
                    domains_ = std::move(saved);
                    if (!ok) {
                        domains_[i] &= static_cast<uint16_t>(~(1u << v));
                        progress = true;
                        if (domains_[i] == 0) return ForceStatus::contradiction;
                        if (!propagate_from(static_cast<int>(i)))
                            return ForceStatus::contradiction;
                    }
                }
            }
            if (all_single) return ForceStatus::forced;
        }
        return ForceStatus::stalled;
    }

    Patch extract_patch() const {
        Patch patch = torus_ ? Patch(*torus_) : Patch();
        for (size_t i = 0; i < cells_.size(); ++i) {
            uint16_t dom = domains_[i];
            if (dom == 0 || (dom & (dom - 1)) != 0)
                throw std::logic_error("extract_patch on undetermined solver state");
            int v = 0;
            while (!(dom >> v & 1)) ++v;
            if (mode_ == RuleMode::full)
                patch.set(cells_[i], PoseEntry(pose_from_index(v)));
            else
                patch.set(cells_[i], PoseEntry{v, -1});
        }
        return patch;
    }

    SearchResult run(long long max_solutions) {
        auto start = std::chrono::steady_clock::now();
        SearchResult res;
        max_solutions_ = max_solutions;

        bool consistent = true;
        for (size_t i = 0; i < cells_.size() && consistent; ++i)
            if (domains_[i] == 0) consistent = false;
        if (consistent) consistent = propagate_all(res);

        if (!consistent) {
            res.verdict = Verdict::unsat;
        } else if (cells_.empty()) {
            res.verdict = Verdict::sat;
            res.solutions = 1;
            res.patch = torus_ ? Patch(*torus_) : Patch();
        } else {
            stop_ = false;
            dfs(0, res);
            if (stop_ && res.solutions < max_solutions_ && budget_exceeded_)
                res.verdict = Verdict::timeout;
            else
                res.verdict = res.solutions > 0 ? Verdict::sat : Verdict::unsat;
        }
        res.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        return res;
    }

private:
    uint16_t pin_mask(const PoseEntry& pin) const {
        if (mode_ == RuleMode::full) {
            if (pin.is_skeleton())
                return static_cast<uint16_t>(3u << (2 * pin.k));  // both chiralities
            return static_cast<uint16_t>(1u << pose_index(pin.pose()));
        }
        return static_cast<uint16_t>(1u << pin.k);
    }

    uint16_t allowed(int d, int value) const {
        const auto& t = adj_tables();
        if (mode_ == RuleMode::full) return t.full[d][value];
        if (mode_ == RuleMode::r1) return t.r1[d][value];
        return full_mask_;
    }

    uint16_t support_mask(uint16_t dom, int d) const {
        uint16_t out = 0;
        for (int v = 0; v < values_; ++v)
            if (dom >> v & 1) out |= allowed(d, v);
        return out;
    }

    // AC-3 from all arcs; returns false on a wipeout (recording the edge).
    bool propagate_all(SearchResult& res) {
        std::deque<int> queue;
        for (size_t i = 0; i < cells_.size(); ++i) queue.push_back(static_cast<int>(i));
        return propagate(queue, &res);
    }

    bool propagate_from(int cell) {
        std::deque<int> queue{cell};
        return propagate(queue, nullptr);
    }

    // Revises the neighbours of queued cells until fixpoint.
    bool propagate(std::deque<int>& queue, SearchResult* res) {
        std::vector<char> queued(cells_.size(), 0);
        for (int i : queue) queued[i] = 1;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            queued[i] = 0;
            for (const auto& [j, d] : arcs_[i]) {
                if (j == i) continue;
                uint16_t next = domains_[j] & support_mask(domains_[i], d);
                if (next == domains_[j]) continue;
                domains_[j] = next;
                if (next == 0) {
                    if (res) res->conflict_edge = canonical_edge(cells_[i], d);
                    return false;
                }
                if (!queued[j]) {
                    queue.push_back(j);
                    queued[j] = 1;
                }
            }
        }
        return true;
    }

    void dfs(int pos, SearchResult& res) {
        if (stop_) return;
        while (pos < static_cast<int>(cells_.size()) &&
               (domains_[pos] & (domains_[pos] - 1)) == 0)
            ++pos;  // already singleton
        if (pos == static_cast<int>(cells_.size())) {
            record_solution(res);
            return;
        }
        res.max_depth = std::max(res.max_depth, pos + 1);
        uint16_t dom = domains_[pos];
        for (int v = 0; v < values_ && !stop_; ++v) {
            if (!(dom >> v & 1)) continue;
            ++res.nodes;
            if (res.nodes > budget_) {
                budget_exceeded_ = true;
                stop_ = true;
                return;
            }
            std::vector<uint16_t> saved = domains_;
            domains_[pos] = static_cast<uint16_t>(1u << v);
            if (propagate_from(pos)) dfs(pos + 1, res);
            domains_ = std::move(saved);
        }
    }

    void record_solution(SearchResult& res) {
        ++res.solutions;
        if (!res.patch) {
            Patch patch = torus_ ? Patch(*torus_) : Patch();
            for (size_t i = 0; i < cells_.size(); ++i) {
                int v = 0;
                while (!(domains_[i] >> v & 1)) ++v;
                if (mode_ == RuleMode::full)
                    patch.set(cells_[i], PoseEntry(pose_from_index(v)));
                else
                    patch.set(cells_[i], PoseEntry{v, -1});
            }
            res.patch = std::move(patch);
        }
        if (res.solutions >= max_solutions_) stop_ = true;
    }

    RuleMode mode_;
    long long budget_;
    long long max_solutions_ = 1;
    int values_ = 12;
    uint16_t full_mask_ = 0xFFF;
    bool stop_ = false;
    bool budget_exceeded_ = false;
    std::optional<TorusDomain> torus_;
    std::vector<Cell> cells_;
    std::vector<std::vector<std::pair<int, int>>> arcs_;  // (neighbour, direction)
    std::vector<uint16_t> domains_;
};

}  // namespace detail

// Completes a finite region to a patch satisfying the selected rules, or
// proves that impossible.  Deterministic for fixed inputs and budget.
inline SearchResult complete_region(const Region& region, RuleMode mode,
                                    long long node_budget = kDefaultNodeBudget,
                                    long long max_solutions = 1) {
    detail::Solver solver(region, mode, node_budget);
    return solver.run(max_solutions);
}

struct ForceResult {
    enum class Status { forced, contradiction, stalled };
    Status status = Status::stalled;
    std::optional<Patch> patch;  // set when forced
};

// Propagates constraints to completion without branching; the region is
// "forced" when the pins determine every cell.
inline ForceResult force_region(const Region& region, RuleMode mode) {
    detail::Solver solver(region, mode, kDefaultNodeBudget);
    ForceResult out;
    switch (solver.force_all()) {
        case detail::Solver::ForceStatus::contradiction:
            out.status = ForceResult::Status::contradiction;
            break;
        case detail::Solver::ForceStatus::stalled:
            out.status = ForceResult::Status::stalled;
            break;
        case detail::Solver::ForceStatus::forced:
            out.status = ForceResult::Status::forced;
            out.patch = solver.extract_patch();
            break;
    }
    return out;
}

// Exhausts all pose assignments of a torus quotient.
inline SearchResult torus_search(const TorusDomain& domain,
                                 RuleMode mode = RuleMode::full,
                                 long long node_budget = kDefaultNodeBudget) {
    return complete_region(torus_region(domain), mode, node_budget, 1);
}

struct SweepEntry {
    TorusDomain domain;
    Verdict verdict = Verdict::unsat;
    long long nodes = 0;
    double wall_ms = 0.0;
    std::optional<Patch> witness;  // a SAT assignment would disprove aperiodicity
};

struct SweepReport {
    RuleMode mode = RuleMode::full;
    int max_index = 0;
    std::vector<SweepEntry> entries;
    double total_ms = 0.0;

    bool all_unsat() const {
        for (const auto& e : entries)
            if (e.verdict != Verdict::unsat) return false;
        return true;
    }
    // PASS is only meaningful with both rules active.
    bool pass() const { return mode == RuleMode::full && all_unsat(); }
};

// Runs torus_search over every sublattice of index <= max_index.  Domains
// are searched independently (optionally in parallel) and reported in
// enumeration order.
inline SweepReport aperiodicity_sweep(int max_index, RuleMode mode = RuleMode::full,
                                      long long node_budget = kDefaultNodeBudget,
                                      int parallelism = 1) {
    auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.mode = mode;
    report.max_index = max_index;
    std::vector<TorusDomain> domains = enumerate_sublattices(max_index);
    report.entries.resize(domains.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < domains.size(); i = next.fetch_add(1)) {
            SearchResult r = torus_search(domains[i], mode, node_budget);
            report.entries[i] = {domains[i], r.verdict, r.nodes, r.wall_ms,
                                 std::move(r.patch)};
        }
    };
    int threads = std::max(1, parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    report.total_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return report;
}

inline std::string format_sweep(const SweepReport& r) {
    std::ostringstream os;
    os << "sweep mode=" << to_string(r.mode) << " max-index=" << r.max_index
       << " domains=" << r.entries.size() << '\n';
    for (const auto& e : r.entries) {
        os << to_string(e.domain) << " index=" << e.domain.index()
           << " verdict=" << to_string(e.verdict) << " nodes=" << e.nodes
           << " time_ms=" << static_cast<long long>(e.wall_ms + 0.5) << '\n';
        if (e.verdict == Verdict::sat && e.witness) {
            os << "witness:\n";
            std::istringstream lines(serialize(*e.witness));
            for (std::string line; std::getline(lines, line);)
                os << "  " << line << '\n';
        }
    }
    if (r.mode == RuleMode::full)
        os << "result: " << (r.pass() ? "PASS (all UNSAT)" : "FAIL") << '\n';
    else
        os << "result: diagnostic (" << to_string(r.mode) << " rules)\n";
    return os.str();
}

}  // namespace monotile

#endif  // MONOTILE_SEARCH_HPP
