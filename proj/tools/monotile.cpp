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

// Command-line surface: generators, validation, analysis, region completion,
// the aperiodicity sweep and SVG rendering.
//
// Exit codes: 0 success or PASS, 1 violations or FAIL, 2 usage error.
// Diagnostics go to stderr; data goes to files or stdout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monotile/analysis.hpp"
#include "monotile/construct.hpp"
#include "monotile/patch_io.hpp"
#include "monotile/search.hpp"
#include "monotile/svg.hpp"

namespace {

using namespace monotile;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << data;
}

RuleMode parse_mode(const std::string& mode) {
    if (mode == "r1") return RuleMode::r1;
    if (mode == "full") return RuleMode::full;
    if (mode == "none") return RuleMode::none;
    throw CLI::ValidationError("--mode must be r1 or full");
}

// region specs: disc:<radius>, triangle:<size>, rect:<w>x<h>
Region parse_region(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("region must be disc:<r>, triangle:<s> or rect:<w>x<h>");
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    try {
        if (kind == "disc") return disc_region({0, 0}, std::stoi(arg));
        if (kind == "triangle") return triangle_region(std::stoi(arg));
        if (kind == "rect") {
            auto x = arg.find('x');
            if (x == std::string::npos) throw std::invalid_argument("rect");
            return rect_region(std::stoi(arg.substr(0, x)), std::stoi(arg.substr(x + 1)));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad region spec '" + spec + "'");
    }
    throw CLI::ValidationError("unknown region kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"charged hexagonal monotile laboratory"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved for future randomized modes");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a patch");
    gen->require_subcommand(1);
    std::string gen_out;
    int std_n = 2;
    auto* gen_std = gen->add_subcommand("standard", "standard patch of level n");
    gen_std->add_option("n", std_n, "level: outer triangle size is 2^n")->required();
    gen_std->add_option("-o,--output", gen_out, "output file (default stdout)");
    int fl_w = 8, fl_h = 4, fl_shift = 0;
    auto* gen_fl = gen->add_subcommand("fault-line", "window across a fault line");
    gen_fl->add_option("width", fl_w)->required();
    gen_fl->add_option("height", fl_h)->required();
    gen_fl->add_option("shift", fl_shift)->required();
    gen_fl->add_option("-o,--output", gen_out, "output file (default stdout)");
    int nc_n = 0, nc_radius = 6;
    auto* gen_nc = gen->add_subcommand("n-cycle", "window around a cycle of three turning lines");
    gen_nc->add_option("n", nc_n, "spacing is 2^n")->required();
    gen_nc->add_option("radius", nc_radius)->required();
    gen_nc->add_option("-o,--output", gen_out, "output file (default stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "check both matching rules on a patch file");
    std::string val_file;
    val->add_option("file", val_file)->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "trace lines and run the structural checkers");
    std::string ana_file;
    ana->add_option("file", ana_file)->required();

    // complete
    auto* comp = app.add_subcommand("complete", "search a valid completion of a region");
    std::string comp_region = "disc:2", comp_mode = "full", comp_pins, comp_out;
    long long comp_budget = kDefaultNodeBudget;
    comp->add_option("--region", comp_region, "disc:<r>, triangle:<s> or rect:<w>x<h>");
    comp->add_option("--mode", comp_mode, "r1 or full (default full)");
    comp->add_option("--pins", comp_pins, "patch file with pinned cells");
    comp->add_option("--budget-nodes", comp_budget, "node budget before TIMEOUT");
    comp->add_option("-o,--output", comp_out, "output file (default stdout)");

    // sweep
    auto* sw = app.add_subcommand("sweep", "exhaust all torus quotients up to an index");
    int sw_max = 4, sw_parallel = 1;
    std::string sw_mode = "full";
    long long sw_budget = kDefaultNodeBudget;
    sw->add_option("--max-index", sw_max, "largest quotient index")->required();
    sw->add_option("--mode", sw_mode, "r1 or full (default full)");
    sw->add_option("--budget-nodes", sw_budget, "node budget per domain");
    sw->add_option("--parallel", sw_parallel, "worker threads");

    // render
    auto* ren = app.add_subcommand("render", "render a patch file to SVG");
    std::string ren_file, ren_out;
    double ren_scale = 36.0;
    ren->add_option("file", ren_file)->required();
    ren->add_option("-o,--output", ren_out, "output file (default stdout)");
    ren->add_option("--scale", ren_scale, "pixels per lattice spacing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen_std->parsed()) {
            Patch p = assign_charges(standard_skeleton(std_n));
            write_output(gen_out, serialize(p));
            std::cerr << "standard level " << std_n << ": " << p.size() << " tiles\n";
            return 0;
        }
        if (gen_fl->parsed()) {
            Patch p = fault_line_window(fl_w, fl_h, fl_shift);
            write_output(gen_out, serialize(p));
            std::cerr << "fault-line window " << fl_w << "x" << (2 * fl_h + 1)
                      << " shift " << fl_shift << ": " << p.size() << " tiles\n";
            return 0;
        }
        if (gen_nc->parsed()) {
            Patch p = n_cycle_window(nc_n, nc_radius);
            write_output(gen_out, serialize(p));
            std::cerr << "n-cycle window n=" << nc_n << " radius " << nc_radius
                      << ": " << p.size() << " tiles\n";
            return 0;
        }
        if (val->parsed()) {
            Patch p = parse(read_file(val_file));
            std::vector<Violation> vs = validate(p);
            if (vs.empty()) {
                std::cout << "0 violations\n";
                return 0;
            }
            std::cout << vs.size() << " violations\n";
            for (const Violation& v : vs) std::cout << to_string(v) << '\n';
            return 1;
        }
        if (ana->parsed()) {
            Patch p = parse(read_file(ana_file));
            AnalysisReport rep = analyze(p);
            std::cout << format_report(rep);
            return rep.ok() ? 0 : 1;
        }
        if (comp->parsed()) {
            Region region = parse_region(comp_region);
            if (!comp_pins.empty()) {
                Patch pins = parse(read_file(comp_pins));
                for (const auto& [cell, e] : pins.cells()) region.pins[cell] = e;
            }
            SearchResult res = complete_region(region, parse_mode(comp_mode), comp_budget);
            std::cerr << "verdict=" << to_string(res.verdict) << " nodes=" << res.nodes
                      << " max-depth=" << res.max_depth << " time_ms="
                      << static_cast<long long>(res.wall_ms + 0.5) << '\n';
            if (res.conflict_edge)
                std::cerr << "conflict at edge " << to_string(*res.conflict_edge) << '\n';
            if (res.verdict != Verdict::sat) return 1;
            write_output(comp_out, serialize(*res.patch));
            return 0;
        }
        if (sw->parsed()) {
            SweepReport rep =
                aperiodicity_sweep(sw_max, parse_mode(sw_mode), sw_budget, sw_parallel);
            std::cout << format_sweep(rep);
            if (rep.mode != RuleMode::full) return 0;  // diagnostic mode
            return rep.pass() ? 0 : 1;
        }
        if (ren->parsed()) {
            Patch p = parse(read_file(ren_file));
            SvgOptions opt;
            opt.scale = ren_scale;
            write_output(ren_out, render_svg(p, opt));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
