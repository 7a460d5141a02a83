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

// End-to-end tests of the command-line tool.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/monotile_cli_XXXXXX";
        const char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

RunResult run(const std::string& args) {
    std::string out_file = temp_dir() + "/stdout.txt";
    std::string cmd = std::string(MONOTILE_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    out << data;
}

}  // namespace

TEST_CASE("generate then validate pipeline") {
    std::string file = temp_dir() + "/p3.tiles";
    RunResult gen = run("generate standard 3 -o " + file);
    CHECK(gen.exit_code == 0);
    RunResult val = run("validate " + file);
    CHECK(val.exit_code == 0);
    CHECK(val.out == "0 violations\n");
}

TEST_CASE("validate reports violations with edge coordinates and exits 1") {
    std::string file = temp_dir() + "/bad.tiles";
    spit(file, "monotile-patch v1\n0 0 0 0\n1 0 0 1\n");
    RunResult val = run("validate " + file);
    CHECK(val.exit_code == 1);
    CHECK(val.out.find("1 violations") != std::string::npos);
    CHECK(val.out.find("R2") != std::string::npos);
    CHECK(val.out.find("(0,0):d0") != std::string::npos);
}

TEST_CASE("analyze a generated patch") {
    std::string file = temp_dir() + "/p2.tiles";
    REQUIRE(run("generate standard 2 -o " + file).exit_code == 0);
    RunResult ana = run("analyze " + file);
    CHECK(ana.exit_code == 0);
    CHECK(ana.out.find("size 4: 1") != std::string::npos);
    CHECK(ana.out.find("no-fff-cycle: OK") != std::string::npos);
}

TEST_CASE("complete a disc and validate the result") {
    std::string file = temp_dir() + "/disc.tiles";
    RunResult comp = run("complete --region disc:2 --mode full -o " + file);
    CHECK(comp.exit_code == 0);
    CHECK(run("validate " + file).exit_code == 0);
}

TEST_CASE("complete with contradictory pins exits 1") {
    std::string pins = temp_dir() + "/pins.tiles";
    spit(pins, "monotile-patch v1\n0 0 0 0\n1 0 0 1\n");
    RunResult comp = run("complete --region disc:2 --pins " + pins);
    CHECK(comp.exit_code == 1);
}

TEST_CASE("sweep passes on small indices") {
    RunResult sw = run("sweep --max-index 2");
    CHECK(sw.exit_code == 0);
    CHECK(sw.out.find("PASS") != std::string::npos);
    CHECK(sw.out.find("verdict=UNSAT") != std::string::npos);
}

TEST_CASE("render emits byte-identical SVG on repeated runs") {
    std::string file = temp_dir() + "/p1.tiles";
    REQUIRE(run("generate standard 1 -o " + file).exit_code == 0);
    std::string svg1 = temp_dir() + "/a.svg", svg2 = temp_dir() + "/b.svg";
    CHECK(run("render " + file + " -o " + svg1).exit_code == 0);
    CHECK(run("render " + file + " -o " + svg2).exit_code == 0);
    std::string a = slurp(svg1);
    CHECK_FALSE(a.empty());
    CHECK(a == slurp(svg2));
    CHECK(a.find("<svg") == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("generate standard").exit_code == 2);  // missing argument
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("malformed patch files exit 1 with a parse diagnostic") {
    std::string file = temp_dir() + "/broken.tiles";
    spit(file, "monotile-patch v1\n0 0 nonsense\n");
    RunResult val = run("validate " + file);
    CHECK(val.exit_code == 1);
}
