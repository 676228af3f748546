// Copyright 2026 The iasi Authors
//
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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "iasi/cli.hpp"
#include "iasi/json_io.hpp"
#include "iasi/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "iasi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = iasi::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("iasi-cli-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify") {
    TempDir d;
    const auto g = d.write("g.txt", "a b\nb c\n");
    const auto good = d.write("f.txt", "a: {1}\nb: {2}\nc: {4}\n");
    const auto bad = d.write("bad.txt", "a: {1}\nb: {2}\nc: {1}\n");
    auto r = run({"verify", g, good});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_iasi: true") != std::string::npos);
    r = run({"verify", g, bad});
    CHECK(r.code == 1);
    CHECK(r.out.find("vertex_witness: a,c") != std::string::npos);

    r = run({"verify", g, good, "--json"});
    REQUIRE(r.code == 0);
    const auto parsed = iasi::Json::parse(r.out).get<iasi::VerificationReport>();
    CHECK(parsed == iasi::verify(iasi::parse_graph("a b\nb c"), iasi::parse_labeling("a: {1}\nb: {2}\nc: {4}")));
  }

  TEST_CASE("usage and input errors exit 2") {
    TempDir d;
    const auto g = d.write("g.txt", "a b\n");
    const auto loop = d.write("loop.txt", "a a\n");
    const auto f = d.write("f.txt", "a: {1}\nb: {2}\n");
    CHECK(run({}).code == 2);
    CHECK(run({"verify", g}).code == 2);
    CHECK(run({"verify", g, f, "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", d.path("missing.txt"), f}).code == 2);
    const auto r = run({"verify", loop, f});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
    CHECK(run({"--universe-bound", "2", "verify", g, f}).code == 2);
    CHECK(run({"bounds", "--n", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("bounds") {
    auto r = run({"bounds", "--n", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    CHECK(run({"bounds", "--n", "6", "--l", "2"}).out == "4\n");
    r = run({"bounds", "--n", "8", "--json"});
    CHECK(iasi::Json::parse(r.out).at("lower_bound") == 4);
  }

  TEST_CASE("transform") {
    TempDir d;
    const auto g = d.write("g.txt", "a b\nb c\n");
    const auto f = d.write("f.txt", "a: {1}\nb: {2}\nc: {4}\n");
    auto r = run({"transform", "--op", "line", g, "--labels", f});
    CHECK(r.code == 0);
    CHECK(r.out.find("# graph\nvertex e:a-b\nvertex e:b-c\ne:a-b e:b-c\n") != std::string::npos);
    CHECK(r.out.find("e:a-b: {3}") != std::string::npos);
    CHECK(r.out.find("e:b-c: edge b c") != std::string::npos);

    r = run({"transform", "--op", "contract", g, "--labels", f, "--edge", "a,b", "--out", d.path("c")});
    CHECK(r.code == 0);
    CHECK(slurp(d.path("c.graph")) == "vertex m:a+b\nvertex c\nm:a+b c\n");
    CHECK(slurp(d.path("c.labels")) == "m:a+b: {3}\nc: {4}\n");
    CHECK(slurp(d.path("c.provenance")) == "m:a+b: merged a b\nc: vertex c\n");

    r = run({"transform", "--op", "total", g, "--json"});
    CHECK(r.code == 0);
    CHECK(iasi::Json::parse(r.out).contains("graph"));

    r = run({"transform", "--op", "reduce", g, "--vertex", "b"});
    CHECK(r.code == 0);
    CHECK(run({"transform", "--op", "reduce", g, "--vertex", "a"}).code == 2);
    CHECK(run({"transform", "--op", "contract", g, "--edge", "a,b", "--vertex", "b"}).code == 2);
    CHECK(run({"transform", "--op", "contract", g}).code == 2);
    CHECK(run({"transform", "--op", "spin", g}).code == 2);

    const auto k3 = d.write("k3.txt", "a b\nb c\na c\n");
    const auto clash = d.write("clash.txt", "a: {1}\nb: {2}\nc: {3}\n");
    CHECK(run({"transform", "--op", "contract", k3, "--labels", clash, "--edge", "a,b"}).code == 1);
  }

  TEST_CASE("search exit codes") {
    TempDir d;
    const auto k3 = d.write("k3.txt", "a b\nb c\na c\n");
    auto r = run({"search", "--mode", "iasi", "--ground-max", "2", k3});
    CHECK(r.code == 0);
    CHECK(r.out.find("status: found") != std::string::npos);
    CHECK(run({"search", "--ground-max", "0", k3}).code == 1);
    CHECK(run({"search", "--mode", "strong", "--ground-max", "5", "--max-nodes", "1", k3}).code == 3);
    CHECK(run({"search", "--mode", "sideways", "--ground-max", "2", k3}).code == 2);

    r = run({"search", "--mode", "weak", "--ground-max", "3", "--json", k3});
    const auto o = iasi::Json::parse(r.out).get<iasi::SearchOutcome>();
    CHECK((o.status == iasi::SearchStatus::found) == (r.code == 0));

    r = run({"search", "--ground-max", "4", "--minimize", k3});
    CHECK(r.code == 0);
    CHECK(r.out.find("lower_bound: 2") != std::string::npos);
    r = run({"search", "--ground-max", "4", "--minimize", "--json", "--parallel", k3});
    CHECK(iasi::Json::parse(r.out).at("status") == "found");
  }

  TEST_CASE("harness") {
    TempDir d;
    auto r = run({"harness", "--max-n", "3", "--seed", "5", "--json", "--out", d.path("h.json")});
    CHECK(r.code == 0);
    const auto j = iasi::Json::parse(r.out);
    CHECK(j.at("theorems").size() == 13);
    CHECK(slurp(d.path("h.json")) == r.out);
    r = run({"harness", "--max-n", "3", "--seed", "5", "--theorem", "T1", "--serial"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T1: holds") != std::string::npos);
    CHECK(run({"harness", "--max-n", "3", "--theorem", "T99"}).code == 2);
    CHECK(run({"harness", "--max-n", "9"}).code == 2);
  }

  TEST_CASE("emit-dot") {
    TempDir d;
    const auto g = d.write("g.txt", "a b\n");
    const auto f = d.write("f.txt", "a: {1}\nb: {2}\n");
    auto r = run({"emit-dot", g, "--labels", f});
    CHECK(r.code == 0);
    CHECK(r.out.find("{3}") != std::string::npos);
    CHECK(run({"emit-dot", g}).out.rfind("graph G {", 0) == 0);
  }
}
