#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "omt/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const char* name) { return std::string(OMT_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "omtutte");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = omt::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tutte on the example digraph") {
  const Run r = run({"tutte", "--input", data("example1.dig")});
  CHECK(r.code == 0);
  CHECK(r.out == "x^2 + x*y + y^2 + x + y\n");
  CHECK(run({"tutte", "-i", data("example1.mat"), "--format", "matrix"}).out == r.out);
}

TEST_CASE("tutte3 and counts") {
  CHECK(run({"tutte3", "-i", data("path_parallel.persp")}).out == "x*z + z + 1\n");
  CHECK(run({"count", "acyclic", "-i", data("triangle.dig")}).out == "6 (t(2,0)=6)\n");
  CHECK(run({"count", "bounded", "-i", data("example2.persp")}).out == "10 (t(0,0,1)=10)\n");
  CHECK(run({"count", "bounded", "-i", data("triangle.dig"), "--bounded-at", "3"}).out == "2 (t(0,0,1)=2)\n");
  CHECK(run({"count", "bases", "-i", data("example1.dig")}).out == "5 (t(1,1)=5)\n");
  const Run j = run({"count", "bases", "-i", data("example1.dig"), "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["basic_orientations"][0] == "5");
  CHECK(parsed["pass"] == true);
}

TEST_CASE("activities table") {
  const Run r = run({"activities", "-i", data("example1.dig")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("A\tO*\tO\t", 0) == 0);
  CHECK(r.out.find("\n34\t13\t-\t1\t3\t-\t-\tx*u\n") != std::string::npos);
  const Run j = run({"activities", "-i", data("example1.dig"), "--json"});
  CHECK(nlohmann::json::parse(j.out)["rows"].size() == 16);
}

TEST_CASE("verify and derivative") {
  const Run v = run({"verify", "-i", data("path_parallel.persp")});
  CHECK(v.code == 0);
  CHECK(v.out.find("identity: pass") != std::string::npos);
  CHECK(run({"verify", "-i", data("example2.persp"), "--json"}).code == 0);
  const Run d = run({"derivative", "-p", "1", "-q", "0", "-i", data("example1.dig")});
  CHECK(d.code == 0);
  CHECK(d.out == "expansion: 2*x + y + 1\nderivative: 2*x + y + 1\n");
  CHECK(run({"derivative", "--diag", "-p", "1", "-i", data("example1.dig")}).out ==
        "expansion: 6*x + 2\nderivative: 6*x + 2\n");
}

TEST_CASE("input errors exit 2") {
  const Run bad = run({"tutte3", "-i", data("not_a_perspective.persp")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not a perspective") != std::string::npos);
  CHECK(run({"tutte", "-i", data("missing.dig")}).code == 2);
  CHECK(run({"tutte", "-i", data("example2.persp")}).code == 2);
  CHECK(run({"count", "bounded", "-i", data("triangle.dig")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"tutte"}).code == 2);
  CHECK(run({"tutte", "-i", data("table1.tsv")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output does not depend on the worker count") {
  for (const char* cmd : {"activities", "verify", "tutte3"}) {
    const Run one = run({cmd, "-i", data("example2.persp"), "--threads", "1"});
    for (const char* t : {"2", "4", "7"}) CHECK(run({cmd, "-i", data("example2.persp"), "--threads", t}).out == one.out);
    CHECK(run({cmd, "-i", data("example2.persp"), "--serial"}).out == one.out);
  }
}
