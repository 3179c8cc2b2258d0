#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fds/cli.hpp"
#include "fds/error.hpp"
#include "fds/esscan.hpp"
#include "fds/problem_io.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fds::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("fds_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

std::string p_line(const std::string& report) {
  // The first data row of the solution table starts with p.
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("# solution", 0) == 0) {
      std::getline(in, line);
      std::getline(in, line);
      std::getline(in, line);
      return line.substr(0, line.find(' '));
    }
  return "";
}

}  // namespace

TEST_CASE("problem files round-trip") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 20; ++it) {
    fdstest::RandomShape spec;
    spec.explicit_stops = it % 2 == 0;
    auto f = fdstest::random_problem(rng, spec);
    auto text = fds::serialize_problem(f);
    auto g = fds::parse_problem(text);
    CHECK(g == f);
    CHECK(fds::serialize_problem(g) == text);
  }
  auto f = fds::parse_problem(fds::read_file(fdstest::fixture("siouxfalls_routes.json")));
  CHECK(fds::parse_problem(fds::serialize_problem(f)) == f);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(fds::parse_problem("{"), fds::Error);
  auto text = fds::read_file(fdstest::fixture("pendant_cycle.json"));
  auto frac = text;
  frac.replace(frac.find("\"flow\": 10"), 10, "\"flow\": 1.5");
  CHECK_THROWS_AS(fds::parse_problem(frac), fds::Error);
  CHECK(run({"scan", "-n", "/nonexistent/problem.json"}).code == fds::kInputError);
  CHECK(run({"scan", "-n", temp_file("frac.json", frac)}).code == fds::kInputError);
  CHECK(run({"frobnicate"}).code == fds::kInputError);
}

TEST_CASE("scan reports") {
  auto r = run({"scan", "-n", fdstest::fixture("pendant_cycle.json")});
  CHECK(r.code == fds::kOk);
  CHECK(r.out.find("v8-v9") != std::string::npos);
  CHECK(run({"scan", "-n", fdstest::fixture("pendant_cycle.json")}).out == r.out);
  for (auto fmt : {"csv", "records"}) {
    auto a = run({"scan", "-n", fdstest::fixture("siouxfalls_routes.json"), "--format", fmt});
    CHECK(a.code == fds::kOk);
    CHECK(a.out == run({"scan", "-n", fdstest::fixture("siouxfalls_routes.json"), "--format", fmt}).out);
  }
  auto f = fds::parse_problem(fds::read_file(fdstest::fixture("pendant_cycle.json")));
  f.routes.clear();
  CHECK(run({"scan", "-n", temp_file("empty.json", fds::serialize_problem(f))}).code == fds::kOk);
}

TEST_CASE("solve reports") {
  std::map<std::string, std::string> want{{"siouxfalls_classes", "2"},  {"sanantonio_classes", "2"},
                                          {"sanantonio_vertex_classes", "3"}, {"siouxfalls_d3_r100", "2"},
                                          {"siouxfalls_d11_r100", "1"}, {"siouxfalls_d4_r106", "2"}};
  for (const auto& [name, p] : want) {
    auto r = run({"solve", "--classes", fdstest::fixture(name + ".json")});
    CHECK(r.code == fds::kOk);
    CHECK(p_line(r.out) == p);
  }
  auto bad = fds::make_instance({"A", "B"}, {1, 1}, {{"x", {"A"}}});
  auto path = temp_file("uncoverable.json", fds::serialize_classes(fds::export_classes(bad)));
  CHECK(run({"solve", "--classes", path}).code == fds::kInfeasible);

  auto fig8 = fdstest::fixture("shared_corridor.json");
  CHECK(p_line(run({"solve", "-n", fig8}).out) == "1");
  CHECK(p_line(run({"solve", "-n", fig8, "--discrete-vertices"}).out) == "2");
  CHECK(run({"solve", "-n", fig8, "--all-optima", "--expand"}).code == fds::kOk);
}

TEST_CASE("solving a problem equals solving its exported classes") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 15; ++it) {
    auto f = fdstest::random_problem(rng);
    auto problem = temp_file("problem.json", fds::serialize_problem(f));
    auto classes = (std::filesystem::temp_directory_path() / "fds_test_exported.json").string();
    REQUIRE(run({"scan", "-n", problem, "--classes-out", classes}).code == fds::kOk);
    auto a = run({"solve", "-n", problem, "--all-optima"});
    auto b = run({"solve", "--classes", classes, "--all-optima"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify") {
  auto ok = run({"verify", "-n", fdstest::fixture("pendant_cycle.json"), "--samples-per-edge", "32"});
  CHECK(ok.code == fds::kOk);
  auto bad = run({"verify", "-n", fdstest::fixture("shared_corridor.json"), "--drop-endpoint", "5", "--drop-endpoint", "6"});
  CHECK(bad.code == fds::kViolation);
  CHECK(bad.out.find("no endpoint dominates") != std::string::npos);
}

TEST_CASE("sensitivity") {
  auto r = run({"sensitivity", "-n", fdstest::fixture("coincidence.json"), "-D", "2,3,4"});
  CHECK(r.code == fds::kOk);
  auto none = r.out.find("  none\n"), point = r.out.find("  point\n"), interval = r.out.find("  interval\n");
  CHECK(none != std::string::npos);
  CHECK(point != std::string::npos);
  CHECK(interval != std::string::npos);
  CHECK(none < point);
  CHECK(point < interval);
  auto one = run({"sensitivity", "-n", fdstest::fixture("coincidence.json"), "-D", "4", "-R", "100", "--format", "csv"});
  CHECK(one.code == fds::kOk);
  CHECK(one.out == run({"sensitivity", "-n", fdstest::fixture("coincidence.json"), "-D", "4", "-R", "100", "--format", "csv"}).out);
}
