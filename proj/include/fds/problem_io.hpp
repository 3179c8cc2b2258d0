#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fds/coverage.hpp"
#include "fds/setcover.hpp"

namespace fds {

struct RouteSpec {
  std::string id;
  long long flow = 0;
  std::vector<std::pair<std::string, std::string>> traversals;
  std::optional<std::vector<Stop>> stops;  // nullopt = dense
  bool operator==(const RouteSpec&) const = default;
};

struct ProblemFile {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
  std::vector<RouteSpec> routes;
  Params params;
  bool operator==(const ProblemFile& o) const;
};

struct Problem {
  Network net;
  std::vector<Route> routes;
  Params params;
};

struct ClassesFile {
  std::vector<std::string> routes;
  std::vector<long long> flows;
  std::vector<ClassRow> rows;
};

ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& f);
Problem materialize(const ProblemFile& f);

ClassesFile parse_classes(const std::string& text);
std::string serialize_classes(const ClassesFile& f);
ClassesFile export_classes(const CoverInstance& inst);

std::string read_file(const std::string& path);

}  // namespace fds
