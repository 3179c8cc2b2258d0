#pragma once

#include <random>
#include <string>
#include <vector>

#include "fds/problem_io.hpp"

namespace fdstest {

std::string fixture(const std::string& name);
fds::Problem load(const std::string& name);
fds::ClassesFile load_classes(const std::string& name);

struct RandomShape {
  int max_n = 12;
  int max_e = 20;
  int max_h = 4;
  bool explicit_stops = false;
};

fds::ProblemFile random_problem(std::mt19937_64& rng, const RandomShape& spec = {});

// Shortest distance by enumerating every simple path (small graphs only).
fds::Length brute_distance(const fds::ProblemFile& f, const std::string& a, const std::string& b);

// Distance from a vertex to a point, computed by splitting the point's edge
// and running Bellman-Ford on the augmented graph.
fds::Length split_distance(const fds::ProblemFile& f, const std::string& v, int edge, const fds::Length& offset);

// Minimum cover size and every minimum cover by trying all subsets.
struct Brute {
  int p = -1;
  std::vector<std::vector<int>> optima;
};
Brute brute_cover(const fds::CoverInstance& inst);

// Direct evaluation of the endpoint set: every boundary of every refueling set.
fds::Length min_edge(const fds::Network& net);

}  // namespace fdstest
