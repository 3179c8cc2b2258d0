#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fds/coverage.hpp"

namespace fds {

struct EntryEval {
  int vertex = -1;
  bool evaluated = false;
  Length beta, delta;
  std::optional<Segment> segment;
};

struct ScanCell {
  int route = -1;  // index into ScanResult::H
  int edge = -1;
  bool on_route = false;
  EntryEval a, b;  // entry via edge.u and edge.v
  std::vector<Segment> rs;
};

struct Endpoint {
  int id = -1;
  EdgePoint location;          // canonical
  std::optional<int> vertex;   // set when the point is a network vertex
  std::vector<int> signature;  // sorted indices into H
  long long flow = 0;
};

struct CandidateClass {
  std::vector<int> signature;
  std::vector<int> members;  // endpoint ids, ascending
  int representative = -1;
  long long flow = 0;
};

struct ScanStats {
  int n = 0, e = 0, h = 0;
  std::size_t endpoints = 0;
  double seconds = 0;
};

struct ScanResult {
  std::vector<RouteGeom> H;
  std::vector<int> h_source;  // position of each H route in the input list
  Params params;
  std::vector<ScanCell> cells;
  std::vector<Endpoint> endpoints;
  std::vector<std::vector<int>> edge_endpoints;  // per edge, endpoint ids by offset
  std::vector<CandidateClass> classes;
  ScanStats stats;

  const ScanCell* cell(int route, int edge) const;
  Length offset_on(int endpoint, int edge) const;
};

std::vector<int> candidate_edges(const RouteGeom& g, const Params& p);
Length beta(const RouteGeom& g, int edge, int q, const Params& p);
Length delta(const RouteGeom& g, int edge, int q, const Params& p);
EntryEval entry_eval(const RouteGeom& g, int edge, int q, const Params& p);
ScanCell scan_cell(const RouteGeom& g, int edge, const Params& p);
std::vector<Segment> refueling_set(const RouteGeom& g, int edge, const Params& p);

bool in_segments(const std::vector<Segment>& segs, const Length& offset);
std::vector<Segment> intersect(const std::vector<Segment>& a, const std::vector<Segment>& b);

ScanResult scan(const Network& net, const std::vector<Route>& routes, const Params& p, bool prune = true);

// Coverage of the open interval between two adjacent endpoints of one edge.
Coverage interior_probe(const ScanResult& s, int wa, int wb);
// The edge shared by two endpoints, if any.
std::optional<int> shared_edge(const ScanResult& s, int wa, int wb);

std::string endpoint_label(int id);

}  // namespace fds
