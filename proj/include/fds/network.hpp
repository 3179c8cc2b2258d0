#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fds/length.hpp"

namespace fds {

struct RawEdge {
  std::string u, v;
  Length length;
};

struct Edge {
  int u = -1, v = -1;
  Length length;
};

// A point on an edge, measured from the edge's u endpoint.
struct EdgePoint {
  int edge = -1;
  Length offset;
};

// Closed interval [lo, hi] along one edge.
struct Segment {
  int edge = -1;
  Length lo, hi;
  bool operator==(const Segment&) const = default;
};

class Network {
 public:
  static Network build(std::vector<std::string> vertices, const std::vector<RawEdge>& edges);

  int n() const { return static_cast<int>(names_.size()); }
  int e() const { return static_cast<int>(edges_.size()); }

  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  int index(std::string_view id) const;
  std::optional<int> find(std::string_view id) const;

  const Edge& edge(int i) const { return edges_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident(int v) const { return incident_.at(v); }
  std::optional<int> edge_between(int a, int b) const;
  std::string edge_label(int i) const;

  const Length& dist(int a, int b) const { return dist_[a * n() + b]; }
  Length vertex_distance(std::string_view a, std::string_view b) const;
  Length point_distance(int v, const EdgePoint& x) const;

  // Vertex the point sits on, if offset is 0 or the full length.
  std::optional<int> vertex_at(const EdgePoint& x) const;
  // Vertex-coincident points move to the lowest-numbered incident edge, so
  // equal locations compare equal.
  EdgePoint canonical(const EdgePoint& x) const;
  bool same_point(const EdgePoint& a, const EdgePoint& b) const;
  EdgePoint vertex_point(int v) const;
  void check_point(const EdgePoint& x) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<Length> dist_;
};

}  // namespace fds
