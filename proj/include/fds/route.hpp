#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fds/network.hpp"

namespace fds {

struct Traversal {
  int from = -1, to = -1, edge = -1;
};

// Anchored to a traversal of the walk, not to an edge, so repeated edges stay
// unambiguous. offset runs along the travel direction.
struct Stop {
  int traversal = 0;
  Length offset;
  bool operator==(const Stop&) const = default;
};

using WalkPoint = Stop;

struct Route {
  std::string id;
  long long flow = 0;
  std::vector<Traversal> walk;
  bool dense = true;
  std::vector<Stop> stops;  // materialized; for dense routes see densify()
};

Route make_route(const Network& net, std::string id, long long flow,
                 const std::vector<std::pair<std::string, std::string>>& traversals,
                 std::optional<std::vector<Stop>> stops = std::nullopt);

Length route_length(const Network& net, const Route& U);
Length subroute_length(const Network& net, const Route& U, const WalkPoint& xs, const WalkPoint& xk);
std::vector<Route> admissible_routes(const Network& net, const std::vector<Route>& all, const Length& R);
Route densify(const Network& net, const Route& U);

// Walk geometry shared by coverage and scanning. Vertex "positions" are
// indices p in [0, m): position p is the from-vertex of traversal p.
class RouteGeom {
 public:
  RouteGeom(const Network& net, const Route& U);

  const Network& net() const { return *net_; }
  const Route& route() const { return route_; }
  int m() const { return static_cast<int>(route_.walk.size()); }
  int k() const { return static_cast<int>(route_.stops.size()); }
  const Length& length() const { return total_; }
  const Length& trav_length(int t) const { return net_->edge(route_.walk[t].edge).length; }

  int vertex_at_pos(int p) const { return route_.walk[((p % m()) + m()) % m()].from; }
  const Stop& stop(int i) const { return route_.stops[i]; }
  int next_stop(int i) const { return (i + 1) % k(); }
  int va_pos(int i) const { return (stop(i).traversal + 1) % m(); }
  int vb_pos(int i) const { return stop(i).traversal; }

  // Positions from v^a(s_i) through v^b(s^f(s_i)) in walk order.
  int window_size(int i) const;
  int window_pos(int i, int j) const { return (stop(i).traversal + 1 + j) % m(); }

  Length walk_length(const WalkPoint& a, const WalkPoint& b) const;
  // Forward on-route distance between vertex positions; 0 when p == q.
  Length pos_forward(int p, int q) const;

  bool uses_edge(int e) const { return edge_used_[e]; }
  bool uses_vertex(int v) const { return vertex_used_[v]; }
  bool on_route(const EdgePoint& x) const;
  // Distinct network vertices appearing in some non-empty window.
  const std::vector<int>& window_vertices() const { return window_vertices_; }

 private:
  const Network* net_;
  Route route_;
  std::vector<Length> cum_;
  Length total_;
  std::vector<char> edge_used_, vertex_used_;
  std::vector<int> window_vertices_;
};

}  // namespace fds
