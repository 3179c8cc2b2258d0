#include "fds/route.hpp"

#include <algorithm>

#include "fds/error.hpp"

namespace fds {

namespace {

bool stop_less(const Stop& a, const Stop& b) {
  return a.traversal != b.traversal ? a.traversal < b.traversal : a.offset < b.offset;
}

void check_walk_point(const Network& net, const Route& U, const WalkPoint& x) {
  if (x.traversal < 0 || x.traversal >= static_cast<int>(U.walk.size()))
    throw Error(Errc::PositionNotOnRoute, "traversal index " + std::to_string(x.traversal) + " on route " + U.id);
  const Length& len = net.edge(U.walk[x.traversal].edge).length;
  if (x.offset < 0 || x.offset > len)
    throw Error(Errc::PositionNotOnRoute, "offset " + to_decimal(x.offset) + " on route " + U.id);
}

}  // namespace

Route make_route(const Network& net, std::string id, long long flow,
                 const std::vector<std::pair<std::string, std::string>>& traversals,
                 std::optional<std::vector<Stop>> stops) {
  Route U;
  U.id = std::move(id);
  if (flow < 0) throw Error(Errc::Schema, "route " + U.id + " has negative flow");
  U.flow = flow;
  if (traversals.empty()) throw Error(Errc::BadRoute, "route " + U.id + " has no traversals");
  for (const auto& [a, b] : traversals) {
    int u = net.index(a), v = net.index(b);
    auto e = net.edge_between(u, v);
    if (!e) throw Error(Errc::BadRoute, "route " + U.id + " uses missing edge " + a + "-" + b);
    U.walk.push_back(Traversal{u, v, *e});
  }
  for (std::size_t i = 0; i < U.walk.size(); ++i) {
    const Traversal& cur = U.walk[i];
    const Traversal& nxt = U.walk[(i + 1) % U.walk.size()];
    if (cur.to != nxt.from)
      throw Error(Errc::BadRoute, "route " + U.id + " is not a closed walk at traversal " + std::to_string(i));
  }
  if (stops) {
    U.dense = false;
    U.stops = std::move(*stops);
    if (U.stops.empty()) throw Error(Errc::NoStops, "route " + U.id);
    for (const Stop& s : U.stops) check_walk_point(net, U, s);
    for (std::size_t i = 1; i < U.stops.size(); ++i)
      if (!stop_less(U.stops[i - 1], U.stops[i]))
        throw Error(Errc::BadRoute, "route " + U.id + " stops are not strictly ordered along the walk");
  } else {
    U = densify(net, U);
  }
  return U;
}

Length route_length(const Network& net, const Route& U) {
  Length s = 0;
  for (const Traversal& t : U.walk) s += net.edge(t.edge).length;
  return s;
}

Length subroute_length(const Network& net, const Route& U, const WalkPoint& xs, const WalkPoint& xk) {
  check_walk_point(net, U, xs);
  check_walk_point(net, U, xk);
  Length before_s = xs.offset, before_k = xk.offset;
  for (int t = 0; t < xs.traversal; ++t) before_s += net.edge(U.walk[t].edge).length;
  for (int t = 0; t < xk.traversal; ++t) before_k += net.edge(U.walk[t].edge).length;
  if (!stop_less(xk, xs)) return before_k - before_s;
  return route_length(net, U) - (before_s - before_k);
}

std::vector<Route> admissible_routes(const Network& net, const std::vector<Route>& all, const Length& R) {
  std::vector<Route> h;
  for (const Route& U : all)
    if (U.flow > 0 && route_length(net, U) <= R) h.push_back(U);
  return h;
}

Route densify(const Network& net, const Route& U) {
  if (!U.dense && !U.stops.empty()) return U;
  Route out = U;
  out.dense = true;
  out.stops.clear();
  for (int t = 0; t < static_cast<int>(U.walk.size()); ++t) {
    out.stops.push_back(Stop{t, Length(0)});
    out.stops.push_back(Stop{t, net.edge(U.walk[t].edge).length});
  }
  return out;
}

RouteGeom::RouteGeom(const Network& net, const Route& U) : net_(&net), route_(densify(net, U)) {
  cum_.reserve(m() + 1);
  cum_.push_back(0);
  for (int t = 0; t < m(); ++t) cum_.push_back(cum_.back() + trav_length(t));
  total_ = cum_.back();
  edge_used_.assign(net.e(), 0);
  vertex_used_.assign(net.n(), 0);
  for (const Traversal& t : route_.walk) {
    edge_used_[t.edge] = 1;
    vertex_used_[t.from] = vertex_used_[t.to] = 1;
  }
  std::vector<char> in_window(net.n(), 0);
  for (int i = 0; i < k(); ++i)
    for (int j = 0; j < window_size(i); ++j) in_window[vertex_at_pos(window_pos(i, j))] = 1;
  for (int v = 0; v < net.n(); ++v)
    if (in_window[v]) window_vertices_.push_back(v);
}

int RouteGeom::window_size(int i) const {
  int j = next_stop(i);
  int t = stop(i).traversal, tn = stop(j).traversal;
  if (j == i) return m();
  if (j > i) return tn - t;
  return tn - t + m();
}

Length RouteGeom::walk_length(const WalkPoint& a, const WalkPoint& b) const {
  Length ca = cum_[a.traversal] + a.offset, cb = cum_[b.traversal] + b.offset;
  if (!stop_less(b, a)) return cb - ca;
  return total_ - (ca - cb);
}

Length RouteGeom::pos_forward(int p, int q) const {
  if (p == q) return 0;
  if (q > p) return cum_[q] - cum_[p];
  return total_ - (cum_[p] - cum_[q]);
}

bool RouteGeom::on_route(const EdgePoint& x) const {
  if (edge_used_[x.edge]) return true;
  auto v = net_->vertex_at(x);
  return v && vertex_used_[*v];
}

}  // namespace fds
