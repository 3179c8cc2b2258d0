#include "fds/esscan.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "fds/error.hpp"

namespace fds {

namespace {

Length lmin(const Length& a, const Length& b) { return a < b ? a : b; }

std::vector<Segment> merge(int edge, const Length& len, const EntryEval& a, const EntryEval& b) {
  std::vector<Segment> out;
  bool has_a = a.evaluated && a.delta >= 0;
  bool has_b = b.evaluated && b.delta >= 0;
  if ((has_a && a.delta >= len) || (has_b && b.delta >= len)) return {Segment{edge, 0, len}};
  if (has_a && has_b && a.delta >= len - b.delta) return {Segment{edge, 0, len}};
  if (has_a) out.push_back(*a.segment);
  if (has_b) out.push_back(*b.segment);
  return out;
}

}  // namespace

const ScanCell* ScanResult::cell(int route, int edge) const {
  for (const ScanCell& c : cells)
    if (c.route == route && c.edge == edge) return &c;
  return nullptr;
}

Length ScanResult::offset_on(int endpoint, int edge) const {
  const Endpoint& w = endpoints.at(endpoint);
  if (w.location.edge == edge) return w.location.offset;
  const Network& net = H.empty() ? throw std::logic_error("empty scan") : H.front().net();
  const Edge& ed = net.edge(edge);
  if (w.vertex && *w.vertex == ed.u) return 0;
  if (w.vertex && *w.vertex == ed.v) return ed.length;
  throw Error(Errc::NotAdjacent, endpoint_label(endpoint) + " is not on edge " + net.edge_label(edge));
}

std::string endpoint_label(int id) { return "w" + std::to_string(id + 1); }

std::vector<int> candidate_edges(const RouteGeom& g, const Params& p) {
  const Network& net = g.net();
  std::vector<char> pick(net.e(), 0);
  for (int e = 0; e < net.e(); ++e)
    if (g.uses_edge(e)) pick[e] = 1;
  for (int v = 0; v < net.n(); ++v) {
    bool near = false;
    for (int w : g.window_vertices())
      if (net.dist(w, v) <= p.D) {
        near = true;
        break;
      }
    if (near)
      for (int e : net.incident(v)) pick[e] = 1;
  }
  std::vector<int> out;
  for (int e = 0; e < net.e(); ++e)
    if (pick[e]) out.push_back(e);
  return out;
}

EntryEval entry_eval(const RouteGeom& g, int edge, int q, const Params& p) {
  const Network& net = g.net();
  const Edge& ed = net.edge(edge);
  if (g.uses_edge(edge)) throw Error(Errc::EdgeOnRoute, net.edge_label(edge) + " on route " + g.route().id);
  if (q != ed.u && q != ed.v) throw Error(Errc::InvalidOffset, "entry vertex not on edge " + net.edge_label(edge));
  int w = q == ed.u ? ed.v : ed.u;
  DeviationPlan plan = plan_at(g, net.vertex_point(q), p);
  EntryEval r;
  r.vertex = q;
  r.evaluated = true;
  Length through = p.R - (plan.deviation_out + net.dist(w, plan.return_vertex) + plan.l_prime);
  if (through >= ed.length)
    r.beta = ed.length;
  else
    r.beta = half(p.R - (plan.deviation_out + net.dist(q, plan.return_vertex) + plan.l_prime));
  r.delta = lmin(p.D - plan.deviation_out, r.beta);
  if (r.delta >= 0) {
    Length reach = lmin(r.delta, ed.length);
    r.segment = q == ed.u ? Segment{edge, 0, reach} : Segment{edge, ed.length - reach, ed.length};
  }
  return r;
}

Length beta(const RouteGeom& g, int edge, int q, const Params& p) { return entry_eval(g, edge, q, p).beta; }
Length delta(const RouteGeom& g, int edge, int q, const Params& p) { return entry_eval(g, edge, q, p).delta; }

ScanCell scan_cell(const RouteGeom& g, int edge, const Params& p) {
  const Edge& ed = g.net().edge(edge);
  ScanCell c;
  c.edge = edge;
  if (g.uses_edge(edge)) {
    c.on_route = true;
    c.rs = {Segment{edge, 0, ed.length}};
    return c;
  }
  c.a = entry_eval(g, edge, ed.u, p);
  if (!(c.a.delta >= ed.length)) c.b = entry_eval(g, edge, ed.v, p);
  c.rs = merge(edge, ed.length, c.a, c.b);
  return c;
}

std::vector<Segment> refueling_set(const RouteGeom& g, int edge, const Params& p) {
  auto m = candidate_edges(g, p);
  if (!std::binary_search(m.begin(), m.end(), edge))
    throw Error(Errc::EdgeNotCandidate, g.net().edge_label(edge) + " for route " + g.route().id);
  return scan_cell(g, edge, p).rs;
}

bool in_segments(const std::vector<Segment>& segs, const Length& offset) {
  for (const Segment& s : segs)
    if (s.lo <= offset && offset <= s.hi) return true;
  return false;
}

std::vector<Segment> intersect(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  std::vector<Segment> out;
  for (const Segment& x : a)
    for (const Segment& y : b) {
      if (x.edge != y.edge) continue;
      Length lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
      if (lo <= hi) out.push_back(Segment{x.edge, lo, hi});
    }
  return out;
}

ScanResult scan(const Network& net, const std::vector<Route>& routes, const Params& p, bool prune) {
  auto t0 = std::chrono::steady_clock::now();
  ScanResult s;
  s.params = p;
  for (int i = 0; i < static_cast<int>(routes.size()); ++i) {
    const Route& U = routes[i];
    if (U.flow > 0 && route_length(net, U) <= p.R) {
      s.H.emplace_back(net, U);
      s.h_source.push_back(i);
    }
  }
  const int h = static_cast<int>(s.H.size());

  for (int r = 0; r < h; ++r) {
    std::vector<int> edges;
    if (prune) {
      edges = candidate_edges(s.H[r], p);
    } else {
      for (int e = 0; e < net.e(); ++e) edges.push_back(e);
    }
    for (int e : edges) {
      ScanCell c = scan_cell(s.H[r], e, p);
      c.route = r;
      if (!prune && c.rs.empty()) continue;
      s.cells.push_back(std::move(c));
    }
  }

  // Step 3: canonical endpoint locations, merged across routes and edges.
  std::map<std::pair<int, Length>, int> index;
  std::vector<EdgePoint> locs;
  for (const ScanCell& c : s.cells)
    for (const Segment& seg : c.rs)
      for (const Length& off : {seg.lo, seg.hi}) {
        EdgePoint x = net.canonical(EdgePoint{c.edge, off});
        if (index.emplace(std::make_pair(x.edge, x.offset), 0).second) locs.push_back(x);
      }
  std::sort(locs.begin(), locs.end(), [](const EdgePoint& a, const EdgePoint& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.offset < b.offset;
  });
  s.edge_endpoints.assign(net.e(), {});
  for (int id = 0; id < static_cast<int>(locs.size()); ++id) {
    Endpoint w;
    w.id = id;
    w.location = locs[id];
    w.vertex = net.vertex_at(locs[id]);
    index[{locs[id].edge, locs[id].offset}] = id;
    if (w.vertex) {
      for (int e : net.incident(*w.vertex)) s.edge_endpoints[e].push_back(id);
    } else {
      s.edge_endpoints[locs[id].edge].push_back(id);
    }
    s.endpoints.push_back(std::move(w));
  }

  // Step 4: signatures as union of memberships over every edge the point lies on.
  std::vector<std::vector<char>> member(locs.size(), std::vector<char>(h, 0));
  for (const ScanCell& c : s.cells) {
    for (int id : s.edge_endpoints[c.edge]) {
      if (member[id][c.route]) continue;
      if (in_segments(c.rs, s.offset_on(id, c.edge))) member[id][c.route] = 1;
    }
  }
  for (Endpoint& w : s.endpoints) {
    for (int r = 0; r < h; ++r)
      if (member[w.id][r]) {
        w.signature.push_back(r);
        w.flow += s.H[r].route().flow;
      }
  }
  for (int e = 0; e < net.e(); ++e) {
    auto& ids = s.edge_endpoints[e];
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return s.offset_on(a, e) < s.offset_on(b, e); });
  }

  std::map<std::vector<int>, int> by_sig;
  for (const Endpoint& w : s.endpoints) {
    auto [it, fresh] = by_sig.emplace(w.signature, static_cast<int>(s.classes.size()));
    if (fresh) {
      CandidateClass cc;
      cc.signature = w.signature;
      cc.representative = w.id;
      cc.flow = w.flow;
      s.classes.push_back(cc);
    }
    s.classes[it->second].members.push_back(w.id);
  }

  if (s.endpoints.size() > static_cast<std::size_t>(4) * h * net.e())
    throw std::logic_error("endpoint count exceeds 4he");
  s.stats.n = net.n();
  s.stats.e = net.e();
  s.stats.h = h;
  s.stats.endpoints = s.endpoints.size();
  s.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

std::optional<int> shared_edge(const ScanResult& s, int wa, int wb) {
  const Endpoint& a = s.endpoints.at(wa);
  const Endpoint& b = s.endpoints.at(wb);
  const Network& net = s.H.front().net();
  if (!a.vertex) {
    if (b.vertex ? (net.edge(a.location.edge).u == *b.vertex || net.edge(a.location.edge).v == *b.vertex)
                 : b.location.edge == a.location.edge)
      return a.location.edge;
    return std::nullopt;
  }
  if (!b.vertex) return shared_edge(s, wb, wa);
  return net.edge_between(*a.vertex, *b.vertex);
}

Coverage interior_probe(const ScanResult& s, int wa, int wb) {
  if (s.H.empty()) throw Error(Errc::NotAdjacent, "empty scan");
  auto e = shared_edge(s, wa, wb);
  if (!e || wa == wb) throw Error(Errc::NotAdjacent, endpoint_label(wa) + " and " + endpoint_label(wb));
  Length lo = s.offset_on(wa, *e), hi = s.offset_on(wb, *e);
  if (hi < lo) std::swap(lo, hi);
  for (int id : s.edge_endpoints[*e]) {
    Length off = s.offset_on(id, *e);
    if (lo < off && off < hi)
      throw Error(Errc::NotAdjacent, endpoint_label(id) + " lies between " + endpoint_label(wa) + " and " +
                                         endpoint_label(wb));
  }
  return covered_routes(s.H, EdgePoint{*e, half(lo + hi)}, s.params);
}

}  // namespace fds
