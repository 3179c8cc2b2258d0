#include "fds/coverage.hpp"

#include "fds/error.hpp"

namespace fds {

Length to_point(const Network& net, int v, const EdgePoint& x) { return net.point_distance(v, x); }

namespace {

Length eq4_total(const RouteGeom& g, int i, const EdgePoint& x) {
  const Network& net = g.net();
  int f = g.next_stop(i);
  const Stop& s = g.stop(i);
  const Stop& sf = g.stop(f);
  Length total = g.trav_length(s.traversal) - s.offset;
  total += to_point(net, g.vertex_at_pos(g.va_pos(i)), x);
  total += to_point(net, g.vertex_at_pos(g.vb_pos(f)), x);
  total += sf.offset;
  total += (f == i) ? Length(0) : g.walk_length(sf, s);
  return total;
}

DeviationPlan make_plan(const RouteGeom& g, const EdgePoint& x, const Params& p, int s_l, int j) {
  const Network& net = g.net();
  DeviationPlan plan;
  plan.route = g.route().id;
  plan.station = x;
  plan.last_stop = s_l;
  plan.va_pos = g.va_pos(s_l);
  plan.return_pos = g.vb_pos(g.next_stop(s_l));
  plan.return_vertex = g.vertex_at_pos(plan.return_pos);
  plan.deviation_pos = g.window_pos(s_l, j);
  plan.deviation_vertex = g.vertex_at_pos(plan.deviation_pos);
  plan.deviation_out = to_point(net, plan.deviation_vertex, x);
  plan.return_leg = to_point(net, plan.return_vertex, x);
  plan.l_prime = l_prime(g, plan.return_pos, plan.deviation_pos);
  plan.trip_length = plan.deviation_out + plan.return_leg + plan.l_prime;
  plan.additional_distance = plan.deviation_out + plan.return_leg - g.pos_forward(plan.deviation_pos, plan.return_pos);
  plan.feasible = plan.trip_length <= p.R && plan.deviation_out <= p.D;
  return plan;
}

}  // namespace

LastStop last_stop(const RouteGeom& g, const EdgePoint& x) {
  if (g.k() == 0) throw Error(Errc::NoStops, "route " + g.route().id);
  LastStop best;
  Length best_total;
  for (int i = 0; i < g.k(); ++i) {
    if (g.window_size(i) == 0) continue;
    Length t = eq4_total(g, i, x);
    if (best.stop < 0 || t < best_total) {
      best = LastStop{i, false};
      best_total = t;
    } else if (t == best_total) {
      best.tied = true;
    }
  }
  if (best.stop < 0) throw Error(Errc::NoStops, "route " + g.route().id + " has no deviation window");
  return best;
}

int deviation_vertex(const RouteGeom& g, const EdgePoint& x, int s_l) {
  int best = -1;
  Length best_cost;
  int va = g.va_pos(s_l);
  for (int j = 0; j < g.window_size(s_l); ++j) {
    int pos = g.window_pos(s_l, j);
    Length c = to_point(g.net(), g.vertex_at_pos(pos), x) + g.pos_forward(va, pos);
    if (best < 0 || c < best_cost) {
      best = j;
      best_cost = c;
    }
  }
  return best;
}

Length l_prime(const RouteGeom& g, int vb_pos, int vd_pos) {
  if (vb_pos == vd_pos) return g.length();
  return g.pos_forward(vb_pos, vd_pos);
}

DeviationPlan plan_at(const RouteGeom& g, const EdgePoint& x, const Params& p) {
  g.net().check_point(x);
  int s_l = last_stop(g, x).stop;
  int j = deviation_vertex(g, x, s_l);
  return make_plan(g, x, p, s_l, j);
}

CoverResult covers(const RouteGeom& g, const EdgePoint& x, const Params& p) {
  CoverResult r;
  g.net().check_point(x);
  if (g.on_route(x)) {
    r.covered = r.on_route = true;
    return r;
  }
  r.plan = plan_at(g, x, p);
  r.covered = r.plan->feasible;
  return r;
}

bool oracle_covers(const RouteGeom& g, const EdgePoint& x, const Params& p, std::vector<DeviationPlan>* witnesses) {
  g.net().check_point(x);
  bool any = g.on_route(x);
  if (any && !witnesses) return true;
  for (int i = 0; i < g.k(); ++i)
    for (int j = 0; j < g.window_size(i); ++j) {
      DeviationPlan plan = make_plan(g, x, p, i, j);
      if (!plan.feasible) continue;
      any = true;
      if (!witnesses) return true;
      witnesses->push_back(std::move(plan));
    }
  return any;
}

Length additional_distance(const RouteGeom& g, const DeviationPlan& plan) {
  if (!plan.feasible) throw Error(Errc::InfeasiblePlan, "route " + plan.route);
  return plan.deviation_out + plan.return_leg - g.pos_forward(plan.deviation_pos, plan.return_pos);
}

Coverage covered_routes(const std::vector<RouteGeom>& H, const EdgePoint& x, const Params& p) {
  Coverage c;
  for (int i = 0; i < static_cast<int>(H.size()); ++i)
    if (covers(H[i], x, p).covered) {
      c.routes.push_back(i);
      c.flow += H[i].route().flow;
    }
  return c;
}

bool first_trip_warning(const RouteGeom& g, const Params& p) {
  return g.length() <= p.R && p.R < g.length() + p.D;
}

}  // namespace fds
