#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fds/route.hpp"

namespace fds {

struct Params {
  Length D;
  Length R;
};

struct DeviationPlan {
  std::string route;
  EdgePoint station;
  int last_stop = -1;
  int va_pos = -1;
  int return_pos = -1;  // v^b(s^f(s^l)) as a walk position
  int return_vertex = -1;
  int deviation_pos = -1;
  int deviation_vertex = -1;
  Length deviation_out;  // l(v^d, x)
  Length return_leg;     // l(x, v^b)
  Length l_prime;
  Length trip_length;    // left side of the range constraint
  Length additional_distance;
  bool feasible = false;
};

struct LastStop {
  int stop = -1;
  bool tied = false;
};

// Distance from a network vertex to a point, specialised to exact vertices.
Length to_point(const Network& net, int v, const EdgePoint& x);

LastStop last_stop(const RouteGeom& g, const EdgePoint& x);
// Returns the window index j, i.e. position g.window_pos(s_l, j).
int deviation_vertex(const RouteGeom& g, const EdgePoint& x, int s_l);
Length l_prime(const RouteGeom& g, int vb_pos, int vd_pos);

// Full pipeline without the on-route shortcut; used for covers and for
// evaluating entry vertices during scanning.
DeviationPlan plan_at(const RouteGeom& g, const EdgePoint& x, const Params& p);

struct CoverResult {
  bool covered = false;
  bool on_route = false;
  std::optional<DeviationPlan> plan;
};

CoverResult covers(const RouteGeom& g, const EdgePoint& x, const Params& p);

// Existential check over every stop and every vertex of its window.
// If witnesses is non-null, every feasible (stop, vertex) plan is appended.
bool oracle_covers(const RouteGeom& g, const EdgePoint& x, const Params& p,
                   std::vector<DeviationPlan>* witnesses = nullptr);

Length additional_distance(const RouteGeom& g, const DeviationPlan& plan);

struct Coverage {
  std::vector<int> routes;  // indices into the route list given
  long long flow = 0;
};

Coverage covered_routes(const std::vector<RouteGeom>& H, const EdgePoint& x, const Params& p);

// Route is coverable but the first partial trip may run short: l(U) <= R < l(U) + D.
bool first_trip_warning(const RouteGeom& g, const Params& p);

}  // namespace fds
