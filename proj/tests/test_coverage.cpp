#include <random>

#include "doctest.h"
#include "fds/coverage.hpp"
#include "fds/error.hpp"
#include "support.hpp"

using fds::EdgePoint;
using fds::Length;
using fds::Params;
using fds::RouteGeom;

namespace {

// Triangle a-b-c (2,3,4) with a pendant b-p of length 1.
fds::Network pendant_triangle() {
  return fds::Network::build({"a", "b", "c", "p"}, {{"a", "b", 2}, {"b", "c", 3}, {"c", "a", 4}, {"b", "p", 1}});
}

const std::vector<std::pair<std::string, std::string>> kTri{{"a", "b"}, {"b", "c"}, {"c", "a"}};

}  // namespace

TEST_CASE("pendant on an eight-cycle") {
  auto P = fdstest::load("pendant_cycle.json");
  RouteGeom g(P.net, P.routes[0]);
  auto in = fds::covers(g, {8, 1}, P.params);
  CHECK(in.covered);
  REQUIRE(in.plan);
  CHECK(in.plan->l_prime == 18);
  CHECK(in.plan->trip_length == 20);
  CHECK(P.net.name(in.plan->deviation_vertex) == "v8");
  CHECK_FALSE(fds::covers(g, {8, 2}, P.params).covered);
  CHECK(fds::oracle_covers(g, {8, 1}, P.params));
  CHECK_FALSE(fds::oracle_covers(g, {8, 2}, P.params));
  auto on = fds::covers(g, {3, 1}, P.params);
  CHECK(on.covered);
  CHECK(on.on_route);
  CHECK(fds::first_trip_warning(g, P.params));
}

TEST_CASE("last stop on a dense triangle") {
  auto n = pendant_triangle();
  RouteGeom g(n, fds::densify(n, fds::make_route(n, "U", 1, kTri)));
  EdgePoint x{3, Length(1, 2)};
  auto s = fds::last_stop(g, x);
  CHECK(n.name(g.vertex_at_pos(g.va_pos(s.stop))) == "b");
  CHECK(fds::deviation_vertex(g, x, s.stop) == 0);
}

TEST_CASE("deviation vertex over a wide window") {
  auto n = pendant_triangle();
  auto U = fds::make_route(n, "U", 1, kTri, std::vector<fds::Stop>{{1, 1}});
  RouteGeom g(n, U);
  EdgePoint x{3, Length(1, 2)};
  CHECK(fds::last_stop(g, x).stop == 0);
  // c costs 3.5, a and b cost 6.5 once the on-route leg is added.
  int j = fds::deviation_vertex(g, x, 0);
  CHECK(n.name(g.vertex_at_pos(g.window_pos(0, j))) == "c");
  auto plan = fds::plan_at(g, x, {10, 100});
  CHECK(plan.deviation_out == Length(7, 2));
  CHECK(plan.return_leg == Length(1, 2));
  CHECK(plan.l_prime == 3);
}

TEST_CASE("l prime") {
  auto n = pendant_triangle();
  RouteGeom g(n, fds::make_route(n, "U", 1, kTri));
  CHECK(fds::l_prime(g, 1, 2) == 3);
  CHECK(fds::l_prime(g, 1, 1) == 9);
  auto P = fdstest::load("siouxfalls_routes.json");
  RouteGeom u4(P.net, P.routes[3]);
  CHECK(P.net.name(u4.vertex_at_pos(0)) == "v8");
  CHECK(fds::l_prime(u4, 0, 0) == 40);
}

TEST_CASE("additional distance") {
  auto P6 = fdstest::load("pendant_cycle.json");
  RouteGeom g6(P6.net, P6.routes[0]);
  auto at = fds::plan_at(g6, P6.net.vertex_point(P6.net.index("v8")), P6.params);
  CHECK(at.feasible);
  CHECK(fds::additional_distance(g6, at) == 0);
  auto far = fds::plan_at(g6, {8, 3}, P6.params);
  CHECK_FALSE(far.feasible);
  CHECK_THROWS_AS(fds::additional_distance(g6, far), fds::Error);

  auto P7 = fdstest::load("split_edge.json");
  RouteGeom g7(P7.net, P7.routes[0]);
  auto plan = fds::plan_at(g7, {5, 2}, P7.params);
  REQUIRE(plan.feasible);
  CHECK(P7.net.name(plan.deviation_vertex) == "v5");
  CHECK(fds::additional_distance(g7, plan) == 8);
  CHECK(fds::additional_distance(g7, plan) <= 2 * P7.params.D);
}

TEST_CASE("points far from every route") {
  auto P = fdstest::load("shared_corridor.json");
  std::vector<RouteGeom> H;
  for (const auto& U : P.routes) H.emplace_back(P.net, U);
  auto c = fds::covered_routes(H, {9, 4}, P.params);
  CHECK(c.routes.empty());
  CHECK(c.flow == 0);
  auto both = fds::covered_routes(H, {4, Length(7, 2)}, P.params);
  CHECK(both.routes == std::vector<int>{0, 1});
  CHECK(both.flow == 50);
}

TEST_CASE("random plans: witnesses, extra distance, monotonicity") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    fdstest::RandomShape spec;
    spec.explicit_stops = it % 2 == 1;
    auto P = fds::materialize(fdstest::random_problem(rng, spec));
    Params wider{P.params.D + 1, P.params.R + 2};
    for (const auto& U : fds::admissible_routes(P.net, P.routes, P.params.R)) {
      RouteGeom g(P.net, U.dense ? fds::densify(P.net, U) : U);
      for (int e = 0; e < P.net.e(); ++e)
        for (int k = 0; k <= 4; ++k) {
          EdgePoint x{e, P.net.edge(e).length * k / 4};
          auto c = fds::covers(g, x, P.params);
          std::vector<fds::DeviationPlan> wit;
          bool o = fds::oracle_covers(g, x, P.params, &wit);
          if (c.covered) CHECK(o);
          if (U.dense) CHECK(c.covered == o);
          if (c.covered) CHECK(fds::covers(g, x, wider).covered);
          for (const auto& w : wit) {
            Length ad = fds::additional_distance(g, w);
            CHECK(ad <= 2 * P.params.D);
            // The detour costs exactly the extra distance over one lap.
            CHECK(ad == w.trip_length - g.length());
          }
        }
    }
  }
}
