#include "fds/verify.hpp"

#include <algorithm>
#include <set>

#include "fds/error.hpp"

namespace fds {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string routes_text(const ScanResult& s, const std::vector<int>& rs) {
  std::string t = "{";
  for (std::size_t i = 0; i < rs.size(); ++i) t += (i ? "," : "") + s.H[rs[i]].route().id;
  return t + "}";
}

}  // namespace

std::string point_text(const Network& net, const EdgePoint& x) {
  if (auto v = net.vertex_at(x)) return net.name(*v);
  try {
    return net.edge_label(x.edge) + "@" + to_decimal(x.offset);
  } catch (const Error&) {
    return net.edge_label(x.edge) + "@" + x.offset.str();
  }
}

std::vector<Length> sample_offsets(const Length& len, const VerifyOptions& o) {
  std::vector<Length> xs;
  if (o.step) {
    if (!(*o.step > 0)) throw Error(Errc::Schema, "sample step must be positive");
    for (Length t = 0; t < len; t += *o.step) xs.push_back(t);
    xs.push_back(len);
  } else {
    int k = o.samples_per_edge;
    if (k < 1) throw Error(Errc::Schema, "samples per edge must be at least 1");
    for (int i = 0; i <= k; ++i) xs.push_back(len * i / k);
  }
  return xs;
}

VerifyReport verify(const ScanResult& s, const VerifyOptions& o) {
  VerifyReport rep;
  CheckTally dom{"dominance"}, seg{"segment-point"}, lem1{"additional-distance"}, lem2{"interior-constancy"},
      orc{"oracle"}, bound{"endpoint-bound"};
  auto fail = [&](CheckTally& c, std::string detail) {
    ++c.violations;
    rep.violations.push_back(Finding{c.name, std::move(detail)});
  };
  if (s.H.empty()) {
    rep.checks = {dom, seg, lem1, lem2, orc, bound};
    return rep;
  }
  const Network& net = s.H.front().net();
  const Params& p = s.params;
  const int h = static_cast<int>(s.H.size());

  ++bound.evaluated;
  if (s.endpoints.size() > static_cast<std::size_t>(4) * h * net.e())
    fail(bound, std::to_string(s.endpoints.size()) + " endpoints > 4he");

  std::set<int> dropped(o.drop_endpoints.begin(), o.drop_endpoints.end());
  std::vector<const Endpoint*> pool;
  for (const Endpoint& w : s.endpoints)
    if (!dropped.count(w.id)) pool.push_back(&w);

  const Length two_d = p.D * 2;
  for (int e = 0; e < net.e(); ++e) {
    for (const Length& off : sample_offsets(net.edge(e).length, o)) {
      EdgePoint x{e, off};
      std::vector<int> tx;
      for (int r = 0; r < h; ++r) {
        const RouteGeom& g = s.H[r];
        CoverResult cr = covers(g, x, p);
        std::vector<DeviationPlan> wit;
        bool ex = oracle_covers(g, x, p, &wit);
        if (cr.covered) tx.push_back(r);

        ++orc.evaluated;
        if (cr.covered && !ex) {
          fail(orc, g.route().id + " at " + point_text(net, x) + ": covered by the pipeline but no witness exists");
        } else if (!cr.covered && ex) {
          std::string d = g.route().id + " at " + point_text(net, x) + ": only the existential reading covers";
          if (g.route().dense)
            fail(orc, d);
          else
            rep.notes.push_back(Finding{orc.name, d});
        }

        if (cr.plan && cr.plan->feasible) wit.push_back(*cr.plan);
        for (const DeviationPlan& pl : wit) {
          ++lem1.evaluated;
          Length ad = additional_distance(g, pl);
          if (ad > two_d)
            fail(lem1, g.route().id + " at " + point_text(net, x) + ": AD " + to_decimal(ad) + " > 2D");
        }

        ++seg.evaluated;
        const ScanCell* c = s.cell(r, e);
        bool in_rs = c && in_segments(c->rs, off);
        if (auto v = net.vertex_at(x)) {
          for (int ei : net.incident(*v)) {
            const ScanCell* ci = s.cell(r, ei);
            Length vo = net.edge(ei).u == *v ? Length(0) : net.edge(ei).length;
            if (ci && in_segments(ci->rs, vo)) in_rs = true;
          }
        }
        if (in_rs != cr.covered) {
          std::string d = g.route().id + " at " + point_text(net, x) + (in_rs ? ": in RS but not covered"
                                                                               : ": covered but outside RS");
          if (g.route().dense)
            fail(seg, d);
          else
            rep.notes.push_back(Finding{seg.name, d});
        }
      }

      ++dom.evaluated;
      if (!tx.empty()) {
        bool found = false;
        for (const Endpoint* w : pool)
          if (subset(tx, w->signature)) {
            found = true;
            break;
          }
        if (!found) fail(dom, point_text(net, x) + " covers " + routes_text(s, tx) + " and no endpoint dominates it");
      }
    }

    const auto& ids = s.edge_endpoints[e];
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      Length lo = s.offset_on(ids[k], e), hi = s.offset_on(ids[k + 1], e);
      if (!(lo < hi)) continue;
      ++lem2.evaluated;
      std::vector<int> uni;
      std::set_union(s.endpoints[ids[k]].signature.begin(), s.endpoints[ids[k]].signature.end(),
                     s.endpoints[ids[k + 1]].signature.begin(), s.endpoints[ids[k + 1]].signature.end(),
                     std::back_inserter(uni));
      std::optional<std::vector<int>> first;
      for (int j = 1; j <= o.interior_samples; ++j) {
        EdgePoint x{e, lo + (hi - lo) * j / (o.interior_samples + 1)};
        auto t = covered_routes(s.H, x, p).routes;
        if (!first) first = t;
        if (t != *first) {
          fail(lem2, point_text(net, x) + " differs from other interior points between " + endpoint_label(ids[k]) +
                         " and " + endpoint_label(ids[k + 1]));
          break;
        }
        if (!subset(t, uni)) {
          fail(lem2, point_text(net, x) + " covers more than " + endpoint_label(ids[k]) + " and " +
                         endpoint_label(ids[k + 1]) + " together");
          break;
        }
      }
    }
  }
  rep.checks = {dom, seg, lem1, lem2, orc, bound};
  return rep;
}

}  // namespace fds
