#include "fds/setcover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "fds/error.hpp"

namespace fds {

using Bits = boost::dynamic_bitset<>;

namespace {

Bits sig_bits(const CoverInstance& inst, const std::vector<int>& sig) {
  Bits b(inst.routes.size());
  for (int r : sig) b.set(r);
  return b;
}

class Search {
 public:
  explicit Search(const CoverInstance& inst) : inst_(inst), h_(inst.routes.size()) {
    const int c = static_cast<int>(inst.candidates.size());
    for (int i = 0; i < c; ++i) sig_.push_back(sig_bits(inst, inst.candidates[i].signature));
    order_.resize(c);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return inst.candidates[a].flow > inst.candidates[b].flow;
    });
    by_route_.assign(h_, Bits(c));
    for (int i = 0; i < c; ++i)
      for (int r : inst.candidates[i].signature) by_route_[r].set(i);
  }

  CoverSolution run() {
    best_size_ = static_cast<int>(h_) + 1;
    std::vector<int> chosen;
    recurse(Bits(h_), chosen);
    CoverSolution sol;
    sol.p = static_cast<int>(best_.size());
    std::sort(best_.begin(), best_.end());
    sol.optima.push_back(best_);
    return sol;
  }

 private:
  int lower_bound(const Bits& covered) const {
    Bits used(inst_.candidates.size());
    int lb = 0;
    for (std::size_t r = 0; r < h_; ++r) {
      if (covered.test(r)) continue;
      if (by_route_[r].intersects(used)) continue;
      used |= by_route_[r];
      ++lb;
    }
    return lb;
  }

  void recurse(const Bits& covered, std::vector<int>& chosen) {
    if (covered.count() == h_) {
      if (static_cast<int>(chosen.size()) < best_size_) {
        best_size_ = static_cast<int>(chosen.size());
        best_ = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + lower_bound(covered) >= best_size_) return;
    std::size_t pick = h_;
    std::size_t fewest = 0;
    for (std::size_t r = 0; r < h_; ++r) {
      if (covered.test(r)) continue;
      std::size_t cnt = by_route_[r].count();
      if (pick == h_ || cnt < fewest) {
        pick = r;
        fewest = cnt;
      }
    }
    for (int i : order_) {
      if (!by_route_[pick].test(i)) continue;
      chosen.push_back(i);
      recurse(covered | sig_[i], chosen);
      chosen.pop_back();
    }
  }

  const CoverInstance& inst_;
  std::size_t h_;
  std::vector<Bits> sig_;
  std::vector<int> order_;
  std::vector<Bits> by_route_;
  int best_size_ = 0;
  std::vector<int> best_;
};

std::uint64_t choose(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

CoverInstance make_instance(const std::vector<std::string>& routes, const std::vector<long long>& flows,
                            const std::vector<ClassRow>& rows) {
  CoverInstance inst;
  inst.routes = routes;
  inst.flows = flows;
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(routes.size()); ++i)
    if (!idx.emplace(routes[i], i).second) throw Error(Errc::Schema, "route listed twice: " + routes[i]);
  std::map<std::vector<int>, int> seen;
  for (const ClassRow& row : rows) {
    std::vector<int> sig;
    for (const std::string& r : row.routes) {
      auto it = idx.find(r);
      if (it == idx.end()) throw Error(Errc::Schema, "class " + row.label + " names undeclared route " + r);
      sig.push_back(it->second);
    }
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    if (sig.empty()) continue;
    auto [it, fresh] = seen.emplace(sig, static_cast<int>(inst.candidates.size()));
    if (fresh) {
      Candidate c;
      c.label = row.label;
      c.signature = sig;
      for (int r : sig) c.flow += flows.at(r);
      inst.candidates.push_back(c);
    }
    inst.candidates[it->second].members.push_back(row.label);
  }
  return inst;
}

CoverInstance build_instance(const ScanResult& s) {
  CoverInstance inst;
  for (const RouteGeom& g : s.H) {
    inst.routes.push_back(g.route().id);
    inst.flows.push_back(g.route().flow);
  }
  for (int k = 0; k < static_cast<int>(s.classes.size()); ++k) {
    const CandidateClass& cc = s.classes[k];
    if (cc.signature.empty()) continue;
    Candidate c;
    c.label = endpoint_label(cc.representative);
    c.signature = cc.signature;
    c.flow = cc.flow;
    for (int m : cc.members) c.members.push_back(endpoint_label(m));
    c.source = k;
    inst.candidates.push_back(c);
  }
  check_feasible(inst);
  return inst;
}

CoverInstance vertex_instance(const ScanResult& s) {
  std::vector<std::string> routes;
  std::vector<long long> flows;
  for (const RouteGeom& g : s.H) {
    routes.push_back(g.route().id);
    flows.push_back(g.route().flow);
  }
  std::vector<ClassRow> rows;
  if (!s.H.empty()) {
    const Network& net = s.H.front().net();
    for (int v = 0; v < net.n(); ++v) {
      if (net.incident(v).empty()) continue;
      Coverage c = covered_routes(s.H, net.vertex_point(v), s.params);
      ClassRow row{net.name(v), {}};
      for (int r : c.routes) row.routes.push_back(routes[r]);
      rows.push_back(row);
    }
  }
  CoverInstance inst = make_instance(routes, flows, rows);
  check_feasible(inst);
  return inst;
}

void check_feasible(const CoverInstance& inst) {
  std::vector<char> hit(inst.routes.size(), 0);
  for (const Candidate& c : inst.candidates)
    for (int r : c.signature) hit[r] = 1;
  for (std::size_t r = 0; r < hit.size(); ++r)
    if (!hit[r]) throw Error(Errc::UncoverableRoute, inst.routes[r]);
}

bool is_cover(const CoverInstance& inst, const std::vector<int>& pick) {
  Bits b(inst.routes.size());
  for (int i : pick) b |= sig_bits(inst, inst.candidates.at(i).signature);
  return b.count() == inst.routes.size();
}

CoverSolution solve(const CoverInstance& inst) {
  try {
    check_feasible(inst);
  } catch (const Error& e) {
    throw Error(Errc::Infeasible, std::string("no candidate covers route ") + e.what());
  }
  return Search(inst).run();
}

CoverSolution enumerate_all_minima(const CoverInstance& inst, std::uint64_t limit) {
  CoverSolution first = solve(inst);
  const int c = static_cast<int>(inst.candidates.size());
  const int p = first.p;
  if (choose(c, p, limit) > limit)
    throw Error(Errc::TooLarge, std::to_string(c) + " choose " + std::to_string(p) + " exceeds the enumeration limit");
  CoverSolution all;
  all.p = p;
  std::vector<Bits> sig;
  for (const Candidate& cand : inst.candidates) sig.push_back(sig_bits(inst, cand.signature));
  std::vector<int> pick(p);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    Bits b(inst.routes.size());
    for (int i : pick) b |= sig[i];
    if (b.count() == inst.routes.size()) all.optima.push_back(pick);
    int i = p - 1;
    while (i >= 0 && pick[i] == c - p + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return all;
}

std::vector<Expansion> expand_alternatives(const CoverInstance& inst, const std::vector<int>& optimum,
                                           const ScanResult& s) {
  const std::size_t h = inst.routes.size();
  std::map<std::pair<int, int>, Coverage> probes;
  auto probe = [&](int a, int b) -> const Coverage& {
    auto key = std::minmax(a, b);
    auto it = probes.find(key);
    if (it == probes.end()) it = probes.emplace(key, interior_probe(s, a, b)).first;
    return it->second;
  };
  std::vector<Expansion> out;
  for (int sel : optimum) {
    const Candidate& cand = inst.candidates.at(sel);
    Expansion ex;
    ex.candidate = sel;
    if (cand.source >= 0) ex.endpoints = s.classes.at(cand.source).members;
    Bits others(h);
    for (int o : optimum)
      if (o != sel) others |= sig_bits(inst, inst.candidates[o].signature);
    for (int e = 0; e < static_cast<int>(s.edge_endpoints.size()); ++e) {
      const auto& ids = s.edge_endpoints[e];
      for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
        Length lo = s.offset_on(ids[k], e), hi = s.offset_on(ids[k + 1], e);
        if (!(lo < hi)) continue;
        Bits b = others | sig_bits(inst, probe(ids[k], ids[k + 1]).routes);
        if (b.count() == h) ex.segments.push_back(Segment{e, lo, hi});
      }
    }
    out.push_back(std::move(ex));
  }
  return out;
}

std::string signature_text(const CoverInstance& inst, const std::vector<int>& sig) {
  std::string t;
  for (int r : sig) {
    if (!t.empty()) t += ",";
    t += inst.routes.at(r);
  }
  return t;
}

}  // namespace fds
