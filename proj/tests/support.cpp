#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace fdstest {

using fds::Length;

std::string fixture(const std::string& name) { return std::string(FDS_FIXTURE_DIR) + "/" + name; }

fds::Problem load(const std::string& name) {
  return fds::materialize(fds::parse_problem(fds::read_file(fixture(name))));
}

fds::ClassesFile load_classes(const std::string& name) { return fds::parse_classes(fds::read_file(fixture(name))); }

namespace {

struct Adj {
  int to;
  Length len;
};

std::vector<std::vector<Adj>> adjacency(int n, const std::vector<std::tuple<int, int, Length>>& es) {
  std::vector<std::vector<Adj>> g(n);
  for (const auto& [u, v, l] : es) {
    g[u].push_back({v, l});
    g[v].push_back({u, l});
  }
  return g;
}

std::vector<std::optional<Length>> bellman_ford(int n, const std::vector<std::tuple<int, int, Length>>& es, int src) {
  std::vector<std::optional<Length>> d(n);
  d[src] = Length(0);
  for (int it = 0; it < n; ++it)
    for (const auto& [u, v, l] : es) {
      if (d[u] && (!d[v] || *d[u] + l < *d[v])) d[v] = *d[u] + l;
      if (d[v] && (!d[u] || *d[v] + l < *d[u])) d[u] = *d[v] + l;
    }
  return d;
}

}  // namespace

fds::ProblemFile random_problem(std::mt19937_64& rng, const RandomShape& spec) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  fds::ProblemFile f;
  const int n = uni(4, spec.max_n);
  for (int i = 0; i < n; ++i) f.vertices.push_back("v" + std::to_string(i + 1));
  std::vector<std::tuple<int, int, Length>> es;
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b) {
    if (a == b || used.count(std::minmax(a, b))) return;
    used.insert(std::minmax(a, b));
    es.emplace_back(a, b, Length(uni(2, 16), 2));
  };
  for (int i = 1; i < n; ++i) add(i, uni(0, i - 1));
  int target = std::min(spec.max_e, uni(n - 1, n - 1 + 8));
  for (int tries = 0; static_cast<int>(es.size()) < target && tries < 200; ++tries) add(uni(0, n - 1), uni(0, n - 1));
  // Shrink edges to their shortest-path length so each edge is itself shortest.
  std::vector<std::vector<std::optional<Length>>> d(n);
  for (int s = 0; s < n; ++s) d[s] = bellman_ford(n, es, s);
  for (auto& [u, v, l] : es) l = *d[u][v];
  for (const auto& [u, v, l] : es) f.edges.push_back(fds::RawEdge{f.vertices[u], f.vertices[v], l});

  auto g = adjacency(n, es);
  const int h = uni(1, spec.max_h);
  Length longest = 0;
  for (int r = 0; r < h; ++r) {
    fds::RouteSpec rs;
    rs.id = "U" + std::to_string(r + 1);
    rs.flow = uni(0, 9) == 0 ? 0 : uni(1, 40);
    int start = uni(0, n - 1), cur = start;
    Length len = 0;
    int steps = uni(1, 6);
    std::vector<int> walk{start};
    for (int s = 0; s < steps; ++s) {
      const Adj& a = g[cur][uni(0, static_cast<int>(g[cur].size()) - 1)];
      len += a.len;
      cur = a.to;
      walk.push_back(cur);
    }
    while (cur != start || walk.size() < 3) {
      if (cur == start) {
        const Adj& a = g[cur][uni(0, static_cast<int>(g[cur].size()) - 1)];
        len += a.len;
        cur = a.to;
        walk.push_back(cur);
        continue;
      }
      for (const Adj& a : g[cur])
        if (a.len + *d[a.to][start] == *d[cur][start]) {
          len += a.len;
          cur = a.to;
          break;
        }
      walk.push_back(cur);
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
      rs.traversals.emplace_back(f.vertices[walk[i]], f.vertices[walk[i + 1]]);
    if (spec.explicit_stops) {
      std::vector<fds::Stop> stops;
      for (int t = 0; t < static_cast<int>(rs.traversals.size()); ++t) {
        Length el = 0;
        for (const auto& e : f.edges)
          if ((e.u == rs.traversals[t].first && e.v == rs.traversals[t].second) ||
              (e.v == rs.traversals[t].first && e.u == rs.traversals[t].second))
            el = e.length;
        int pick = uni(0, 3);
        if (pick == 0) stops.push_back(fds::Stop{t, 0});
        if (pick == 1) stops.push_back(fds::Stop{t, el / 2});
        if (pick == 2) stops.push_back(fds::Stop{t, el});
      }
      if (stops.empty()) stops.push_back(fds::Stop{0, 0});
      rs.stops = stops;
    }
    longest = std::max(longest, len);
    f.routes.push_back(rs);
  }
  f.params.D = Length(uni(0, 12), 2);
  f.params.R = longest + Length(uni(-4, 24), 2);
  if (!(f.params.R > 0)) f.params.R = longest;
  return f;
}

Length brute_distance(const fds::ProblemFile& f, const std::string& a, const std::string& b) {
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < f.vertices.size(); ++i) id[f.vertices[i]] = static_cast<int>(i);
  std::vector<std::tuple<int, int, Length>> es;
  for (const auto& e : f.edges) es.emplace_back(id[e.u], id[e.v], e.length);
  auto g = adjacency(static_cast<int>(f.vertices.size()), es);
  std::optional<Length> best;
  std::vector<char> seen(f.vertices.size(), 0);
  int target = id[b];
  std::function<void(int, Length)> dfs = [&](int v, Length acc) {
    if (v == target) {
      if (!best || acc < *best) best = acc;
      return;
    }
    seen[v] = 1;
    for (const Adj& x : g[v])
      if (!seen[x.to]) dfs(x.to, acc + x.len);
    seen[v] = 0;
  };
  dfs(id[a], 0);
  return *best;
}

Length split_distance(const fds::ProblemFile& f, const std::string& v, int edge, const Length& offset) {
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < f.vertices.size(); ++i) id[f.vertices[i]] = static_cast<int>(i);
  const int n = static_cast<int>(f.vertices.size());
  std::vector<std::tuple<int, int, Length>> es;
  for (int i = 0; i < static_cast<int>(f.edges.size()); ++i) {
    const auto& e = f.edges[i];
    if (i == edge) {
      es.emplace_back(id[e.u], n, offset);
      es.emplace_back(n, id[e.v], e.length - offset);
    } else {
      es.emplace_back(id[e.u], id[e.v], e.length);
    }
  }
  return *bellman_ford(n + 1, es, id[v])[n];
}

Brute brute_cover(const fds::CoverInstance& inst) {
  const int c = static_cast<int>(inst.candidates.size());
  const std::size_t h = inst.routes.size();
  Brute b;
  for (unsigned long mask = 0; mask < (1UL << c); ++mask) {
    std::set<int> got;
    std::vector<int> pick;
    for (int i = 0; i < c; ++i)
      if (mask >> i & 1UL) {
        pick.push_back(i);
        for (int r : inst.candidates[i].signature) got.insert(r);
      }
    if (got.size() != h) continue;
    int sz = static_cast<int>(pick.size());
    if (b.p < 0 || sz < b.p) {
      b.p = sz;
      b.optima.clear();
    }
    if (sz == b.p) b.optima.push_back(pick);
  }
  std::sort(b.optima.begin(), b.optima.end());
  return b;
}

Length min_edge(const fds::Network& net) {
  Length m = net.edge(0).length;
  for (const auto& e : net.edges()) m = std::min(m, e.length);
  return m;
}

}  // namespace fdstest
