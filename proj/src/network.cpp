#include "fds/network.hpp"

#include <algorithm>
#include <map>

#include "fds/error.hpp"

namespace fds {

Network Network::build(std::vector<std::string> vertices, const std::vector<RawEdge>& raw) {
  Network g;
  g.names_ = std::move(vertices);
  for (int i = 0; i < g.n(); ++i) {
    if (!g.ids_.emplace(g.names_[i], i).second)
      throw Error(Errc::Schema, "vertex listed twice: " + g.names_[i]);
  }
  const int n = g.n();
  g.incident_.assign(n, {});
  std::map<std::pair<int, int>, int> seen;
  for (const RawEdge& r : raw) {
    int a = g.index(r.u), b = g.index(r.v);
    if (a == b) throw Error(Errc::SelfLoop, "edge " + r.u + "-" + r.v);
    if (r.length < 0) throw Error(Errc::NegativeLength, "edge " + r.u + "-" + r.v);
    auto key = std::minmax(a, b);
    if (!seen.emplace(key, g.e()).second) throw Error(Errc::DuplicateEdge, "edge " + r.u + "-" + r.v);
    g.incident_[a].push_back(g.e());
    g.incident_[b].push_back(g.e());
    g.edges_.push_back(Edge{a, b, r.length});
  }

  // Floyd-Warshall over exact lengths; nullopt marks "no path yet".
  std::vector<std::optional<Length>> d(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) d[i * n + i] = Length(0);
  for (const Edge& ed : g.edges_) {
    d[ed.u * n + ed.v] = ed.length;
    d[ed.v * n + ed.u] = ed.length;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!d[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!d[k * n + j]) continue;
        Length via = *d[i * n + k] + *d[k * n + j];
        auto& cur = d[i * n + j];
        if (!cur || via < *cur) cur = via;
      }
    }
  g.dist_.resize(d.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!d[i * n + j])
        throw Error(Errc::DisconnectedGraph, g.names_[i] + " cannot reach " + g.names_[j]);
      g.dist_[i * n + j] = *d[i * n + j];
    }
  for (const Edge& ed : g.edges_) {
    if (g.dist(ed.u, ed.v) < ed.length)
      throw Error(Errc::EdgeNotShortest, "edge " + g.names_[ed.u] + "-" + g.names_[ed.v] + " has length " +
                                             to_decimal(ed.length) + " but a path of length " +
                                             to_decimal(g.dist(ed.u, ed.v)) + " exists");
  }
  return g;
}

int Network::index(std::string_view id) const {
  auto v = find(id);
  if (!v) throw Error(Errc::UnknownVertex, std::string(id));
  return *v;
}

std::optional<int> Network::find(std::string_view id) const {
  auto it = ids_.find(std::string(id));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Network::edge_between(int a, int b) const {
  for (int ei : incident_.at(a)) {
    const Edge& ed = edges_[ei];
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return ei;
  }
  return std::nullopt;
}

std::string Network::edge_label(int i) const {
  const Edge& ed = edges_.at(i);
  return names_[ed.u] + "-" + names_[ed.v];
}

Length Network::vertex_distance(std::string_view a, std::string_view b) const {
  return dist(index(a), index(b));
}

void Network::check_point(const EdgePoint& x) const {
  if (x.edge < 0 || x.edge >= e()) throw Error(Errc::InvalidOffset, "no such edge");
  if (x.offset < 0 || x.offset > edges_[x.edge].length)
    throw Error(Errc::InvalidOffset, "offset " + to_decimal(x.offset) + " outside edge " + edge_label(x.edge));
}

Length Network::point_distance(int v, const EdgePoint& x) const {
  if (v < 0 || v >= n()) throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(v));
  check_point(x);
  const Edge& ed = edges_[x.edge];
  Length via_u = dist(v, ed.u) + x.offset;
  Length via_v = dist(v, ed.v) + (ed.length - x.offset);
  return via_u < via_v ? via_u : via_v;
}

std::optional<int> Network::vertex_at(const EdgePoint& x) const {
  const Edge& ed = edges_.at(x.edge);
  if (x.offset == 0) return ed.u;
  if (x.offset == ed.length) return ed.v;
  return std::nullopt;
}

EdgePoint Network::vertex_point(int v) const {
  const auto& inc = incident_.at(v);
  if (inc.empty()) throw Error(Errc::UnknownVertex, "isolated vertex " + names_[v]);
  int ei = *std::min_element(inc.begin(), inc.end());
  const Edge& ed = edges_[ei];
  return EdgePoint{ei, ed.u == v ? Length(0) : ed.length};
}

EdgePoint Network::canonical(const EdgePoint& x) const {
  if (auto v = vertex_at(x)) return vertex_point(*v);
  return x;
}

bool Network::same_point(const EdgePoint& a, const EdgePoint& b) const {
  EdgePoint ca = canonical(a), cb = canonical(b);
  return ca.edge == cb.edge && ca.offset == cb.offset;
}

}  // namespace fds
