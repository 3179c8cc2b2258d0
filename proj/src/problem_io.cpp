#include "fds/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fds/error.hpp"

namespace fds {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(Errc::Schema, where + ": missing '" + key + "'");
  return obj.at(key);
}

std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(Errc::Schema, where + ": expected a string");
  return v.get<std::string>();
}

Length length_of(const json& v, const std::string& where) {
  if (!v.is_string()) throw Error(Errc::Schema, where + ": lengths are decimal strings");
  return parse_length(v.get<std::string>());
}

long long count_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) throw Error(Errc::Schema, where + ": flow must be a whole number of trips");
  throw Error(Errc::Schema, where + ": expected an integer");
}

const json& array_of(const json& v, const std::string& where) {
  if (!v.is_array()) throw Error(Errc::Schema, where + ": expected an array");
  return v;
}

json parse_json(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

}  // namespace

bool ProblemFile::operator==(const ProblemFile& o) const {
  if (vertices != o.vertices || routes != o.routes || edges.size() != o.edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].u != o.edges[i].u || edges[i].v != o.edges[i].v || edges[i].length != o.edges[i].length)
      return false;
  return params.D == o.params.D && params.R == o.params.R;
}

ProblemFile parse_problem(const std::string& s) {
  json doc = parse_json(s);
  ProblemFile f;
  const json& net = field(doc, "network", "problem");
  for (const json& v : array_of(field(net, "vertices", "network"), "network.vertices"))
    f.vertices.push_back(text(v, "network.vertices"));
  int k = 0;
  for (const json& e : array_of(field(net, "edges", "network"), "network.edges")) {
    std::string where = "network.edges[" + std::to_string(k++) + "]";
    f.edges.push_back(RawEdge{text(field(e, "u", where), where), text(field(e, "v", where), where),
                              length_of(field(e, "length", where), where)});
  }
  k = 0;
  for (const json& r : array_of(field(doc, "routes", "problem"), "routes")) {
    std::string where = "routes[" + std::to_string(k++) + "]";
    RouteSpec rs;
    rs.id = text(field(r, "id", where), where);
    rs.flow = count_of(field(r, "flow", where), where + ".flow");
    for (const json& t : array_of(field(r, "traversals", where), where + ".traversals")) {
      if (!t.is_array() || t.size() != 2) throw Error(Errc::Schema, where + ": traversal is a [from, to] pair");
      rs.traversals.emplace_back(text(t[0], where), text(t[1], where));
    }
    if (r.contains("stops") && !(r["stops"].is_string() && r["stops"] == "dense")) {
      std::vector<Stop> stops;
      for (const json& st : array_of(r["stops"], where + ".stops")) {
        const json& ti = field(st, "traversal", where + ".stops");
        if (!ti.is_number_integer()) throw Error(Errc::Schema, where + ".stops: traversal is an index");
        stops.push_back(Stop{ti.get<int>(), length_of(field(st, "offset", where + ".stops"), where + ".stops")});
      }
      rs.stops = std::move(stops);
    }
    f.routes.push_back(std::move(rs));
  }
  const json& par = field(doc, "params", "problem");
  f.params.D = length_of(field(par, "D", "params"), "params.D");
  f.params.R = length_of(field(par, "R", "params"), "params.R");
  if (f.params.D < 0) throw Error(Errc::NegativeLength, "params.D");
  if (!(f.params.R > 0)) throw Error(Errc::Schema, "params.R must be positive");
  return f;
}

std::string serialize_problem(const ProblemFile& f) {
  json doc;
  json verts = json::array();
  for (const auto& v : f.vertices) verts.push_back(v);
  json edges = json::array();
  for (const auto& e : f.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", to_decimal(e.length)}});
  doc["network"] = {{"vertices", verts}, {"edges", edges}};
  json routes = json::array();
  for (const auto& r : f.routes) {
    json tr = json::array();
    for (const auto& [a, b] : r.traversals) tr.push_back(json::array({a, b}));
    json stops;
    if (!r.stops) {
      stops = "dense";
    } else {
      stops = json::array();
      for (const Stop& s : *r.stops) stops.push_back({{"traversal", s.traversal}, {"offset", to_decimal(s.offset)}});
    }
    routes.push_back({{"id", r.id}, {"flow", r.flow}, {"traversals", tr}, {"stops", stops}});
  }
  doc["routes"] = routes;
  doc["params"] = {{"D", to_decimal(f.params.D)}, {"R", to_decimal(f.params.R)}};
  return doc.dump(2) + "\n";
}

Problem materialize(const ProblemFile& f) {
  Problem p{Network::build(f.vertices, f.edges), {}, f.params};
  for (const RouteSpec& r : f.routes) {
    for (const Route& prev : p.routes)
      if (prev.id == r.id) throw Error(Errc::Schema, "route id used twice: " + r.id);
    p.routes.push_back(make_route(p.net, r.id, r.flow, r.traversals, r.stops));
  }
  return p;
}

ClassesFile parse_classes(const std::string& s) {
  json doc = parse_json(s);
  ClassesFile f;
  int k = 0;
  for (const json& r : array_of(field(doc, "routes", "classes file"), "routes")) {
    std::string where = "routes[" + std::to_string(k++) + "]";
    f.routes.push_back(text(field(r, "id", where), where));
    long long flow = count_of(field(r, "flow", where), where + ".flow");
    if (flow < 0) throw Error(Errc::Schema, where + ": negative flow");
    f.flows.push_back(flow);
  }
  k = 0;
  for (const json& c : array_of(field(doc, "classes", "classes file"), "classes")) {
    std::string where = "classes[" + std::to_string(k++) + "]";
    ClassRow row;
    row.label = text(field(c, "label", where), where);
    for (const json& r : array_of(field(c, "routes", where), where + ".routes")) row.routes.push_back(text(r, where));
    f.rows.push_back(std::move(row));
  }
  return f;
}

std::string serialize_classes(const ClassesFile& f) {
  json doc;
  json routes = json::array();
  for (std::size_t i = 0; i < f.routes.size(); ++i) routes.push_back({{"id", f.routes[i]}, {"flow", f.flows[i]}});
  json rows = json::array();
  for (const ClassRow& r : f.rows) rows.push_back({{"label", r.label}, {"routes", r.routes}});
  doc["routes"] = routes;
  doc["classes"] = rows;
  return doc.dump(2) + "\n";
}

ClassesFile export_classes(const CoverInstance& inst) {
  ClassesFile f{inst.routes, inst.flows, {}};
  // One row per member so that re-reading the file rebuilds the same classes.
  for (const Candidate& c : inst.candidates) {
    std::vector<std::string> routes;
    for (int r : c.signature) routes.push_back(inst.routes[r]);
    if (c.members.empty()) f.rows.push_back(ClassRow{c.label, routes});
    for (const auto& m : c.members) f.rows.push_back(ClassRow{m, routes});
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fds
