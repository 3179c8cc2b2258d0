#include "fds/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fds/error.hpp"
#include "fds/problem_io.hpp"
#include "fds/verify.hpp"

namespace fds {

namespace {

struct Table {
  std::string name;
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render(std::ostream& os, const std::vector<Table>& tables, const std::string& format) {
  bool first = true;
  for (const Table& t : tables) {
    if (format == "records") {
      for (const auto& row : t.rows) {
        nlohmann::ordered_json rec;
        rec["table"] = t.name;
        for (std::size_t i = 0; i < t.cols.size(); ++i) rec[t.cols[i]] = row[i];
        os << rec.dump() << "\n";
      }
      continue;
    }
    if (!first) os << "\n";
    first = false;
    os << "# " << t.name << "\n";
    if (format == "csv") {
      for (std::size_t i = 0; i < t.cols.size(); ++i) os << (i ? "," : "") << csv_cell(t.cols[i]);
      os << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
      continue;
    }
    std::vector<std::size_t> w(t.cols.size());
    for (std::size_t i = 0; i < t.cols.size(); ++i) w[i] = t.cols[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += "  ";
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(w[i] - cells[i].size(), ' ');
      }
      os << s << "\n";
    };
    line(t.cols);
    std::vector<std::string> rule;
    for (std::size_t x : w) rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto& row : t.rows) line(row);
  }
}

std::string seconds_text(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(6) << s;
  return o.str();
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string t;
  for (std::size_t i = 0; i < xs.size(); ++i) t += (i ? sep : "") + xs[i];
  return t;
}

std::string sig_names(const ScanResult& s, const std::vector<int>& sig) {
  std::vector<std::string> n;
  for (int r : sig) n.push_back(s.H[r].route().id);
  return join(n, ",");
}

std::vector<Length> parse_list(const std::string& s) {
  std::vector<Length> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_length(item));
  if (out.empty()) throw Error(Errc::Schema, "empty value list");
  return out;
}

struct Options {
  std::string network, classes, D, R, format = "table", out, classes_out;
  bool timings = false;
  bool discrete = false, all_optima = false, expand = false;
  int samples = 16;
  std::vector<int> drop;
};

Problem load_problem(const Options& o) {
  if (o.network.empty()) throw Error(Errc::Schema, "--network is required");
  Problem p = materialize(parse_problem(read_file(o.network)));
  if (!o.D.empty()) p.params.D = parse_length(o.D);
  if (!o.R.empty()) p.params.R = parse_length(o.R);
  if (p.params.D < 0) throw Error(Errc::NegativeLength, "D");
  if (!(p.params.R > 0)) throw Error(Errc::Schema, "R must be positive");
  return p;
}

std::vector<Table> scan_tables(const Problem& pb, const ScanResult& s, bool timings) {
  const Network& net = pb.net;
  Table stats{"stats", {"n", "e", "h", "endpoints", "bound_4he"}, {}};
  stats.rows.push_back({std::to_string(s.stats.n), std::to_string(s.stats.e), std::to_string(s.stats.h),
                        std::to_string(s.stats.endpoints), std::to_string(4LL * s.stats.h * s.stats.e)});
  if (timings) {
    stats.cols.push_back("seconds");
    stats.rows.back().push_back(seconds_text(s.stats.seconds));
  }
  Table routes{"routes", {"route", "flow", "length", "admitted", "first_trip_warning"}, {}};
  for (int i = 0; i < static_cast<int>(pb.routes.size()); ++i) {
    const Route& U = pb.routes[i];
    auto it = std::find(s.h_source.begin(), s.h_source.end(), i);
    bool in = it != s.h_source.end();
    bool warn = in && first_trip_warning(s.H[it - s.h_source.begin()], s.params);
    routes.rows.push_back({U.id, std::to_string(U.flow), to_decimal(route_length(net, U)), in ? "yes" : "no",
                           warn ? "yes" : "no"});
  }
  Table cells{"cells", {"route", "edge", "on_route", "beta_a", "delta_a", "beta_b", "delta_b", "refueling_set"}, {}};
  for (const ScanCell& c : s.cells) {
    auto val = [](const EntryEval& q, bool beta) { return q.evaluated ? to_decimal(beta ? q.beta : q.delta) : "-"; };
    std::vector<std::string> rs;
    for (const Segment& g : c.rs) rs.push_back("[" + to_decimal(g.lo) + "," + to_decimal(g.hi) + "]");
    if (!c.on_route && rs.empty()) continue;
    cells.rows.push_back({s.H[c.route].route().id, net.edge_label(c.edge), c.on_route ? "yes" : "no",
                          val(c.a, true), val(c.a, false), val(c.b, true), val(c.b, false),
                          rs.empty() ? "-" : join(rs, " ")});
  }
  Table eps{"endpoints", {"endpoint", "edge", "offset", "vertex", "routes", "flow"}, {}};
  for (const Endpoint& w : s.endpoints)
    eps.rows.push_back({endpoint_label(w.id), net.edge_label(w.location.edge), to_decimal(w.location.offset),
                        w.vertex ? net.name(*w.vertex) : "-", sig_names(s, w.signature), std::to_string(w.flow)});
  Table cls{"classes", {"endpoints", "routes", "flow"}, {}};
  for (const CandidateClass& c : s.classes) {
    std::vector<std::string> m;
    for (int id : c.members) m.push_back(endpoint_label(id));
    cls.rows.push_back({join(m, " "), c.signature.empty() ? "-" : sig_names(s, c.signature), std::to_string(c.flow)});
  }
  return {stats, routes, cells, eps, cls};
}

// Shape of the set of points that cover every admitted route.
std::string single_site(const ScanResult& s) {
  const std::size_t h = s.H.size();
  if (h == 0) return "-";
  for (int e = 0; e < static_cast<int>(s.edge_endpoints.size()); ++e) {
    const auto& ids = s.edge_endpoints[e];
    for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
      if (!(s.offset_on(ids[k], e) < s.offset_on(ids[k + 1], e))) continue;
      if (interior_probe(s, ids[k], ids[k + 1]).routes.size() == h) return "interval";
    }
  }
  for (const Endpoint& w : s.endpoints)
    if (w.signature.size() == h) return "point";
  return "none";
}

int cmd_scan(const Options& o, std::ostream& os) {
  Problem pb = load_problem(o);
  ScanResult s = scan(pb.net, pb.routes, pb.params);
  render(os, scan_tables(pb, s, o.timings), o.format);
  if (!o.classes_out.empty()) {
    std::ofstream f(o.classes_out, std::ios::binary);
    if (!f) throw Error(Errc::Parse, "cannot write " + o.classes_out);
    f << serialize_classes(export_classes(build_instance(s)));
  }
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& os, std::ostream& err) {
  CoverInstance inst;
  std::optional<Problem> pb;
  std::optional<ScanResult> s;
  if (!o.classes.empty()) {
    if (!o.network.empty()) throw Error(Errc::Schema, "give either --network or --classes, not both");
    ClassesFile cf = parse_classes(read_file(o.classes));
    inst = make_instance(cf.routes, cf.flows, cf.rows);
    if (o.expand) err << "note: --expand needs network geometry and is ignored for a classes file\n";
  } else {
    pb = load_problem(o);
    s = scan(pb->net, pb->routes, pb->params);
    inst = o.discrete ? vertex_instance(*s) : build_instance(*s);
  }
  CoverSolution sol = o.all_optima ? enumerate_all_minima(inst) : solve(inst);

  Table head{"solution", {"p", "candidates", "routes", "optima_listed"}, {}};
  head.rows.push_back({std::to_string(sol.p), std::to_string(inst.candidates.size()), std::to_string(inst.routes.size()),
                       std::to_string(sol.optima.size())});
  Table opt{"optima", {"optimum", "candidate", "members", "routes", "flow"}, {}};
  for (std::size_t k = 0; k < sol.optima.size(); ++k)
    for (int c : sol.optima[k]) {
      const Candidate& cand = inst.candidates[c];
      opt.rows.push_back({std::to_string(k + 1), cand.label, join(cand.members, " "),
                          signature_text(inst, cand.signature), std::to_string(cand.flow)});
    }
  std::vector<Table> out{head, opt};
  if (o.expand && s && !o.discrete && !sol.optima.empty()) {
    Table ex{"alternatives", {"candidate", "kind", "location"}, {}};
    for (const Expansion& x : expand_alternatives(inst, sol.optima.front(), *s)) {
      const std::string& lab = inst.candidates[x.candidate].label;
      for (int id : x.endpoints) ex.rows.push_back({lab, "endpoint", endpoint_label(id)});
      for (const Segment& g : x.segments) {
        ex.rows.push_back({lab, "interior",
                           pb->net.edge_label(g.edge) + "(" + to_decimal(g.lo) + "," + to_decimal(g.hi) + ")"});
      }
    }
    out.push_back(ex);
  }
  render(os, out, o.format);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
  Problem pb = load_problem(o);
  ScanResult s = scan(pb.net, pb.routes, pb.params);
  VerifyOptions vo;
  vo.samples_per_edge = o.samples;
  for (int d : o.drop) vo.drop_endpoints.push_back(d - 1);
  VerifyReport rep = verify(s, vo);
  Table checks{"checks", {"check", "evaluated", "violations"}, {}};
  for (const CheckTally& c : rep.checks)
    checks.rows.push_back({c.name, std::to_string(c.evaluated), std::to_string(c.violations)});
  Table bad{"violations", {"check", "witness"}, {}};
  for (const Finding& f : rep.violations) bad.rows.push_back({f.check, f.detail});
  Table notes{"notes", {"check", "detail"}, {}};
  for (const Finding& f : rep.notes) notes.rows.push_back({f.check, f.detail});
  render(os, {checks, bad, notes}, o.format);
  return rep.ok() ? kOk : kViolation;
}

int cmd_sensitivity(const Options& o, std::ostream& os) {
  Options base = o;
  base.D.clear();
  base.R.clear();
  Problem pb = load_problem(base);
  std::vector<Length> Ds = o.D.empty() ? std::vector<Length>{pb.params.D} : parse_list(o.D);
  std::vector<Length> Rs = o.R.empty() ? std::vector<Length>{pb.params.R} : parse_list(o.R);
  struct Row {
    Length D, R;
    std::vector<int> H;
    std::optional<int> p;
  };
  std::vector<Row> rows;
  Table sweep{"sweep", {"D", "R", "h", "endpoints", "p", "single_site"}, {}};
  if (o.timings) sweep.cols.push_back("seconds");
  for (const Length& R : Rs)
    for (const Length& D : Ds) {
      if (D < 0 || !(R > 0)) throw Error(Errc::Schema, "sweep values must satisfy D >= 0 and R > 0");
      auto t0 = std::chrono::steady_clock::now();
      ScanResult s = scan(pb.net, pb.routes, Params{D, R});
      Row row{D, R, s.h_source, std::nullopt};
      try {
        row.p = solve(build_instance(s)).p;
      } catch (const Error& e) {
        if (e.code() != Errc::UncoverableRoute && e.code() != Errc::Infeasible) throw;
      }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::vector<std::string> cells{to_decimal(D), to_decimal(R), std::to_string(s.H.size()),
                                     std::to_string(s.endpoints.size()),
                                     row.p ? std::to_string(*row.p) : "infeasible", single_site(s)};
      if (o.timings) cells.push_back(seconds_text(secs));
      sweep.rows.push_back(cells);
      rows.push_back(std::move(row));
    }

  Table audit{"audit", {"kind", "detail"}, {}};
  bool violated = false;
  auto worse = [](const std::optional<int>& a, const std::optional<int>& b) {  // a strictly above b
    if (!a) return b.has_value();
    return b && *a > *b;
  };
  auto ptext = [](const std::optional<int>& p) { return p ? std::to_string(*p) : std::string("infeasible"); };
  for (const Length& R : Rs) {
    std::vector<const Row*> line;
    for (const Row& r : rows)
      if (r.R == R) line.push_back(&r);
    std::stable_sort(line.begin(), line.end(), [](const Row* a, const Row* b) { return a->D < b->D; });
    for (std::size_t i = 1; i < line.size(); ++i)
      if (worse(line[i]->p, line[i - 1]->p)) {
        violated = true;
        audit.rows.push_back({"violation", "p rises from " + ptext(line[i - 1]->p) + " to " + ptext(line[i]->p) +
                                               " as D goes " + to_decimal(line[i - 1]->D) + " -> " +
                                               to_decimal(line[i]->D) + " at R=" + to_decimal(R)});
      }
  }
  for (const Length& D : Ds) {
    std::vector<const Row*> line;
    for (const Row& r : rows)
      if (r.D == D) line.push_back(&r);
    std::stable_sort(line.begin(), line.end(), [](const Row* a, const Row* b) { return a->R < b->R; });
    for (std::size_t i = 1; i < line.size(); ++i) {
      std::string step = to_decimal(line[i - 1]->R) + " -> " + to_decimal(line[i]->R) + " at D=" + to_decimal(D);
      if (line[i]->H != line[i - 1]->H) {
        audit.rows.push_back({"h-changed", "admitted routes differ for R " + step});
      } else if (worse(line[i]->p, line[i - 1]->p)) {
        violated = true;
        audit.rows.push_back({"violation", "p rises from " + ptext(line[i - 1]->p) + " to " + ptext(line[i]->p) +
                                               " as R goes " + step});
      }
    }
  }
  if (audit.rows.empty()) audit.rows.push_back({"ok", "p is non-increasing in D and in R at fixed H"});
  render(os, {sweep, audit}, o.format);
  return violated ? kViolation : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Refueling station location on dedicated closed routes"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool classes) {
    c->add_option("-n,--network", o.network, "problem file (JSON)");
    if (classes) c->add_option("--classes", o.classes, "classes file (JSON)");
    c->add_option("--format", o.format, "table, csv or records")
        ->transform(CLI::Transformer(std::map<std::string, std::string>{{"json-like-records", "records"}}))
        ->check(CLI::IsMember({"table", "csv", "records"}));
    c->add_option("--out", o.out, "write the report here instead of stdout");
  };
  CLI::App* sc = app.add_subcommand("scan", "compute endpoints and coverage classes");
  common(sc, false);
  sc->add_option("-D", o.D, "maximum deviation distance override");
  sc->add_option("-R", o.R, "driving range override");
  sc->add_flag("--timings", o.timings, "include wall-clock time");
  sc->add_option("--classes-out", o.classes_out, "also write the coverage classes as a classes file");
  CLI::App* so = app.add_subcommand("solve", "minimum number of stations");
  common(so, true);
  so->add_option("-D", o.D, "maximum deviation distance override");
  so->add_option("-R", o.R, "driving range override");
  so->add_flag("--discrete-vertices", o.discrete, "only network vertices are candidates");
  so->add_flag("--all-optima", o.all_optima, "list every minimum cover");
  so->add_flag("--expand", o.expand, "list substitute endpoints and interior segments");
  CLI::App* ve = app.add_subcommand("verify", "grid-sample every edge and check the endpoint set");
  common(ve, false);
  ve->add_option("-D", o.D, "maximum deviation distance override");
  ve->add_option("-R", o.R, "driving range override");
  ve->add_option("--samples-per-edge", o.samples, "grid intervals per edge")->check(CLI::Range(1, 1 << 20));
  ve->add_option("--drop-endpoint", o.drop, "remove endpoint wN before checking dominance (negative control)");
  CLI::App* se = app.add_subcommand("sensitivity", "sweep D and R");
  common(se, false);
  se->add_option("-D", o.D, "comma-separated D values");
  se->add_option("-R", o.R, "comma-separated R values");
  se->add_flag("--timings", o.timings, "include wall-clock time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  std::ostringstream buf;
  int rc = kOk;
  try {
    if (sc->parsed()) rc = cmd_scan(o, buf);
    else if (so->parsed()) rc = cmd_solve(o, buf, err);
    else if (ve->parsed()) rc = cmd_verify(o, buf);
    else rc = cmd_sensitivity(o, buf);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == Errc::Infeasible || e.code() == Errc::UncoverableRoute) ? kInfeasible : kInputError;
  }
  if (o.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
    f << buf.str();
  }
  return rc;
}

}  // namespace fds
