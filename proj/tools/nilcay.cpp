// Copyright 2026 The nilcay Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilcay/autlab.hpp"
#include "nilcay/cayley.hpp"
#include "nilcay/constructions.hpp"
#include "nilcay/errors.hpp"
#include "nilcay/order.hpp"
#include "nilcay/structure.hpp"
#include "nilcay/verify.hpp"

using namespace nilcay;

namespace {

struct RunConfig {
  std::string group = "heisenberg";
  std::string genset = "std";
  int radius = 4;
  int stability = 2;
  long long kmax = 64;
  double tol = 0.5;
  std::size_t cap = kDefaultAutCap;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool timings = false;
  std::string mode;
  std::string suite = "all";
  std::vector<std::string> elements;
  long long n = 2;
};

struct UsageError : Error {
  using Error::Error;
};

PcPresentation load_group(const std::string& source) {
  std::ifstream in(source);
  if (!in) return builtin(source);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

GroupElement parse_element(const PcPresentation& p, const std::string& text) {
  if (text == "e" || text == "1") return p.identity();
  const bool vector_form = text.find_first_not_of("0123456789-, ") == std::string::npos;
  GroupElement x = vector_form ? GroupElement::parse(text) : evaluate(p, parse_word(p, text));
  if (x.size() != p.num_generators())
    throw InvalidArgument("element '" + text + "' has the wrong number of coordinates");
  if (!p.is_normal_form(x)) throw InvalidArgument("element '" + text + "' is not in normal form");
  return x;
}

GroupElement element_arg(const PcPresentation& p, const RunConfig& c, std::size_t i) {
  if (i >= c.elements.size())
    throw UsageError("missing element argument " + std::to_string(i + 1) + " (use --element)");
  return parse_element(p, c.elements[i]);
}

std::vector<GroupElement> free_part(const PcPresentation& p, const GenSet& s,
                                    const SubgroupWitness& n) {
  std::vector<GroupElement> out;
  for (const GroupElement& x : s.elements())
    if (!n.contains(x)) out.push_back(x);
  return out;
}

GenSet make_genset(const PcPresentation& p, const std::string& sel) {
  if (sel == "std") return standard_genset(p);
  if (sel == "std+torsion") {
    std::vector<GroupElement> out = standard_genset(p).elements();
    for (const GroupElement& x : *torsion_subgroup(p).elements)
      if (!x.is_identity()) out.push_back(x);
    return GenSet::make(p, std::move(out));
  }
  if (sel == "fsf") {
    const SubgroupWitness n = torsion_subgroup(p);
    const GenSet s = GenSet::make(p, free_part(p, standard_genset(p), n));
    return fsf_generating_set(p, *n.elements, s).genset;
  }
  if (sel == "lift") {
    const PcPresentation q = quotient_by_torsion(p);
    return lift_generating_set(p, standard_genset(q).elements());
  }
  if (sel.rfind("words:", 0) == 0) {
    std::vector<GroupElement> out;
    std::stringstream ss(sel.substr(6));
    std::string w;
    while (std::getline(ss, w, ',')) {
      const GroupElement x = evaluate(p, parse_word(p, w));
      out.push_back(x);
      out.push_back(inverse(p, x));
    }
    return GenSet::make(p, std::move(out));
  }
  throw UsageError("unknown genset selector '" + sel + "'");
}

std::size_t vertex_cap() {
  if (const char* v = std::getenv("NILCAY_BUDGET_VERTICES")) {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      throw UsageError("NILCAY_BUDGET_VERTICES must be a positive integer");
    }
  }
  return kDefaultVertexCap;
}

Ball ball_for(const PcPresentation& p, const GenSet& s, int r, const RunConfig& c) {
  return generate_ball(p, s, r, BallOptions{vertex_cap(), c.threads});
}

class Driver {
 public:
  Driver(const RunConfig& c, PcPresentation p, std::chrono::steady_clock::time_point t0)
      : c_(c), t0_(t0), p_(std::move(p)) {}

  int run(const std::string& cmd) {
    if (cmd == "verify") return verify();
    if (c_.radius < 0) throw UsageError("--radius must be non-negative");
    if (cmd == "ball") return ball();
    s_ = make_genset(p_, c_.genset);
    if (cmd == "distance") return distance_cmd();
    if (cmd == "geodesics") return geodesics();
    if (cmd == "distortion") return distortion();
    if (cmd == "biorder") return biorder();
    if (cmd == "structure") return structure();
    if (cmd == "construct") return construct();
    if (cmd == "autos") return autos();
    if (cmd == "normality") return emit(normality_verdict(p_, s_, c_.radius, c_.stability, c_.cap));
    if (cmd == "induced") return induced();
    throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  std::optional<double> elapsed() const {
    if (!c_.timings) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

  void write(const std::string& text) const {
    if (c_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(c_.out);
    if (!f) throw UsageError("cannot write '" + c_.out + "'");
    f << text;
  }

  int emit(const Report& r) const {
    write(r.to_json(p_.hash(), c_.seed, elapsed()).dump(2) + "\n");
    return r.ok ? 0 : 1;
  }

  json base() const {
    json j{{"tool_version", kToolVersion}, {"presentation_hash", p_.hash()}, {"seed", c_.seed}};
    j["group"] = p_.name();
    j["genset"] = s_.size() ? s_.to_string(p_) : standard_genset(p_).to_string(p_);
    if (const auto ms = elapsed()) j["runtime_ms"] = *ms;
    return j;
  }

  int emit(json j) const {
    write(j.dump(2) + "\n");
    return 0;
  }

  int ball() {
    s_ = make_genset(p_, c_.genset);
    const Ball b = ball_for(p_, s_, c_.radius, c_);
    if (c_.format == "tsv") {
      std::ostringstream os;
      if (c_.mode == "distances")
        export_distances(b, os);
      else
        export_graph(b, os);
      write(os.str());
      return 0;
    }
    std::vector<std::size_t> spheres(c_.radius + 1, 0);
    for (std::size_t v = 0; v < b.size(); ++v) ++spheres[b.dist(v)];
    json j = base();
    j["radius"] = c_.radius;
    j["vertices"] = b.size();
    j["edges"] = b.num_edges();
    j["sphere_sizes"] = spheres;
    return emit(j);
  }

  int distance_cmd() {
    const GroupElement v = element_arg(p_, c_, 0);
    const GroupElement u = c_.elements.size() > 1 ? element_arg(p_, c_, 1) : p_.identity();
    const Ball b = ball_for(p_, s_, c_.radius, c_);
    const auto d = distance(b, u, v);
    json j = base();
    j["from"] = to_json(u);
    j["to"] = to_json(v);
    j["radius"] = c_.radius;
    j["distance"] = d ? json(*d) : json(nullptr);
    j["certified"] = d.has_value();
    return emit(j);
  }

  int geodesics() {
    const GroupElement v = element_arg(p_, c_, 0);
    const GroupElement u = c_.elements.size() > 1 ? element_arg(p_, c_, 1) : p_.identity();
    const Ball b = ball_for(p_, s_, c_.radius, c_);
    json j = base();
    j["from"] = to_json(u);
    j["to"] = to_json(v);
    if (c_.mode == "count") {
      j["count"] = count_geodesics(b, u, v).str();
      return emit(j);
    }
    if (c_.mode != "enumerate") throw UsageError("geodesics mode must be enumerate or count");
    const GeodesicEnumeration e = enumerate_geodesics(b, u, v, c_.cap);
    json paths = json::array();
    for (const GeodesicPath& g : e.paths) {
      json labels = json::array();
      for (const GroupElement& x : g.labels) labels.push_back(to_json(x));
      paths.push_back(labels);
    }
    j["paths"] = paths;
    j["truncated"] = e.truncated;
    return emit(j);
  }

  int distortion() {
    std::vector<GroupElement> targets;
    for (std::size_t i = 0; i < c_.elements.size(); ++i) targets.push_back(element_arg(p_, c_, i));
    if (targets.empty())
      for (std::size_t i = 0; i < p_.num_generators(); ++i) targets.push_back(p_.generator(i));
    if (targets.size() == 1)
      return emit(distortion_report(p_, s_, targets[0],
                                    classify_distorted(p_, s_, targets[0], c_.kmax, c_.tol),
                                    c_.kmax, c_.tol));
    json reports = json::array();
    bool ok = true;
    for (const GroupElement& g : targets) {
      const Report r = distortion_report(p_, s_, g, classify_distorted(p_, s_, g, c_.kmax, c_.tol),
                                         c_.kmax, c_.tol);
      ok = ok && r.ok;
      reports.push_back(r.to_json(p_.hash(), c_.seed, elapsed()));
    }
    write(reports.dump(2) + "\n");
    return ok ? 0 : 1;
  }

  int biorder() {
    const BiOrder order(p_);
    if (c_.mode == "compare") {
      const GroupElement x = element_arg(p_, c_, 0), y = element_arg(p_, c_, 1);
      json j = base();
      j["x"] = to_json(x);
      j["y"] = to_json(y);
      j["compare"] = to_string(order.compare(x, y));
      return emit(j);
    }
    const GroupElement top = max_generator(order, s_);
    if (c_.mode == "max") {
      json j = base();
      j["max_generator"] = to_json(top);
      return emit(j);
    }
    if (c_.mode != "convexity") throw UsageError("biorder mode must be compare, max or convexity");
    const int k = static_cast<int>(c_.kmax);
    const GroupElement s = c_.elements.empty() ? top : element_arg(p_, c_, 0);
    return emit(convexity_check(ball_for(p_, s_, k, c_), s, k));
  }

  int structure() {
    json j = base();
    if (c_.mode == "torsion") {
      const SubgroupWitness n = torsion_subgroup(p_);
      json elems = json::array();
      for (const GroupElement& x : *n.elements) elems.push_back(to_json(x));
      j["torsion"] = elems;
      j["normality"] = n.normality;
      return emit(j);
    }
    if (c_.mode == "isolator") {
      const GroupElement g = element_arg(p_, c_, 0);
      j["element"] = to_json(g);
      j["in_derived_isolator"] = in_derived_isolator(p_, g);
      return emit(j);
    }
    if (c_.mode == "zdagger") {
      json elems = json::array();
      for (const GroupElement& x : z_dagger(ball_for(p_, s_, c_.radius, c_)))
        elems.push_back(to_json(x));
      j["radius"] = c_.radius;
      j["z_dagger"] = elems;
      return emit(j);
    }
    if (c_.mode == "conjugator") {
      const GroupElement a = element_arg(p_, c_, 0), b = element_arg(p_, c_, 1);
      const ConjugatorSearch cs =
          find_conjugator(ball_for(p_, s_, c_.radius, c_), a, b, static_cast<int>(c_.kmax));
      j["conjugator"] = cs.conjugator ? to_json(*cs.conjugator) : json(nullptr);
      json ds = json::array();
      for (const auto& d : cs.distances) ds.push_back(d ? json(*d) : json(nullptr));
      j["distances"] = ds;
      j["distances_constant"] = cs.distances_constant;
      return emit(j);
    }
    if (c_.mode == "rank") return emit(rank_report(p_, torsion_subgroup(p_)));
    throw UsageError("structure mode must be torsion, isolator, zdagger, conjugator or rank");
  }

  int construct() {
    if (c_.mode == "wreath") {
      if (c_.n < 1) throw UsageError("--n must be positive");
      const LabeledGraph w =
          wreath_product(ball_graph(ball_for(p_, s_, c_.radius, c_)), edgeless_graph(c_.n));
      std::ostringstream os;
      for (const auto& [u, v] : w.edges) os << w.vertices[u] << '\t' << w.vertices[v] << '\n';
      write(os.str());
      return 0;
    }
    if (c_.mode == "fsf" || c_.mode == "lift") {
      json j = base();
      j["genset"] = make_genset(p_, c_.mode).to_string(p_);
      return emit(j);
    }
    if (c_.mode == "klein") {
      const SuiteResult r = run_suite("klein", p_, VerifyOptions{c_.seed, c_.threads}).front();
      write(r.to_json().dump(2) + "\n");
      return r.ok() ? 0 : 1;
    }
    throw UsageError("construct mode must be wreath, fsf, lift or klein");
  }

  int autos() {
    const Ball b = ball_for(p_, s_, c_.radius, c_);
    json j = base();
    j["radius"] = c_.radius;
    j["stability"] = c_.stability;
    if (c_.mode == "orbit") {
      const GroupElement g = element_arg(p_, c_, 0);
      json orbit = json::array();
      for (const GroupElement& x : aut_e_orbit(b, g, c_.stability, c_.cap))
        orbit.push_back(to_json(x));
      j["element"] = to_json(g);
      j["orbit"] = orbit;
      return emit(j);
    }
    if (c_.mode != "enumerate") throw UsageError("autos mode must be enumerate or orbit");
    const LocalAutEnumeration e = enumerate_local_auts(b, c_.stability, c_.cap);
    json maps = json::array();
    for (const LocalAutomorphism& a : e.maps) {
      json m = json::array();
      for (std::size_t v = 0; v < a.window.image.size(); ++v)
        m.push_back(json::array(
            {to_json(e.window_ball.vertex(v)), to_json(e.window_ball.vertex(a.window.image[v]))}));
      maps.push_back(m);
    }
    j["count"] = e.maps.size();
    j["truncated"] = e.truncated;
    j["maps"] = maps;
    return emit(j);
  }

  int induced() {
    const Ball b = ball_for(p_, s_, c_.radius, c_);
    const std::vector<GroupElement> n = *torsion_subgroup(p_).elements;
    VertexMap m = identity_map(b);
    json warnings = json::array();
    if (!c_.elements.empty()) {
      const TwinSwap sw = twin_swap_map(b, element_arg(p_, c_, 0), element_arg(p_, c_, 1));
      m = sw.map;
      for (const std::string& w : sw.warnings) warnings.push_back(w);
    }
    Report r = induced_quotient_check(b, b, m, n, n);
    if (!warnings.empty()) r.details["warnings"] = warnings;
    return emit(r);
  }

  int verify() {
    const VerifyOptions o{c_.seed, c_.threads};
    json out = json::array();
    bool ok = true;
    for (const SuiteResult& r : run_suite(c_.suite, p_, o)) {
      ok = ok && r.ok();
      out.push_back(r.to_json());
    }
    json j{{"tool_version", kToolVersion}, {"seed", c_.seed}, {"ok", ok}, {"suites", out}};
    if (const auto ms = elapsed()) j["runtime_ms"] = *ms;
    write(j.dump(2) + "\n");
    return ok ? 0 : 1;
  }

  const RunConfig& c_;
  std::chrono::steady_clock::time_point t0_;
  PcPresentation p_;
  GenSet s_;
};

int diagnose(const std::string& kind, const std::string& what) {
  std::cerr << json{{"error", kind}, {"message", what}}.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs of finitely generated nilpotent groups"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "built-in id or presentation file");
    sub->add_option("--genset", c.genset, "std, std+torsion, fsf, lift or words:w1,w2,...");
    sub->add_option("--radius", c.radius, "ball radius");
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--seed", c.seed, "seed for sampled checks");
    sub->add_option("--threads", c.threads, "worker cap")->check(CLI::PositiveNumber);
    sub->add_flag("--timings", c.timings, "record wall-clock time in reports");
    sub->add_option("--element,-e", c.elements, "element as exponents '1,0,-2' or a word");
  };
  auto mode = [&](CLI::App* sub, std::vector<std::string> modes) {
    sub->add_option("mode", c.mode)->required()->check(CLI::IsMember(modes));
  };

  CLI::App* ball = app.add_subcommand("ball", "generate a ball; --format tsv exports it");
  common(ball);
  ball->add_option("mode", c.mode, "graph or distances (tsv export)")
      ->check(CLI::IsMember({"graph", "distances"}));
  common(app.add_subcommand("distance", "certified distance; -e to [-e from]"));
  CLI::App* geo = app.add_subcommand("geodesics", "enumerate or count geodesics");
  common(geo);
  mode(geo, {"enumerate", "count"});
  geo->add_option("--cap", c.cap, "path cap");
  CLI::App* dis = app.add_subcommand("distortion", "distortion profile and verdict");
  common(dis);
  dis->add_option("--kmax", c.kmax)->check(CLI::PositiveNumber);
  dis->add_option("--tol", c.tol)->check(CLI::PositiveNumber);
  CLI::App* bio = app.add_subcommand("biorder", "bi-order queries");
  common(bio);
  mode(bio, {"compare", "max", "convexity"});
  bio->add_option("--kmax", c.kmax)->check(CLI::PositiveNumber);
  CLI::App* st = app.add_subcommand("structure", "torsion, isolator, Z-dagger, conjugator, rank");
  common(st);
  mode(st, {"torsion", "isolator", "zdagger", "conjugator", "rank"});
  st->add_option("--kmax", c.kmax)->check(CLI::PositiveNumber);
  CLI::App* con = app.add_subcommand("construct", "wreath, fsf, lift or klein constructions");
  common(con);
  mode(con, {"wreath", "fsf", "lift", "klein"});
  con->add_option("--n", c.n, "size of the edgeless factor");
  CLI::App* aut = app.add_subcommand("autos", "stable local automorphisms of B(r)");
  common(aut);
  mode(aut, {"enumerate", "orbit"});
  aut->add_option("--stability", c.stability)->check(CLI::NonNegativeNumber);
  aut->add_option("--cap", c.cap);
  CLI::App* nor = app.add_subcommand("normality", "normality verdict at (r, t)");
  common(nor);
  nor->add_option("--stability", c.stability)->check(CLI::PositiveNumber);
  nor->add_option("--cap", c.cap);
  common(app.add_subcommand("induced", "induced map on G/N; two -e swap twins"));
  CLI::App* ver = app.add_subcommand("verify", "run acceptance suites");
  common(ver);
  ver->add_option("--suite", c.suite)->check(CLI::IsMember([] {
    std::vector<std::string> s = suite_names();
    s.push_back("all");
    return s;
  }()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return diagnose("usage", e.what());
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Driver d(c, load_group(c.group), t0);
    return d.run(app.get_subcommands().front()->get_name());
  } catch (const ParseError& e) {
    return diagnose("parse", e.what());
  } catch (const BudgetExceeded& e) {
    return diagnose("budget", e.what());
  } catch (const PreconditionError& e) {
    return diagnose("precondition", e.what());
  } catch (const InvalidPresentation& e) {
    return diagnose("invalid-presentation", e.what());
  } catch (const Error& e) {
    return diagnose("input", e.what());
  } catch (const std::exception& e) {
    return diagnose("internal", e.what());
  }
}
