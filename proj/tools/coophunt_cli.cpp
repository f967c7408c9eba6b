// coophunt: command-line front end over the analysis headers.
// Exit codes: 0 success, 1 invalid config or usage, 2 numeric failure.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coophunt/bifurcation.hpp"
#include "coophunt/dynamics.hpp"
#include "coophunt/equilibria.hpp"
#include "coophunt/hopf.hpp"
#include "coophunt/variety.hpp"
#include "json.hpp"

using namespace coophunt;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int schema_version = 1;

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- CSV ----

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// every row carries schema_version as its first field
struct csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> r) { rows.push_back(std::move(r)); }
  void write(std::ostream& os) const {
    os << "schema_version";
    for (const auto& h : header) os << ',' << quote(h);
    os << "\r\n";
    for (const auto& r : rows) {
      os << schema_version;
      for (const auto& f : r) os << ',' << quote(f);
      os << "\r\n";
    }
  }
};

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json with_schema(const std::string& kind, json body) {
  json j;
  j["schema_version"] = schema_version;
  j["kind"] = kind;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

json params_json(const param_set& p) {
  return {{"alpha", p.alpha}, {"kappa", p.kappa}, {"sigma", p.sigma}, {"h", p.h}};
}

// ---- reports ----

const std::vector<std::string> param_cols{"alpha", "kappa", "sigma", "h"};

std::vector<std::string> param_fields(const param_set& p) {
  return {num(p.alpha), num(p.kappa), num(p.sigma), num(p.h)};
}

void equilibria_rows(csv& t, int point, const param_set& p) {
  for (const auto& e : find_equilibria(p)) {
    std::vector<std::string> r{std::to_string(point)};
    for (auto& f : param_fields(p)) r.push_back(f);
    for (auto f : {std::string(to_string(e.kind)), num(e.point.x), num(e.point.y), std::string(to_string(e.cls)),
                   num(e.det), num(e.trace), num(e.discriminant), std::to_string(e.multiplicity)})
      r.push_back(f);
    t.add(r);
  }
}

csv equilibria_table() {
  csv t;
  t.header = {"point"};
  t.header.insert(t.header.end(), param_cols.begin(), param_cols.end());
  for (auto h : {"kind", "x", "y", "classification", "det", "trace", "discriminant", "multiplicity"}) t.header.push_back(h);
  return t;
}

json equilibria_json(const param_set& p) {
  json a = json::array();
  for (const auto& e : find_equilibria(p))
    a.push_back({{"kind", to_string(e.kind)},
                 {"x", e.point.x},
                 {"y", e.point.y},
                 {"classification", to_string(e.cls)},
                 {"det", e.det},
                 {"trace", e.trace},
                 {"discriminant", e.discriminant},
                 {"multiplicity", e.multiplicity}});
  return a;
}

csv region_table() {
  csv t;
  t.header = {"point"};
  t.header.insert(t.header.end(), param_cols.begin(), param_cols.end());
  for (auto h : {"region", "positive_count", "kappa1", "alpha1", "alpha2"}) t.header.push_back(h);
  return t;
}

void region_rows(csv& t, int point, const param_set& p) {
  const auto r = classify_region(p);
  std::vector<std::string> row{std::to_string(point)};
  for (auto& f : param_fields(p)) row.push_back(f);
  for (auto f : {std::string(to_string(r.tag)), std::to_string(r.positive_count()), num(r.kappa1),
                 num(r.alpha1.value_or(NAN)), num(r.alpha2.value_or(NAN))})
    row.push_back(f);
  t.add(row);
}

struct bt_request {
  double xstar = 1, h = 0.5, radius = 0.1;
  int count = 41;
};

json bt_json(const bt_request& q) {
  const auto b = bt_curves<double>(q.xstar, q.h);
  return {{"xstar", q.xstar},  {"h", q.h},        {"alpha_star", b.alpha_star}, {"sigma_star", b.sigma_star},
          {"kappa", b.kappa},  {"f11", b.f11},    {"f12", b.f12},               {"f22", b.f22},
          {"f32", b.f32},      {"J0", b.J0}};
}

csv bt_table(const bt_request& q) {
  const auto b = bt_curves<double>(q.xstar, q.h);
  csv t;
  t.header = {"sigma", "alpha_SN", "alpha_H", "alpha_HL"};
  for (int i = 0; i < q.count; ++i) {
    const double s = b.sigma_star - q.radius + 2 * q.radius * i / std::max(1, q.count - 1);
    // Hopf and homoclinic branches exist on the sigma > sigma_* side only
    const bool right = s > b.sigma_star;
    t.add({num(s), num(b.alpha_sn(s)), num(right ? b.alpha_hopf(s) : NAN), num(right ? b.alpha_homoclinic(s) : NAN)});
  }
  return t;
}

json hopf_json(double kappa, double h, double x1) {
  const auto c = hopf_critical(kappa, h, x1);
  const auto r = focal_values(c);
  return {{"kappa", kappa},
          {"h", h},
          {"x1", x1},
          {"alpha", c.alpha},
          {"sigma", c.sigma},
          {"e1", {c.e1.x, c.e1.y}},
          {"omega", c.omega},
          {"in_P", c.in_P},
          {"focal", {{"f1", r.f1},
                     {"f2", r.f2},
                     {"l1", r.l1},
                     {"l2", r.l2},
                     {"l3", r.l3},
                     {"L1", r.L1},
                     {"L2", r.L2},
                     {"prefactor1", r.prefactor1},
                     {"prefactor2", r.prefactor2},
                     {"f1_zero", r.f1_zero},
                     {"f2_zero", r.f2_zero},
                     {"multiplicity", r.multiplicity},
                     {"class", to_string(multiplicity_region(kappa, h, x1))},
                     {"method_l3", r.method_l3}}}};
}

csv trajectory_table() {
  csv t;
  t.header = {"start", "t", "x", "y"};
  return t;
}

void trajectory_rows(csv& t, int start, const trajectory& tr) {
  for (std::size_t i = 0; i < tr.t.size(); ++i)
    t.add({std::to_string(start), num(tr.t[i]), num(tr.x[i].x), num(tr.x[i].y)});
}

json stats_json(const ode_stats& s) {
  return {{"steps", s.steps}, {"rejected", s.rejected}, {"clamps", s.clamps}, {"max_error", s.max_error}};
}

json cycles_json(const param_set& p, const cycle_options& o) {
  json j = {{"params", params_json(p)}};
  const equilibrium* focus = nullptr;
  const auto eqs = positive_equilibria(p);
  for (const auto& e : eqs)
    if (e.det > 0 && e.multiplicity == 1) {
      focus = &e;
      break;
    }
  if (!focus) {
    j["around"] = nullptr;
    j["cycles"] = json::array();
    j["note"] = "no positive focus";
    return j;
  }
  j["around"] = {focus->point.x, focus->point.y};
  cycle_report rep;
  try {
    rep = detect_cycles(p, *focus, o);
  } catch (const budget_exhausted& b) {
    rep = b.partial;
    j["error"] = b.what();
  }
  // outer cycles first, matching how the figures describe them
  json cs = json::array();
  for (auto it = rep.cycles.rbegin(); it != rep.cycles.rend(); ++it)
    cs.push_back({{"point", {it->point.x, it->point.y}},
                  {"r", it->r},
                  {"period", it->period},
                  {"stability", to_string(it->stability)},
                  {"multiplier", it->multiplier}});
  j["cycles"] = cs;
  json an = json::array();
  for (const auto& a : rep.annuli) an.push_back({{"r_in", a.r_in}, {"r_out", a.r_out}, {"d_in", a.d_in}, {"d_out", a.d_out}});
  j["annuli"] = an;
  j["r_escape"] = jnum(rep.r_escape);
  j["evaluations"] = rep.evaluations;
  return j;
}

json table1_json(const regime_options& o) {
  const double h = hopf_alpha_zero_trace(0.35, 1.2, 0.5, 6 / 0.35, 20);
  const auto rows = table1_rows(h);
  std::vector<json> out(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const auto& row = rows[i];
    const auto v = classify_regime({row.alpha, 1.2, row.sigma, 0.5}, row.homoclinic_row, o);
    json r = {{"zone", row.zone},
              {"sigma", row.sigma},
              {"alpha", row.alpha},
              {"inventory", v.inventory},
              {"orbits", v.orbits},
              {"expected_inventory", row.expected_inventory},
              {"expected_orbits", row.expected_orbits},
              {"matches", verdict_matches(row, v)},
              {"cycles", v.cycles}};
    if (std::isfinite(v.l1)) r["l1"] = v.l1;
    if (v.homoclinic) r["homoclinic_bracket"] = {v.homoclinic->lo, v.homoclinic->hi};
    out[i] = r;
  });
  bool all = true;
  for (const auto& r : out) all = all && r["matches"].get<bool>();
  return {{"kappa", 1.2}, {"h", 0.5}, {"rows", out}, {"all_match", all}};
}

json variety_json() {
  const auto r = variety_check_desk();
  json roots = json::array(), wit = json::array(), samples = json::array();
  for (const auto& v : r.roots)
    roots.push_back({{"factor", v.factor},
                     {"power", v.power},
                     {"h", v.h},
                     {"kappa", jnum(v.kappa)},
                     {"feasible", v.feasible},
                     {"reason", v.reason}});
  for (const auto& w : r.witnesses)
    wit.push_back({{"x1", w.x1},
                   {"h", w.h},
                   {"kappa", w.kappa},
                   {"f1_zero_exact", w.f1_zero_exact},
                   {"f2_zero_exact", w.f2_zero_exact},
                   {"f1_residual", w.f1_residual},
                   {"f3_slice", w.f3_slice},
                   {"l3", w.l3},
                   {"multiplicity", w.multiplicity}});
  for (const auto& s : r.h3_samples)
    samples.push_back({{"x1", s.x1}, {"h", s.h}, {"kappa", s.kappa}, {"l3", jnum(s.l3)}, {"multiplicity", s.multiplicity}});
  return {{"slice_matches_general", r.slice_matches_general},
          {"resultant_degree", r.resultant_degree},
          {"resultant_sign", r.resultant_sign},
          {"roots", roots},
          {"witnesses", wit},
          {"half_h_common_zero_feasible", r.half_h_common_zero_feasible},
          {"h3_samples", samples},
          {"violations", r.violations}};
}

// ---- scenario configs ----

double need_number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number()) throw config_error(where + ": missing numeric '" + key + "'");
  return j[key].get<double>();
}

param_set parse_params(const json& j, const std::string& where) {
  if (!j.is_object()) throw config_error(where + ": parameter set must be an object");
  param_set p{need_number(j, "alpha", where), need_number(j, "kappa", where), need_number(j, "sigma", where),
              need_number(j, "h", where)};
  if (!(p.alpha > 0 && p.kappa > 0 && p.sigma > 0 && p.h > 0)) throw config_error(where + ": parameters must be positive");
  return p;
}

std::vector<double> parse_axis(const json& j, const std::string& name) {
  std::vector<double> v;
  if (j.is_number()) {
    v.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number()) throw config_error("grid." + name + ": list entries must be numbers");
      v.push_back(e.get<double>());
    }
  } else if (j.is_object()) {
    const double lo = need_number(j, "min", "grid." + name), hi = need_number(j, "max", "grid." + name);
    if (!j.contains("count") || !j["count"].is_number_integer()) throw config_error("grid." + name + ": missing count");
    const int n = j["count"].get<int>();
    if (n < 1 || hi < lo) throw config_error("grid." + name + ": need count >= 1 and max >= min");
    for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  } else {
    throw config_error("grid." + name + ": expected number, list or {min, max, count}");
  }
  if (v.empty()) throw config_error("grid." + name + ": empty");
  for (double x : v)
    if (!(x > 0)) throw config_error("grid." + name + ": values must be positive");
  return v;
}

std::vector<param_set> parse_grid(const json& g) {
  if (!g.is_object()) throw config_error("grid: must be an object");
  std::vector<std::vector<double>> axes;
  for (const auto& name : param_cols) {
    if (!g.contains(name)) throw config_error("grid: missing axis '" + name + "'");
    axes.push_back(parse_axis(g[name], name));
  }
  std::vector<param_set> out;
  for (double a : axes[0])
    for (double k : axes[1])
      for (double s : axes[2])
        for (double h : axes[3]) out.push_back({a, k, s, h});
  return out;
}

const std::vector<std::string> known_tasks{"equilibria", "region", "bt", "hopf", "simulate", "cycles", "table1", "variety"};

struct scenario {
  std::string name;
  std::vector<param_set> points;
  std::vector<std::string> tasks;
  bt_request bt;
  std::optional<std::array<double, 3>> hopf;  // kappa, h, x1
  std::vector<state> starts;
  double t_end = 200, tol = 1e-9;
  std::size_t max_steps = ode_options{}.max_steps;
  cycle_options cycles;
  fs::path output;
};

scenario parse_scenario(const json& j, const std::string& output_override) {
  scenario s;
  if (!j.is_object()) throw config_error("config: top level must be an object");
  s.name = j.value("name", std::string("scenario"));
  if (j.contains("params")) {
    const auto& p = j["params"];
    if (p.is_array()) {
      for (std::size_t i = 0; i < p.size(); ++i) s.points.push_back(parse_params(p[i], "params[" + std::to_string(i) + "]"));
    } else {
      s.points.push_back(parse_params(p, "params"));
    }
  }
  if (j.contains("grid")) {
    const auto g = parse_grid(j["grid"]);
    s.points.insert(s.points.end(), g.begin(), g.end());
  }
  if (!j.contains("tasks") || !j["tasks"].is_array() || j["tasks"].empty()) throw config_error("config: nonempty 'tasks' list required");
  for (const auto& t : j["tasks"]) {
    if (!t.is_string() || std::find(known_tasks.begin(), known_tasks.end(), t.get<std::string>()) == known_tasks.end())
      throw config_error("config: unknown task " + t.dump());
    s.tasks.push_back(t.get<std::string>());
  }
  auto has = [&](const char* t) { return std::find(s.tasks.begin(), s.tasks.end(), t) != s.tasks.end(); };
  for (auto t : {"equilibria", "region", "simulate", "cycles"})
    if (has(t) && s.points.empty()) throw config_error(std::string("config: task '") + t + "' needs params or grid");
  if (j.contains("bt")) {
    const auto& b = j["bt"];
    s.bt.xstar = need_number(b, "xstar", "bt");
    s.bt.h = need_number(b, "h", "bt");
    s.bt.radius = b.value("radius", 0.1);
    s.bt.count = b.value("count", 41);
    if (!(s.bt.radius > 0) || s.bt.count < 2) throw config_error("bt: need radius > 0 and count >= 2");
  }
  if (has("hopf")) {
    if (!j.contains("hopf")) throw config_error("config: task 'hopf' needs a 'hopf' block");
    const auto& h = j["hopf"];
    s.hopf = {need_number(h, "kappa", "hopf"), need_number(h, "h", "hopf"), need_number(h, "x1", "hopf")};
  }
  if (j.contains("simulate")) {
    const auto& m = j["simulate"];
    s.t_end = m.value("t_end", s.t_end);
    if (m.contains("starts")) {
      for (const auto& st : m["starts"]) {
        if (!st.is_array() || st.size() != 2 || !st[0].is_number() || !st[1].is_number())
          throw config_error("simulate.starts: entries must be [x, y]");
        s.starts.push_back({st[0].get<double>(), st[1].get<double>()});
        if (s.starts.back().x < 0 || s.starts.back().y < 0) throw config_error("simulate.starts: nonnegative entries required");
      }
    }
    if (!(s.t_end > 0)) throw config_error("simulate.t_end must be positive");
  }
  if (has("simulate") && s.starts.empty()) throw config_error("config: task 'simulate' needs simulate.starts");
  if (j.contains("integrator")) {
    s.tol = j["integrator"].value("tol", s.tol);
    if (!(s.tol > 0)) throw config_error("integrator.tol must be positive");
    const auto& in = j["integrator"];
    if (in.contains("max_steps")) {
      if (!in["max_steps"].is_number_unsigned() || in["max_steps"].get<std::size_t>() == 0)
        throw config_error("integrator.max_steps must be a positive integer");
      s.max_steps = in["max_steps"].get<std::size_t>();
    }
  }
  if (j.contains("cycles")) {
    const auto& c = j["cycles"];
    s.cycles.per_decade = c.value("per_decade", s.cycles.per_decade);
    s.cycles.budget = c.value("budget", s.cycles.budget);
    if (s.cycles.per_decade < 1) throw config_error("cycles.per_decade must be >= 1");
  }
  s.output = output_override.empty() ? fs::path(j.value("output", std::string("out/") + s.name)) : fs::path(output_override);
  return s;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << content;
}

std::string csv_text(const csv& t) {
  std::ostringstream os;
  t.write(os);
  return os.str();
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// point processing order is shuffled by the seed; outputs are reassembled by index
std::vector<std::size_t> task_order(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  return idx;
}

void run_scenario(const scenario& s, std::uint64_t seed) {
  fs::create_directories(s.output);
  std::vector<std::string> written;
  auto has = [&](const char* t) { return std::find(s.tasks.begin(), s.tasks.end(), t) != s.tasks.end(); };
  const auto order = task_order(s.points.size(), seed);

  if (has("equilibria")) {
    std::vector<csv> parts(s.points.size(), equilibria_table());
    parallel_for(order.size(), [&](std::size_t k) {
      const std::size_t i = order[k];
      equilibria_rows(parts[i], static_cast<int>(i), s.points[i]);
    });
    csv all = equilibria_table();
    for (auto& p : parts) all.rows.insert(all.rows.end(), p.rows.begin(), p.rows.end());
    write_file(s.output / "equilibria.csv", csv_text(all));
    written.push_back("equilibria.csv");
  }
  if (has("region")) {
    csv t = region_table();
    for (std::size_t i = 0; i < s.points.size(); ++i) region_rows(t, static_cast<int>(i), s.points[i]);
    write_file(s.output / "region.csv", csv_text(t));
    written.push_back("region.csv");
  }
  if (has("bt")) {
    write_file(s.output / "bt_curves.csv", csv_text(bt_table(s.bt)));
    write_file(s.output / "bt.json", json_text(with_schema("bt", bt_json(s.bt))));
    written.push_back("bt_curves.csv");
    written.push_back("bt.json");
  }
  if (has("hopf")) {
    const auto& h = *s.hopf;
    write_file(s.output / "hopf.json", json_text(with_schema("hopf", hopf_json(h[0], h[1], h[2]))));
    written.push_back("hopf.json");
  }
  if (has("simulate")) {
    std::vector<std::string> texts(s.points.size());
    std::vector<json> stats(s.points.size());
    parallel_for(order.size(), [&](std::size_t k) {
      const std::size_t i = order[k];
      csv t = trajectory_table();
      json st = json::array();
      for (std::size_t j = 0; j < s.starts.size(); ++j) {
        const auto tr = integrate(s.points[i], s.starts[j], s.t_end, s.tol, false, s.max_steps);
        trajectory_rows(t, static_cast<int>(j), tr);
        st.push_back(stats_json(tr.stats));
      }
      texts[i] = csv_text(t);
      stats[i] = {{"params", params_json(s.points[i])}, {"integrator", st}};
    });
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const std::string name = s.points.size() == 1 ? "trajectory.csv" : "trajectory_" + std::to_string(i) + ".csv";
      write_file(s.output / name, texts[i]);
      written.push_back(name);
    }
    write_file(s.output / "trajectory_stats.json", json_text(with_schema("trajectory_stats", {{"points", stats}})));
    written.push_back("trajectory_stats.json");
  }
  if (has("cycles")) {
    std::vector<json> reps(s.points.size());
    parallel_for(order.size(), [&](std::size_t k) {
      const std::size_t i = order[k];
      reps[i] = cycles_json(s.points[i], s.cycles);
    });
    write_file(s.output / "cycles.json", json_text(with_schema("cycles", {{"points", reps}})));
    written.push_back("cycles.json");
  }
  if (has("table1")) {
    regime_options o;
    o.cycles = s.cycles;
    write_file(s.output / "table1.json", json_text(with_schema("table1", table1_json(o))));
    written.push_back("table1.json");
  }
  if (has("variety")) {
    write_file(s.output / "variety.json", json_text(with_schema("variety", variety_json())));
    written.push_back("variety.json");
  }
  std::cout << s.name << ":";
  for (const auto& w : written) std::cout << ' ' << (s.output / w).string();
  std::cout << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw config_error(path + ": " + e.what());
  }
}

void emit(const std::string& format, const csv* table, const json& j) {
  if (format == "csv" && table) {
    table->write(std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bifurcation analysis of a cooperative-hunting predator-prey model"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "order of independent tasks (results do not depend on it)");

  param_set p;
  auto add_params = [&](CLI::App* c) {
    c->add_option("--alpha", p.alpha)->required();
    c->add_option("--kappa", p.kappa)->required();
    c->add_option("--sigma", p.sigma)->required();
    c->add_option("--h", p.h)->required();
  };
  auto* eq = app.add_subcommand("equilibria", "equilibria and their types");
  add_params(eq);
  auto* reg = app.add_subcommand("region", "parameter region and alpha thresholds");
  add_params(reg);
  bt_request btq;
  auto* bt = app.add_subcommand("bt", "cusp anchor, curve coefficients and curves");
  bt->add_option("--xstar", btq.xstar)->required();
  bt->add_option("--h", btq.h)->required();
  bt->add_option("--radius", btq.radius);
  bt->add_option("--count", btq.count);
  double hk = 0, hh = 0, hx = 0;
  auto* hopf = app.add_subcommand("hopf", "Hopf-critical parameters and focal values");
  hopf->add_option("--kappa", hk)->required();
  hopf->add_option("--h", hh)->required();
  hopf->add_option("--x1", hx)->required();
  state s0;
  double t_end = 100, tol = 1e-9;
  auto* sim = app.add_subcommand("simulate", "integrate one orbit");
  add_params(sim);
  sim->add_option("--x0", s0.x)->required();
  sim->add_option("--y0", s0.y)->required();
  sim->add_option("--t-end", t_end)->required();
  sim->add_option("--tol", tol);
  cycle_options co;
  auto* cyc = app.add_subcommand("cycles", "limit cycles around the positive focus");
  add_params(cyc);
  cyc->add_option("--per-decade", co.per_decade);
  cyc->add_option("--budget", co.budget);
  std::string grid_file;
  auto* sweep = app.add_subcommand("sweep", "equilibria and regions over a parameter grid");
  sweep->add_option("--grid", grid_file)->required();
  app.add_subcommand("table1", "regime verdicts near the cusp");
  app.add_subcommand("variety", "exact check of the third-order weak focus");
  std::string config_file;
  auto* run = app.add_subcommand("run", "run a scenario config and write artifacts");
  run->add_option("config", config_file)->required();
  std::string output_dir;
  run->add_option("--output", output_dir, "artifact directory (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    if (name == "run") {
      const auto j = read_json_file(config_file);
      const auto sc = parse_scenario(j, output_dir);
      try {
        run_scenario(sc, seed);
      } catch (const config_error&) {
        throw;
      } catch (const std::exception& e) {
        fs::create_directories(sc.output);
        write_file(sc.output / "diagnostic.json",
                   json_text(with_schema("diagnostic", {{"scenario", sc.name}, {"error", e.what()}})));
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 2;
      }
      return 0;
    }
    if (name == "equilibria" || name == "region" || name == "simulate" || name == "cycles") {
      if (!(p.alpha >= 0 && p.kappa > 0 && p.sigma > 0 && p.h > 0)) throw config_error("parameters must be positive");
    }
    if (name == "equilibria") {
      csv t = equilibria_table();
      equilibria_rows(t, 0, p);
      emit(format, &t, with_schema("equilibria", {{"params", params_json(p)}, {"equilibria", equilibria_json(p)}}));
    } else if (name == "region") {
      csv t = region_table();
      region_rows(t, 0, p);
      const auto r = classify_region(p);
      emit(format, &t,
           with_schema("region", {{"params", params_json(p)},
                                  {"region", to_string(r.tag)},
                                  {"positive_count", r.positive_count()},
                                  {"kappa1", jnum(r.kappa1)},
                                  {"alpha1", jnum(r.alpha1.value_or(NAN))},
                                  {"alpha2", jnum(r.alpha2.value_or(NAN))}}));
    } else if (name == "bt") {
      if (!(btq.radius > 0) || btq.count < 2) throw config_error("need radius > 0 and count >= 2");
      const csv t = bt_table(btq);
      json j = bt_json(btq);
      json curve = json::array();
      for (const auto& r : t.rows) {
        json row = json::array();
        for (const auto& f : r) row.push_back(jnum(std::stod(f)));
        curve.push_back(row);
      }
      j["curves_header"] = t.header;
      j["curves"] = curve;
      emit(format, &t, with_schema("bt", j));
    } else if (name == "hopf") {
      emit(format, nullptr, with_schema("hopf", hopf_json(hk, hh, hx)));
    } else if (name == "simulate") {
      const auto tr = integrate(p, s0, t_end, tol);
      csv t = trajectory_table();
      trajectory_rows(t, 0, tr);
      json pts = json::array();
      for (std::size_t i = 0; i < tr.t.size(); ++i) pts.push_back({tr.t[i], tr.x[i].x, tr.x[i].y});
      emit(format, &t,
           with_schema("trajectory", {{"params", params_json(p)}, {"integrator", stats_json(tr.stats)}, {"samples", pts}}));
    } else if (name == "cycles") {
      emit(format, nullptr, with_schema("cycles", cycles_json(p, co)));
    } else if (name == "sweep") {
      const auto j = read_json_file(grid_file);
      const auto pts = parse_grid(j.contains("grid") ? j["grid"] : j);
      const auto order = task_order(pts.size(), seed);
      std::vector<csv> parts(pts.size(), region_table());
      parallel_for(order.size(), [&](std::size_t k) { region_rows(parts[order[k]], static_cast<int>(order[k]), pts[order[k]]); });
      csv all = region_table();
      for (auto& q : parts) all.rows.insert(all.rows.end(), q.rows.begin(), q.rows.end());
      json rows = json::array();
      for (const auto& r : all.rows) rows.push_back(r);
      emit(format, &all, with_schema("sweep", {{"header", all.header}, {"rows", rows}}));
    } else if (name == "table1") {
      emit(format, nullptr, with_schema("table1", table1_json({})));
    } else if (name == "variety") {
      emit(format, nullptr, with_schema("variety", variety_json()));
    }
  } catch (const config_error& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
