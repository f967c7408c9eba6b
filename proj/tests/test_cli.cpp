#include <gtest/gtest.h>

#include <array>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct result {
  int code;
  std::string out;
};

result run_cli(const std::string& args) {
  const std::string cmd = std::string(COOPHUNT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// minimal RFC-4180 reader: quoted fields, CRLF rows
std::vector<std::vector<std::string>> parse_csv(const std::string& s) {
  std::vector<std::vector<std::string>> rows(1);
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (quoted) {
      if (c == '"' && i + 1 < s.size() && s[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rows.back().push_back(field);
      field.clear();
    } else if (c == '\r') {
    } else if (c == '\n') {
      rows.back().push_back(field);
      field.clear();
      rows.emplace_back();
    } else {
      field += c;
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return rows;
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("coophunt_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string config(const std::string& name) { return std::string(COOPHUNT_SOURCE_DIR) + "/configs/" + name; }

}  // namespace

TEST(Cli, EquilibriaReportsFoldCandidate) {
  const auto r = run_cli("equilibria --alpha 6 --kappa 1.2 --sigma 1 --h 0.5");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  bool found = false;
  for (const auto& e : j["equilibria"])
    if (e["kind"] == "positive") {
      found = true;
      EXPECT_NEAR(e["x"].get<double>(), 1.0, 1e-6);
      EXPECT_NEAR(e["y"].get<double>(), 0.1667, 1e-4);
      EXPECT_EQ(e["classification"], "degenerate_fold_candidate");
    }
  EXPECT_TRUE(found);
}

TEST(Cli, EquilibriaCsvRoundTrips) {
  const auto r = run_cli("equilibria --alpha 6 --kappa 1.2 --sigma 1 --h 0.5 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0][0], "schema_version");
  for (const auto& row : rows) EXPECT_EQ(row.size(), rows[0].size());
  // shortest round-trip formatting: parsing and reprinting gives the same text
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t c : {7u, 8u, 10u, 11u}) {
      char buf[64];
      const auto end = std::to_chars(buf, buf + sizeof buf, std::stod(rows[i][c])).ptr;
      EXPECT_EQ(std::string(buf, end), rows[i][c]);
    }
  EXPECT_NEAR(std::stod(rows[3][8]), 1.0 / 6.0, 1e-9);
}

TEST(Cli, BtCoefficients) {
  const auto r = run_cli("bt --xstar 1 --h 0.5");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["f11"].get<double>(), -66.6667, 1e-4);
  EXPECT_NEAR(j["f12"].get<double>(), 222.2222, 1e-4);
  EXPECT_DOUBLE_EQ(j["alpha_star"].get<double>(), 20.0);
  EXPECT_NEAR(j["sigma_star"].get<double>(), 0.3, 1e-15);
  EXPECT_EQ(j["curves"].size(), 41u);
}

TEST(Cli, BtCurveOrderingInCsv) {
  const auto r = run_cli("bt --xstar 1 --h 0.5 --radius 0.05 --count 11 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"schema_version", "sigma", "alpha_SN", "alpha_H", "alpha_HL"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::stod(rows[i][1]) <= 0.3) {
      EXPECT_EQ(rows[i][3], "nan");
      continue;
    }
    EXPECT_LT(std::stod(rows[i][2]), std::stod(rows[i][3]));
    EXPECT_LT(std::stod(rows[i][3]), std::stod(rows[i][4]));
  }
}

TEST(Cli, HopfCaptionPoint) {
  const auto r = run_cli("hopf --kappa 133.7629 --h 0.45 --x1 1");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["alpha"].get<double>(), 0.3555, 1e-4);
  EXPECT_NEAR(j["sigma"].get<double>(), 2.319, 1e-3);
  EXPECT_EQ(j["focal"]["multiplicity"], 2);
}

TEST(Cli, RegionAndSweep) {
  auto r = run_cli("region --alpha 17.5 --kappa 1.2 --sigma 0.35 --h 0.5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["positive_count"], 2);

  const auto dir = scratch("sweep");
  fs::create_directories(dir);
  std::ofstream(dir / "grid.json") << R"({"alpha": {"min": 5, "max": 25, "count": 5}, "kappa": 1.2, "sigma": [0.3, 0.35], "h": 0.5})";
  r = run_cli("sweep --grid " + (dir / "grid.json").string() + " --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out).size(), 11u);
  const auto again = run_cli("--seed 99 sweep --grid " + (dir / "grid.json").string() + " --format csv");
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, SimulateStaysInOrthant) {
  const auto r = run_cli("simulate --alpha 18.6 --kappa 1.2 --sigma 0.35 --h 0.5 --x0 0.4 --y0 0.12 --t-end 50 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_GT(rows.size(), 10u);
  EXPECT_EQ(std::stod(rows.back()[2]), 50.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(std::stod(rows[i][3]), 0.0);
    EXPECT_GE(std::stod(rows[i][4]), 0.0);
  }
}

TEST(Cli, UsageAndConfigErrorsExitOne) {
  EXPECT_EQ(run_cli("equilibria --alpha 6").code, 1);
  EXPECT_EQ(run_cli("--format xml variety").code, 1);
  EXPECT_EQ(run_cli("run /nonexistent/config.json").code, 1);

  const auto dir = scratch("bad");
  fs::create_directories(dir);
  const std::vector<std::string> bad = {
      "{not json",
      R"({"tasks": ["equilibria"]})",
      R"({"params": {"alpha": 1, "kappa": 1, "sigma": 1}, "tasks": ["equilibria"]})",
      R"({"params": {"alpha": 1, "kappa": 1, "sigma": 1, "h": 0.5}, "tasks": ["dance"]})",
      R"({"params": {"alpha": 1, "kappa": 1, "sigma": 1, "h": 0.5}, "tasks": ["simulate"]})",
      R"({"params": {"alpha": -1, "kappa": 1, "sigma": 1, "h": 0.5}, "tasks": ["region"]})",
      R"({"grid": {"alpha": {"min": 1, "max": 0, "count": 3}, "kappa": 1, "sigma": 1, "h": 1}, "tasks": ["region"]})",
  };
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const auto f = dir / ("c" + std::to_string(i) + ".json");
    std::ofstream(f) << bad[i];
    EXPECT_EQ(run_cli("run " + f.string() + " --output " + (dir / "out").string()).code, 1) << bad[i];
  }
}

TEST(Cli, NumericFailureExitsTwoWithDiagnostic) {
  const auto dir = scratch("numeric");
  fs::create_directories(dir);
  // ten steps cannot reach t_end
  std::ofstream(dir / "c.json") << R"({"name": "stall", "params": {"alpha": 18, "kappa": 1.2, "sigma": 0.35, "h": 0.5},
    "tasks": ["simulate"], "simulate": {"t_end": 100, "starts": [[0.5, 0.2]]}, "integrator": {"max_steps": 10}})";
  const auto r = run_cli("run " + (dir / "c.json").string() + " --output " + (dir / "out").string());
  EXPECT_EQ(r.code, 2);
  ASSERT_TRUE(fs::exists(dir / "out" / "diagnostic.json"));
  const auto d = json::parse(slurp(dir / "out" / "diagnostic.json"));
  EXPECT_EQ(d["schema_version"], 1);
  EXPECT_FALSE(d["error"].get<std::string>().empty());
}

TEST(Cli, Fig2ConfigDeterministicAcrossSeeds) {
  const auto a = scratch("fig2a"), b = scratch("fig2b");
  ASSERT_EQ(run_cli("--seed 1 run " + config("fig2.json") + " --output " + a.string()).code, 0);
  ASSERT_EQ(run_cli("--seed 12345 run " + config("fig2.json") + " --output " + b.string()).code, 0);
  int trajectories = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    const auto name = e.path().filename().string();
    EXPECT_EQ(slurp(e.path()), slurp(b / name)) << name;
    if (name.rfind("trajectory_", 0) == 0 && e.path().extension() == ".csv") {
      ++trajectories;
      const auto rows = parse_csv(slurp(e.path()));
      EXPECT_EQ(rows[0], (std::vector<std::string>{"schema_version", "start", "t", "x", "y"}));
      for (std::size_t i = 1; i < rows.size(); ++i) ASSERT_EQ(rows[i].size(), 5u);
    } else if (e.path().extension() == ".json") {
      EXPECT_EQ(json::parse(slurp(e.path()))["schema_version"], 1) << name;
    }
  }
  EXPECT_EQ(trajectories, 6);
  EXPECT_TRUE(fs::exists(a / "bt_curves.csv"));
}

TEST(Cli, Fig3bConfigReportsCycles) {
  const auto dir = scratch("fig3b");
  ASSERT_EQ(run_cli("run " + config("fig3b.json") + " --output " + dir.string()).code, 0);
  const auto j = json::parse(slurp(dir / "cycles.json"));
  const auto& pt = j["points"][0];
  ASSERT_GE(pt["cycles"].size(), 1u);
  for (const auto& c : pt["cycles"]) {
    const std::string s = c["stability"];
    EXPECT_TRUE(s == "stable" || s == "unstable" || s == "semistable");
    EXPECT_GT(c["period"].get<double>(), 0.0);
  }
  const auto h = json::parse(slurp(dir / "hopf.json"));
  EXPECT_EQ(h["focal"]["multiplicity"], 2);
}

TEST(Cli, Table1ConfigMatches) {
  const auto dir = scratch("table1");
  ASSERT_EQ(run_cli("run " + config("table1.json") + " --output " + dir.string()).code, 0);
  const auto j = json::parse(slurp(dir / "table1.json"));
  EXPECT_EQ(j["schema_version"], 1);
  ASSERT_EQ(j["rows"].size(), 9u);
  for (const auto& r : j["rows"]) EXPECT_TRUE(r["matches"].get<bool>()) << r["zone"];
  EXPECT_TRUE(j["all_match"].get<bool>());
}
