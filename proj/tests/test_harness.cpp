#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "qwalk/harness/experiments.hpp"

using namespace qw;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / "qwalk_harness_test";
  fs::create_directories(d);
  return d / name;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(QWALK_BIN) + " " + args + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

ExperimentConfig quick(const std::string& name) {
  ExperimentConfig c(name);
  return c;
}

}  // namespace

TEST_CASE("config parsing with sections and overrides") {
  const ExperimentConfig c = parse_config(
      "# comment\n"
      "steps = 10\n"
      "eps = 1/64, 1/128 ; trailing comment\n"
      "[landau]\n"
      "B = 0.5\n"
      "[other]\n"
      "B = 9\n",
      "landau");
  CHECK(c.get_int("steps", 0) == 10);
  CHECK(c.get_double("B", 0.0) == 0.5);
  const auto l = c.get_list("eps", {});
  REQUIRE(l.size() == 2);
  CHECK(l[0] == 1.0 / 64);
  CHECK(c.values().at("other.B") == "9");
  ExperimentConfig d = c;
  d.apply_override("steps=12");
  CHECK(d.get_int("steps", 0) == 12);
  // section beats top level, command line beats section
  const ExperimentConfig t = parse_config("B = 1\n[landau]\nB = 2\n", "landau");
  CHECK(t.get_double("B", 0.0) == 2.0);
  ExperimentConfig u = t;
  u.apply_override("B=3");
  CHECK(u.get_double("B", 0.0) == 3.0);
  CHECK_THROWS_AS(d.apply_override("nokey"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[open\n"), ConfigError);
  ExperimentConfig e("x");
  e.set("n", "2.5");
  CHECK_THROWS_AS(e.get_int("n", 0), ConfigError);
  e.set("b", "maybe");
  CHECK_THROWS_AS(e.get_bool("b", false), ConfigError);
}

TEST_CASE("numbers format to their shortest round-trip text") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0, 123456789.0}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("CSV round trip and quoting") {
  ResultTable t;
  t.columns = {"k", "E_plus"};
  t.add_meta("config.note", "has, comma and \"quotes\"");
  t.add_meta("empty", "");
  t.add_row({0.1, -3.0});
  t.add_row({1e-20, 2.0 / 3.0});
  const std::string csv = to_csv(t);
  const ResultTable back = read_csv(csv);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(back.metadata == t.metadata);
  CHECK(to_csv(back) == csv);
  ResultTable empty;
  empty.columns = {"a", "b"};
  CHECK(to_csv(empty) == "a,b\n");
  ResultTable bad = t;
  bad.rows[0].push_back(1.0);
  CHECK_THROWS_AS(to_csv(bad), std::invalid_argument);
  bad = t;
  bad.rows[0][0] = std::nan("");
  CHECK_THROWS_AS(to_json(bad), std::invalid_argument);
}

TEST_CASE("JSON re-serializes byte for byte") {
  ExperimentConfig c = quick("dispersion");
  c.set("theta", "0.4");
  c.set("points", "16");
  const RunResult r = run(c);
  const std::string js = to_json(r.table);
  CHECK(to_json(read_json(js)) == js);
}

TEST_CASE("dispersion at theta = 0 is |k|") {
  ExperimentConfig c = quick("dispersion");
  const RunResult r = run(c);
  CHECK(r.table.columns == std::vector<std::string>{"k", "E_plus", "E_minus"});
  CHECK(r.table.rows.size() == 256);
  for (const auto& row : r.table.rows) {
    CHECK(std::abs(row[1] - std::abs(row[0])) < 1e-12);
    CHECK(row[2] == -row[1]);
  }
  CHECK(*r.table.meta("config.theta") == "0");
  CHECK(*r.table.meta("experiment") == "dispersion");
}

TEST_CASE("gauge-check reports residuals below tolerance") {
  ExperimentConfig c = quick("gauge-check");
  c.set("trials", "3");
  c.set("steps", "10");
  const RunResult r = run(c);
  CHECK(r.property_ok);
  REQUIRE(r.table.rows.size() == 1);
  for (double v : r.table.rows[0]) CHECK(v < 1e-12);
}

TEST_CASE("unknown experiments, keys and bad parameters are config errors") {
  CHECK_THROWS_AS(run(quick("nope")), ConfigError);
  ExperimentConfig c = quick("dispersion");
  c.apply_override("thetaa=1");
  CHECK_THROWS_WITH_AS(run(c), doctest::Contains("thetaa"), ConfigError);
  ExperimentConfig d = quick("evolve1d");
  d.set("sites", "1");
  CHECK_THROWS_WITH_AS(run(d), doctest::Contains("sites"), ConfigError);
  ExperimentConfig e = quick("aharonov");
  e.set("steps", "20");
  CHECK_THROWS_AS(run(e), ConfigError);
  // keys for other experiments' sections and unread top-level defaults are ignored
  ExperimentConfig f = quick("dispersion");
  f.set("landau.B", "3");
  f.set("trials", "3");
  CHECK_NOTHROW(run(f));
  // an unread key in this experiment's own section is an error
  ExperimentConfig g = quick("dispersion");
  g.set("dispersion.thetaa", "1");
  CHECK_THROWS_WITH_AS(run(g), doctest::Contains("thetaa"), ConfigError);
}

TEST_CASE("every registered experiment is listed") {
  const auto& n = experiment_names();
  CHECK(n.size() == 14);
  for (const char* e : {"evolve1d", "evolve2d", "dispersion", "gauge-check", "current-check", "landau", "bloch", "exb",
                        "rational-field", "nonabelian-check", "curved-schwarzschild", "gw-scan", "aharonov", "convergence"})
    CHECK(std::find(n.begin(), n.end(), e) != n.end());
}

TEST_CASE("CLI writes deterministic output and uses the documented exit codes") {
  const fs::path cfg = scratch("cfg.ini");
  {
    std::ofstream f(cfg);
    f << "trials = 2\nsteps = 5\n[aharonov]\nsteps = 6\n";
  }
  const fs::path a = scratch("a.csv"), b = scratch("b.csv");
  CHECK(cli("aharonov --config " + cfg.string() + " --set seed=4 --set coin_theta=0.4 --out " + a.string() + " --format csv") == 0);
  CHECK(cli("aharonov --config " + cfg.string() + " --set seed=4 --set coin_theta=0.4 --out " + b.string() + " --format csv") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("# config.coin_theta,0.4") != std::string::npos);
  CHECK(slurp(a).find("# config.steps,6") != std::string::npos);
  const fs::path j = scratch("a.json");
  CHECK(cli("current-check --config " + cfg.string() + " --out " + j.string() + " --format json") == 0);
  CHECK(read_json(slurp(j)).columns.size() == 3);
  CHECK(cli("nosuch --out " + a.string()) == 2);
  CHECK(cli("dispersion --set theta=abc --out " + a.string()) == 2);
  CHECK(cli("dispersion --config /nonexistent/cfg --out " + a.string()) == 2);
  CHECK(cli("dispersion --out /nonexistent/dir/x.csv") == 4);
  // a property experiment with an impossible tolerance fails with 3 and still writes its table
  const fs::path p = scratch("p.csv");
  fs::remove(p);
  CHECK(cli("gauge-check --set trials=1 --set steps=3 --set tolerance=1e-30 --out " + p.string()) == 3);
  CHECK(fs::exists(p));
  CHECK(cli("--list") == 0);
}
