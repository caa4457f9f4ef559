#include "doctest.h"

#include "tempus/cli.hpp"
#include "tempus/error.hpp"
#include "tempus/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace tempus;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tempus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ResultTable table(const Outcome& o, OutputFormat f = OutputFormat::Csv) {
  REQUIRE(o.code == 0);
  return ResultTable::parse(o.out, f);
}

}  // namespace

TEST_CASE("grid parsing") {
  const Grid g = Grid::parse("1:10:5:log");
  CHECK(g.count == 5);
  CHECK(g.scale == GridScale::Log);
  CHECK(g.to_string() == "1:10:5:log");
  CHECK(Grid::parse("-3:3:7:lin").scale == GridScale::Linear);
  CHECK_THROWS_AS(Grid::parse("1:10:5"), Error);
  CHECK_THROWS_AS(Grid::parse("1:10:x:log"), Error);
}

TEST_CASE("quench subcommand") {
  const Outcome a = cli({"quench", "--dim", "8", "--seed", "1", "--times", "1:10:5:log"});
  const Outcome b = cli({"quench", "--dim", "8", "--seed", "1", "--times", "1:10:5:log"});
  CHECK(a.out == b.out);
  const ResultTable t = table(a);
  CHECK(t.rows().size() == 5);
  CHECK(t.meta_value("schema_version") == "1");
  CHECK(t.meta_value("code_version") == std::string(kCodeVersion));
  CHECK(t.meta_value("seed") == "1");
  for (const auto& row : t.rows()) CHECK(row[2] <= row[3] + 1e-9);

  const ResultTable e = table(cli({"quench", "--dim", "8", "--eigenstate", "--initial", "3",
                                   "--times", "0.1:1000:4:log"}));
  CHECK(e.meta_value("time_unit") == "absolute");
  for (double s : e.column("S_dt")) CHECK(std::abs(s) <= 1e-9);

  const ResultTable fit = table(cli({"quench", "--dim", "64", "--fit", "5:50"}));
  CHECK(!fit.meta_value("fit_slope").empty());
  CHECK(!fit.meta_value("fit_r2").empty());

  const ResultTable spin = table(cli({"quench", "--ensemble", "spin-chain", "--sites", "6",
                                      "--times", "1:100:3:log"}));
  CHECK(spin.meta_value("sites") == "6");
  CHECK(spin.rows().size() == 3);
}

TEST_CASE("echo subcommand") {
  const ResultTable t = table(cli({"echo", "--dim", "32", "--deltas", "-2:2:41:linear"}));
  const auto f = t.column("fidelity");
  REQUIRE(f.size() == 41);
  CHECK(f[20] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == doctest::Approx(f[40 - i]).epsilon(1e-12));
  CHECK(!t.meta_value("curvature").empty());
  CHECK(cli({"echo", "--dim", "8", "--eigenstate"}).code == 3);
}

TEST_CASE("clock subcommand") {
  const ResultTable t = table(cli({"clock", "--clock-n", "4", "--clock-tau", "0.5"}), OutputFormat::Csv);
  CHECK(t.columns().size() == 5);
  CHECK(t.meta_value("record_entropy") == "1.3862943611198906");
  for (const auto& row : t.rows()) {
    const double ticks = row[0] / 0.5;
    if (ticks != std::round(ticks)) continue;
    const int hot = static_cast<int>(std::lround(ticks)) % 4;
    for (int m = 0; m < 4; ++m) CHECK(row[1 + m] == doctest::Approx(m == hot ? 1.0 : 0.0).epsilon(1e-12));
  }
  const ResultTable partial = table(cli({"clock", "--clock-n", "64", "--clock-t-run", "16"}));
  CHECK(parse_number(partial.meta_value("record_entropy")) == std::log(16.0));
}

TEST_CASE("demon subcommand") {
  const ResultTable t =
      table(cli({"demon", "--dim", "32", "--taus", "0,0.5,20", "--samples", "32", "--format", "json"}),
            OutputFormat::Json);
  REQUIRE(t.rows().size() == 3);
  CHECK(t.rows()[0][1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(t.rows()[0][4]));
  CHECK(t.rows()[2][1] < t.rows()[1][1]);
}

TEST_CASE("bounds subcommand") {
  const ResultTable t = table(cli({"bounds"}));
  for (double r : t.column("consistency_ratio")) CHECK(r == doctest::Approx(2.0).epsilon(1e-14));
  bool planck = false, sun = false;
  for (const auto& row : t.rows()) {
    if (row[1] == 1.0) {
      planck = true;
      CHECK(row[8] == 1.0);
    }
    if (row[0] == 1.989e30) {
      sun = true;
      CHECK(row[7] == doctest::Approx(1.05e77).epsilon(1e-2));
    }
  }
  CHECK(planck);
  CHECK(sun);
}

TEST_CASE("config file with flag precedence") {
  const auto path = std::filesystem::temp_directory_path() / "tempus_test_config.ini";
  {
    std::ofstream f(path);
    f << "dim=12\nseed=4\ntimes=1:10:3:log\n";
  }
  const ResultTable t = table(cli({"quench", "--config", path.string(), "--seed", "9"}));
  CHECK(t.meta_value("dim") == "12");
  CHECK(t.meta_value("seed") == "9");
  std::filesystem::remove(path);
}

TEST_CASE("errors and exit codes") {
  const Outcome bad = cli({"quench", "--dim", "1", "--format", "xml", "--ensemble", "cue"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("tempus: error [InvalidConfig]") == 0);
  CHECK(bad.err.find("--dim") != std::string::npos);
  CHECK(bad.err.find("--format") != std::string::npos);
  CHECK(bad.err.find("--ensemble") != std::string::npos);
  CHECK(bad.out.empty());

  CHECK(cli({"quench", "--times", "1:2:3:log", "--deltas", "1:2:3:log"}).code == 2);
  CHECK(cli({"quench", "--no-such-flag"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"quench", "--dim", "8", "--out", "/nonexistent-dir/x.csv"}).code == 5);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "tempus_test_out.csv";
  const Outcome direct = cli({"clock", "--clock-n", "3"});
  REQUIRE(cli({"clock", "--clock-n", "3", "--out", path.string()}).code == 0);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.out);
  std::filesystem::remove(path);
}
