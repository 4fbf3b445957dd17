#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "bitscatter/cli.hpp"
#include "bitscatter/records_csv.hpp"
#include "test_support.hpp"

using namespace bitscatter;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args, std::map<std::string, std::string> env = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, [env](const std::string& name) -> std::optional<std::string> {
    auto it = env.find(name);
    if (it == env.end()) return std::nullopt;
    return it->second;
  });
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunRecord single_record(const std::string& out) {
  std::istringstream in(out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, kRecordsHeader);
  return parse_record(row, 2);
}

}  // namespace

TEST(CliRun, PrintsOneRecordAndSummary) {
  const auto r = cli({"run", "--kstar", "5", "--k", "6", "--m", "10000", "--n", "1000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const RunRecord rec = single_record(r.out);
  EXPECT_EQ(rec.k, 6);
  EXPECT_EQ(rec.m, 10000u);
  EXPECT_NEAR(rec.overall_error, 0.33, 0.05);
  EXPECT_NE(r.out.find("overall error"), std::string::npos);
}

TEST(CliRun, IdenticalInvocationsIdenticalOutput) {
  const std::vector<std::string> args{"run", "--k", "4", "--m", "500", "--seed", "3"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(CliRun, BadOrderIsUsageErrorNamingTheFlag) {
  const auto r = cli({"run", "--k", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--k"), std::string::npos);
}

TEST(CliRun, TestLengthMustExceedOrder) {
  const auto r = cli({"run", "--k", "8", "--n", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n"), std::string::npos);
}

TEST(Cli, HelpForEveryCommand) {
  for (std::string sub : {"run", "sweep", "analyze", "plot"}) {
    const auto r = cli({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("Usage"), std::string::npos) << sub;
  }
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, MissingOrUnknownSubcommandIsUsageError) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"run", "--no-such-flag"}).code, 2);
}

TEST(CliConfig, PrecedenceIsConfigThenEnvThenFlags) {
  fixtures::TempDir dir;
  {
    std::ofstream cfg(dir / "run.conf");
    cfg << "# learner settings\n\nk = 3\nm=400\nseed=11\n";
  }
  const std::string conf = (dir / "run.conf").string();
  EXPECT_EQ(single_record(cli({"--config", conf, "run"}).out).k, 3);
  EXPECT_EQ(single_record(cli({"--config", conf, "run"}).out).m, 400u);
  EXPECT_EQ(single_record(cli({"--config", conf, "run"}, {{"BITSCATTER_K", "2"}}).out).k, 2);
  EXPECT_EQ(single_record(cli({"--config", conf, "run", "--k", "4"}, {{"BITSCATTER_K", "2"}}).out).k, 4);
  EXPECT_EQ(single_record(cli({"run", "--config", conf}).out).k, 3);
  EXPECT_EQ(single_record(cli({"run", "--k", "4", "--config=" + conf}).out).k, 4);
}

TEST(CliConfig, UnknownKeyAndMissingFileAreUsageErrors) {
  fixtures::TempDir dir;
  {
    std::ofstream cfg(dir / "bad.conf");
    cfg << "colour=blue\n";
  }
  EXPECT_EQ(cli({"--config", (dir / "bad.conf").string(), "run"}).code, 2);
  EXPECT_EQ(cli({"--config", (dir / "missing.conf").string(), "run"}).code, 2);
}

TEST(CliConfig, ParseIntList) {
  EXPECT_EQ(parse_int_list("1..4"), (std::vector<long long>{1, 2, 3, 4}));
  EXPECT_EQ(parse_int_list("100..400:100,7"), (std::vector<long long>{100, 200, 300, 400, 7}));
  EXPECT_THROW(parse_int_list("3..1"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("a"), std::invalid_argument);
}

TEST(CliSweep, WritesRecordsAndReproducibleManifest) {
  fixtures::TempDir dir;
  const auto r = cli({"sweep", "--k-values", "1..3", "--m-values", "100,500", "--repeats", "2", "--out",
                      (dir / "a").string(), "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto records = read_records_csv(dir / "a" / "records.csv");
  EXPECT_EQ(records.size(), 12u);
  EXPECT_FALSE(std::filesystem::exists(dir / "a" / "records.partial.csv"));
  const std::string manifest = slurp(dir / "a" / "manifest.txt");
  EXPECT_NE(manifest.find("k-values=1,2,3"), std::string::npos);
  EXPECT_NE(manifest.find("wall_seconds="), std::string::npos);

  const auto again = cli({"--config", (dir / "a" / "manifest.txt").string(), "sweep", "--out", (dir / "b").string()});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(slurp(dir / "a" / "records.csv"), slurp(dir / "b" / "records.csv"));
}

TEST(CliSweep, DeskScaleCardinality) {
  fixtures::TempDir dir;
  ASSERT_EQ(cli({"sweep", "--desk-scale", "--kstar", "5", "--out", dir.path().string()}).code, 0);
  EXPECT_EQ(read_records_csv(dir / "records.csv").size(), 300u);
}

TEST(CliSweep, PresetsAreExclusive) {
  fixtures::TempDir dir;
  EXPECT_EQ(cli({"sweep", "--desk-scale", "--paper-scale", "--out", dir.path().string()}).code, 2);
}

TEST(CliSweep, UnwritableOutputIsRuntimeFailure) {
  fixtures::TempDir dir;
  { std::ofstream blocker(dir / "file"); }
  const auto r = cli({"sweep", "--k-values", "1", "--m-values", "100", "--repeats", "1", "--out",
                      (dir / "file" / "sub").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

class CliOnDeskSweep : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new fixtures::TempDir();
    ASSERT_EQ(cli({"sweep", "--desk-scale", "--out", dir_->path().string()}).code, 0);
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }
  static std::string records() { return (dir_->path() / "records.csv").string(); }
  static fixtures::TempDir* dir_;
};

fixtures::TempDir* CliOnDeskSweep::dir_ = nullptr;

TEST_F(CliOnDeskSweep, AnalyzeWritesCsvAndHeadline) {
  const auto r = cli({"analyze", "--in", records(), "--out", (dir_->path() / "an").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Pearson(l0, entropy bound)"), std::string::npos);
  EXPECT_NE(r.out.find("skewness"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir_->path() / "an" / "analysis.csv"));
}

TEST_F(CliOnDeskSweep, AnalyzeFailsOnMissingOrEmptyInput) {
  EXPECT_EQ(cli({"analyze", "--in", (dir_->path() / "nope.csv").string()}).code, 1);
  const auto empty = dir_->path() / "empty.csv";
  { std::ofstream(empty) << kRecordsHeader << '\n'; }
  const auto r = cli({"analyze", "--in", empty.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("no records"), std::string::npos);
}

TEST_F(CliOnDeskSweep, RhoVsKCurveDescends) {
  const auto out = dir_->path() / "fig";
  ASSERT_EQ(cli({"plot", "--in", records(), "--figure", "rho-vs-k", "--out", out.string()}).code, 0);
  EXPECT_NE(slurp(out / "rho-vs-k.svg").find("<polyline"), std::string::npos);
  // Columns: k,compressor,runs,mean_rho,std_rho
  std::ifstream in(out / "rho-vs-k.csv");
  std::string line;
  std::getline(in, line);
  double previous = 1e9;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    ASSERT_EQ(f.size(), 5u);
    if (f[1] != "ppm") continue;
    const double mean = std::stod(f[3]);
    if (std::stoi(f[0]) >= 2) {
      EXPECT_LE(mean, previous + 0.02) << line;
    }
    previous = mean;
  }
}

TEST_F(CliOnDeskSweep, ErrorSurfaceLeavesInadmissibleCellsUnpainted) {
  const auto out = dir_->path() / "fig";
  ASSERT_EQ(cli({"plot", "--in", records(), "--figure", "error-surface", "--out", out.string()}).code, 0);
  const std::string svg = slurp(out / "error-surface.svg");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("admissible cells: (\\d+) of (\\d+)")));
  const long admissible = std::stol(m[1]), cells = std::stol(m[2]);
  EXPECT_LT(admissible, cells);
  // Painted cells plus background, frame and note backdrops.
  long rects = 0;
  for (auto pos = svg.find("<rect "); pos != std::string::npos; pos = svg.find("<rect ", pos + 1)) ++rects;
  EXPECT_LE(rects, admissible + 8);
  EXPECT_NE(svg.find("contour level"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(out / "error-surface_x_edges.csv"));
}

TEST_F(CliOnDeskSweep, HistogramAnnotatesRightTail) {
  const auto out = dir_->path() / "fig";
  ASSERT_EQ(cli({"plot", "--in", records(), "--figure", "histogram-l0", "--out", out.string()}).code, 0);
  EXPECT_NE(slurp(out / "histogram-l0.svg").find("heavier right tail"), std::string::npos);
}

TEST_F(CliOnDeskSweep, AllFiguresRender) {
  const auto out = dir_->path() / "all";
  const auto r = cli({"plot", "--in", records(), "--out", out.string(), "--compressor", "ppm"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t svgs = 0;
  for (const auto& e : std::filesystem::directory_iterator(out)) svgs += e.path().extension() == ".svg";
  EXPECT_EQ(svgs, 12u);
}

TEST_F(CliOnDeskSweep, PlotRejectsUnknownFigure) {
  EXPECT_EQ(cli({"plot", "--in", records(), "--figure", "pie-chart"}).code, 2);
}
