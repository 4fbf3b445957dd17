#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "bitscatter/analysis.hpp"
#include "bitscatter/errors.hpp"
#include "bitscatter/harness.hpp"
#include "bitscatter/records_csv.hpp"
#include "bitscatter/regression.hpp"
#include "bitscatter/surface.hpp"
#include "test_support.hpp"

using namespace bitscatter;

namespace {

RunConfig config(int k_star, int k, std::size_t m, std::size_t n, std::uint64_t seed) {
  RunConfig cfg;
  cfg.k_star = k_star;
  cfg.k = k;
  cfg.m = m;
  cfg.n = n;
  cfg.seed = RngSeed{seed};
  return cfg;
}

SweepSpec small_spec() {
  SweepSpec spec;
  spec.k_values = {2, 5};
  spec.m_values = {100, 1000};
  spec.repeats = 2;
  spec.n = 300;
  spec.base_seed = RngSeed{9};
  return spec;
}

RunRecord record(int k, std::size_t m, double p0, std::size_t l0, double delta0, bool valid = true) {
  RunRecord r;
  r.k = k;
  r.m = m;
  r.p0_hat = p0;
  r.l0_lz_bytes = l0;
  r.l0_ppm_bytes = l0 / 2;
  r.delta0_bits = delta0;
  r.delta0_valid = valid;
  r.n0 = 400;
  r.effective_n = 900;
  r.rho_lz = 1.0 / k;
  r.rho_ppm = 0.5 / k;
  r.overall_error = p0;
  return r;
}

}  // namespace

TEST(RunOnce, MatchedOrderReachesBayesRate) {
  EXPECT_NEAR(run_once(config(1, 1, 100000, 10000, 3)).overall_error, 0.3, 0.02);
}

TEST(RunOnce, UnderfittingLearnerGuesses) {
  EXPECT_NEAR(run_once(config(5, 3, 10000, 1000, 3)).overall_error, 0.5, 0.03);
}

TEST(RunOnce, Deterministic) {
  const auto cfg = config(5, 6, 2000, 1000, 17);
  EXPECT_EQ(run_once(cfg), run_once(cfg));
  EXPECT_NE(run_once(cfg, 0), run_once(cfg, 1));
}

TEST(RunOnce, RecordInvariants) {
  for (int k = 1; k <= 8; ++k) {
    const auto r = run_once(config(5, k, 500, 400, 100 + k));
    EXPECT_GE(r.p0_hat, 0.0);
    EXPECT_LE(r.p0_hat, 1.0);
    EXPECT_LE(r.n0, r.effective_n);
    EXPECT_EQ(r.effective_n, 400u - k);
    EXPECT_GE(r.delta0_bits, 0.0);
    EXPECT_EQ(r.delta0_valid, r.n0 >= 4);
    EXPECT_DOUBLE_EQ(r.rho_lz * (1u << k), std::round(r.rho_lz * (1u << k)));
    EXPECT_GT(r.l0_lz_bytes, 0u);
    EXPECT_GT(r.l0_ppm_bytes, 0u);
  }
}

TEST(RunOnce, ValidationNamesTheField) {
  auto cfg = config(5, 0, 100, 100, 1);
  try {
    cfg.validate();
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find('k'), std::string::npos);
  }
  EXPECT_THROW(config(5, 5, 0, 100, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(5, 5, 100, 5, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(0, 5, 100, 100, 1).validate(), std::invalid_argument);
}

TEST(Sweep, Cardinalities) {
  EXPECT_EQ(SweepSpec::desk_scale(5).run_count(), 300u);
  EXPECT_EQ(SweepSpec::paper_scale(5).run_count(), 10000u);
  auto spec = small_spec();
  spec.repeats = 0;
  EXPECT_TRUE(sweep(spec).empty());
}

TEST(Sweep, SortedAndIndependentOfWorkerCount) {
  auto spec = small_spec();
  const auto serial = sweep(spec);
  spec.workers = 4;
  std::size_t streamed = 0;
  const auto parallel = sweep(spec, [&](const RunRecord&) { ++streamed; });
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(streamed, spec.run_count());
  ASSERT_EQ(serial.size(), 8u);
  EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.k, a.m, a.repeat) < std::tie(b.k, b.m, b.repeat);
  }));
}

TEST(Sweep, SeedsAreDistinctPerRun) {
  std::set<std::uint64_t> seeds;
  for (const auto& r : sweep(small_spec())) seeds.insert(r.seed);
  EXPECT_EQ(seeds.size(), 8u);
  EXPECT_EQ(run_seed(RngSeed{1}, 3, 100, 0), run_seed(RngSeed{1}, 3, 100, 0));
}

TEST(RecordsCsv, RoundTripIsLossless) {
  fixtures::TempDir dir;
  const auto records = sweep(small_spec());
  write_records_csv(dir / "r.csv", records);
  EXPECT_EQ(read_records_csv(dir / "r.csv"), records);
}

TEST(RecordsCsv, EmptyListIsHeaderOnly) {
  std::ostringstream out;
  write_records_csv(out, {});
  EXPECT_EQ(out.str(), std::string(kRecordsHeader) + "\n");
  std::istringstream in(out.str());
  EXPECT_TRUE(read_records_csv(in).empty());
}

TEST(RecordsCsv, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(RecordsCsv, WrongColumnCountNamesTheLine) {
  std::istringstream in(std::string(kRecordsHeader) + "\n" + format_record(record(1, 1, 0.5, 10, 0.1)) + "\n1,2,3\n");
  try {
    read_records_csv(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(RecordsCsv, RejectsBadHeaderAndMissingFile) {
  std::istringstream in("a,b\n");
  EXPECT_THROW(read_records_csv(in), ParseError);
  EXPECT_THROW(read_records_csv(std::filesystem::path("/nonexistent/records.csv")), std::runtime_error);
}

TEST(Regression, ExactQuadratic) {
  std::vector<Point2> pts;
  for (double x : {-2.0, -0.5, 0.0, 0.3, 1.0, 4.0}) pts.push_back({x, 2 * x * x - x + 1});
  const auto fit = regress_quadratic(pts);
  EXPECT_NEAR(fit.a, 2.0, 1e-9);
  EXPECT_NEAR(fit.b, -1.0, 1e-9);
  EXPECT_NEAR(fit.c, 1.0, 1e-9);
  EXPECT_NEAR(fit(3.0), 16.0, 1e-9);
}

TEST(Regression, ThreeCollinearPointsHaveNoCurvature) {
  const std::vector<Point2> pts{{0, 1}, {1, 3}, {2, 5}};
  EXPECT_NEAR(regress_quadratic(pts).a, 0.0, 1e-9);
}

TEST(Regression, RankDeficientIsAnError) {
  EXPECT_THROW(regress_quadratic(std::vector<Point2>{{1, 1}, {1, 2}, {1, 3}}), UndefinedStatisticError);
  EXPECT_THROW(regress_quadratic(std::vector<Point2>{{1, 1}, {2, 2}}), UndefinedStatisticError);
  EXPECT_THROW(regress_quadratic(std::vector<Point2>{{1, 1}, {2, 2}, {1, 5}, {2, 0}}), UndefinedStatisticError);
}

TEST(Regression, LargeOffsetsStayAccurate) {
  std::vector<Point2> pts;
  for (int i = 0; i < 50; ++i) {
    const double x = 1000.0 + i * 0.01;
    pts.push_back({x, -3 * x * x + 5 * x + 7});
  }
  const auto fit = regress_quadratic(pts);
  EXPECT_NEAR(fit.a, -3.0, 1e-4);
}

TEST(Surface, SinglePointGivesSingleAdmissibleCell) {
  const std::vector<SurfacePoint> pts(12, SurfacePoint{0.2, 100.0, 0.31});
  const auto grid = interpolate_surface(pts);
  EXPECT_EQ(grid.admissible_count(), 1u);
  EXPECT_EQ(grid.x_edges.size(), grid.nx + 1);
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix)
      if (auto v = grid.at(ix, iy)) {
        EXPECT_DOUBLE_EQ(*v, 0.31);
      }
}

TEST(Surface, ValuesOnlyWhereAdmissibleAndWithinSampleRange) {
  std::vector<SurfacePoint> pts;
  Rng rng(RngSeed{5});
  for (int i = 0; i < 200; ++i) pts.push_back({rng.uniform(), 100 + 50 * rng.uniform() * rng.uniform(), rng.uniform()});
  pts.push_back({5.0, 400.0, 0.5});  // an outlier leaves empty space in between
  const auto grid = interpolate_surface(pts);
  EXPECT_EQ(grid.nx, 40u);
  EXPECT_GT(grid.admissible_count(), 0u);
  EXPECT_LT(grid.admissible_count(), grid.nx * grid.ny);
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (!grid.admissible[i]) {
      EXPECT_TRUE(std::isnan(grid.values[i]));
    } else {
      EXPECT_GE(grid.values[i], 0.0);
      EXPECT_LE(grid.values[i], 1.0);
    }
  }
}

TEST(Surface, BuildNeedsTenValidRecords) {
  std::vector<RunRecord> records;
  for (int i = 0; i < 9; ++i) records.push_back(record(5, 100, 0.3, 100 + i, 0.01 * i));
  records.push_back(record(5, 100, 0.3, 90, 0.0, false));
  EXPECT_THROW(build_surface(records, SurfaceValue::kP0, CompressorKind::kLz), InsufficientDataError);
  records.push_back(record(5, 100, 0.4, 120, 0.02));
  const auto grid = build_surface(records, SurfaceValue::kP0, CompressorKind::kLz);
  EXPECT_DOUBLE_EQ(grid.x_edges.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid.y_edges.front(), 100.0);
  EXPECT_DOUBLE_EQ(grid.y_edges.back(), 120.0);
}

TEST(Surface, CsvMatrixAndEdgeSidecars) {
  fixtures::TempDir dir;
  std::vector<SurfacePoint> pts{{0, 0, 1}, {1, 1, 2}, {0.5, 0.2, 3}};
  const auto grid = interpolate_surface(pts, {4, 3, 2.0, 2.0});
  write_surface_csv(grid, dir / "s");
  std::ifstream in(dir / "s.csv");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line); ++rows) EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
  EXPECT_EQ(rows, 3u);
  EXPECT_TRUE(std::filesystem::exists(dir / "s_x_edges.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "s_y_edges.csv"));
}

TEST(Analysis, SingleRecordGroupHasZeroStd) {
  const std::vector<RunRecord> records{record(3, 100, 0.5, 120, 0.05)};
  const auto by_k = aggregate_by_k(records);
  ASSERT_EQ(by_k.size(), 1u);
  EXPECT_DOUBLE_EQ(by_k[0].l0_lz.stddev, 0.0);
  EXPECT_DOUBLE_EQ(by_k[0].delta0.stddev, 0.0);
  EXPECT_THROW(aggregate_by_k(std::vector<RunRecord>{}), InsufficientDataError);
}

TEST(Analysis, InvalidRunsExcludedFromXiZeroStatistics) {
  const std::vector<RunRecord> records{record(4, 100, 0.5, 120, 0.05), record(4, 100, 0.0, 20, 0.0, false)};
  const auto agg = aggregate_by_k(records).front();
  EXPECT_EQ(agg.runs, 2u);
  EXPECT_EQ(agg.valid_runs, 1u);
  EXPECT_DOUBLE_EQ(agg.l0_lz.mean, 120.0);
  EXPECT_EQ(agg.overall_error.count, 2u);
}

TEST(Analysis, TrendReport) {
  std::vector<RunRecord> records;
  for (int k = 1; k <= 5; ++k) records.push_back(record(k, 100, 0.4, 100, 0.01));
  records.push_back(record(5, 100, 0.4, 100, 0.01));
  records.back().rho_ppm = 0.5;  // k = 5 mean rises above k = 4
  const auto by_k = aggregate_by_k(records);
  const auto trend = rho_trend(by_k, CompressorKind::kPpm, 0.02, 2);
  EXPECT_FALSE(trend.non_increasing);
  EXPECT_EQ(trend.violating_k, std::vector<int>{5});
  EXPECT_EQ(trend.argmin_k, 4);
  EXPECT_TRUE(rho_trend(by_k, CompressorKind::kLz, 0.02, 2).non_increasing);
}

TEST(Analysis, ReportAndCsv) {
  fixtures::TempDir dir;
  const auto records = sweep(small_spec());
  const auto report = analyze(records, 5);
  EXPECT_EQ(report.runs, 8u);
  EXPECT_EQ(report.by_k.size(), 2u);
  EXPECT_EQ(report.cells.size(), 4u);
  write_analysis_csv(dir / "analysis.csv", report);
  std::ifstream in(dir / "analysis.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "metric,k,m,compressor,value");
}
