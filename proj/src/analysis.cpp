#include "bitscatter/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "bitscatter/complexity.hpp"
#include "bitscatter/errors.hpp"
#include "bitscatter/records_csv.hpp"

namespace bitscatter {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename F>
std::optional<double> guarded(F&& f) {
  try {
    return f();
  } catch (const UndefinedStatisticError&) {
    return std::nullopt;
  } catch (const InsufficientDataError&) {
    return std::nullopt;
  }
}

}  // namespace

Summary summarize(std::span<const double> xs) {
  if (xs.empty()) return {0, kNaN, kNaN};
  return {xs.size(), mean(xs), sample_stddev(xs)};
}

std::vector<KAggregate> aggregate_by_k(std::span<const RunRecord> records) {
  if (records.empty()) throw InsufficientDataError("aggregate_by_k: no records");
  std::map<int, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) groups[r.k].push_back(&r);

  std::vector<KAggregate> out;
  for (const auto& [k, group] : groups) {
    std::vector<double> rho_lz, rho_ppm, err, l0_lz, l0_ppm, delta0, p0;
    for (const RunRecord* r : group) {
      rho_lz.push_back(r->rho_lz);
      rho_ppm.push_back(r->rho_ppm);
      err.push_back(r->overall_error);
      if (!r->delta0_valid) continue;
      l0_lz.push_back(static_cast<double>(r->l0_lz_bytes));
      l0_ppm.push_back(static_cast<double>(r->l0_ppm_bytes));
      delta0.push_back(r->delta0_bits);
      p0.push_back(r->p0_hat);
    }
    KAggregate agg;
    agg.k = k;
    agg.runs = group.size();
    agg.valid_runs = delta0.size();
    agg.rho_lz = summarize(rho_lz);
    agg.rho_ppm = summarize(rho_ppm);
    agg.overall_error = summarize(err);
    agg.l0_lz = summarize(l0_lz);
    agg.l0_ppm = summarize(l0_ppm);
    agg.delta0 = summarize(delta0);
    agg.p0_hat = summarize(p0);
    out.push_back(agg);
  }
  return out;
}

TrendReport rho_trend(std::span<const KAggregate> by_k, CompressorKind kind, double slack, int k_from) {
  TrendReport report;
  double best = std::numeric_limits<double>::infinity();
  const KAggregate* prev = nullptr;
  for (const auto& agg : by_k) {
    if (agg.k < k_from) continue;
    const double m = agg.rho(kind).mean;
    if (m < best) {
      best = m;
      report.argmin_k = agg.k;
    }
    if (prev != nullptr) {
      const double rise = m - prev->rho(kind).mean;
      report.max_rise = std::max(report.max_rise, rise);
      if (rise > slack) {
        report.non_increasing = false;
        report.violating_k.push_back(agg.k);
      }
    }
    prev = &agg;
  }
  return report;
}

std::vector<CellMean> cell_means(std::span<const RunRecord> records) {
  std::map<std::pair<int, std::size_t>, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) groups[{r.k, r.m}].push_back(&r);
  std::vector<CellMean> out;
  for (const auto& [key, group] : groups) {
    CellMean cell;
    cell.k = key.first;
    cell.m = key.second;
    cell.runs = group.size();
    double p0 = 0.0, err = 0.0, rl = 0.0, rp = 0.0;
    for (const RunRecord* r : group) {
      err += r->overall_error;
      rl += r->rho_lz;
      rp += r->rho_ppm;
      if (r->delta0_valid) {
        p0 += r->p0_hat;
        ++cell.valid_runs;
      }
    }
    const double n = static_cast<double>(group.size());
    cell.overall_error = err / n;
    cell.rho_lz = rl / n;
    cell.rho_ppm = rp / n;
    cell.p0_hat = cell.valid_runs > 0 ? p0 / static_cast<double>(cell.valid_runs) : kNaN;
    out.push_back(cell);
  }
  return out;
}

AnalysisReport analyze(std::span<const RunRecord> records, int k_star) {
  AnalysisReport report;
  report.k_star = k_star;
  report.runs = records.size();
  report.by_k = aggregate_by_k(records);
  report.cells = cell_means(records);

  std::vector<const RunRecord*> valid;
  for (const auto& r : records)
    if (r.delta0_valid) valid.push_back(&r);
  report.valid_runs = valid.size();

  std::vector<double> bound, delta0;
  for (const RunRecord* r : valid) {
    bound.push_back(entropy_bound(r->n0, r->p0_hat));
    delta0.push_back(r->delta0_bits);
  }
  for (CompressorKind kind : kAllCompressors) {
    std::vector<double> l0_bits, l0_bytes;
    for (const RunRecord* r : valid) {
      l0_bits.push_back(static_cast<double>(r->l0_bits(kind)));
      l0_bytes.push_back(static_cast<double>(r->l0_bytes(kind)));
    }
    const std::size_t i = index_of(kind);
    report.pearson_l0_entropy[i] = guarded([&] { return pearson(l0_bits, bound); });
    report.pearson_l0_delta0[i] = guarded([&] { return pearson(l0_bytes, delta0); });
    try {
      report.l0_moments[i] = skewness_kurtosis(l0_bytes);
    } catch (const std::runtime_error&) {
      report.l0_moments[i].reset();
    }
    report.l0_mean[i] = l0_bytes.empty() ? kNaN : mean(l0_bytes);
  }

  for (const auto& agg : report.by_k) {
    std::vector<Point2> points;
    for (const RunRecord* r : valid)
      if (r->k == agg.k) points.push_back({r->p0_hat, static_cast<double>(r->l0_lz_bytes)});
    std::optional<QuadraticFit> fit;
    try {
      fit = regress_quadratic(points);
    } catch (const UndefinedStatisticError&) {
    }
    report.l0_vs_p0_fits.emplace_back(agg.k, fit);
  }

  std::vector<double> cool, hot;
  for (const RunRecord* r : valid) {
    if (r->p0_hat < ClusterSummary::kCoolBelow) {
      cool.push_back(static_cast<double>(r->l0_lz_bytes));
    } else if (r->p0_hat > ClusterSummary::kHotAbove) {
      hot.push_back(static_cast<double>(r->l0_lz_bytes));
    } else {
      ++report.clusters.gap_runs;
    }
  }
  report.clusters.cool_runs = cool.size();
  report.clusters.hot_runs = hot.size();
  report.clusters.cool_l0_lz = summarize(cool);
  report.clusters.hot_l0_lz = summarize(hot);

  report.rho_ppm_trend = rho_trend(report.by_k, CompressorKind::kPpm, 0.02, 2);
  report.rho_lz_trend = rho_trend(report.by_k, CompressorKind::kLz, 0.02, 2);
  return report;
}

void write_analysis_csv(const std::filesystem::path& path, const AnalysisReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "metric,k,m,compressor,value\n";
  auto row = [&](const std::string& metric, const std::string& k, const std::string& m, const std::string& comp,
                 double value) { out << metric << ',' << k << ',' << m << ',' << comp << ',' << format_double(value) << '\n'; };
  auto opt_row = [&](const std::string& metric, const std::string& comp, const std::optional<double>& v) {
    if (v) row(metric, "", "", comp, *v);
  };

  row("runs", "", "", "", static_cast<double>(report.runs));
  row("valid_runs", "", "", "", static_cast<double>(report.valid_runs));
  row("k_star", "", "", "", report.k_star);
  for (CompressorKind kind : kAllCompressors) {
    const std::string c(to_string(kind));
    const std::size_t i = index_of(kind);
    opt_row("pearson_l0_entropy_bound", c, report.pearson_l0_entropy[i]);
    opt_row("pearson_l0_delta0", c, report.pearson_l0_delta0[i]);
    row("l0_mean_bytes", "", "", c, report.l0_mean[i]);
    if (report.l0_moments[i]) {
      row("l0_skewness", "", "", c, report.l0_moments[i]->skewness);
      row("l0_excess_kurtosis", "", "", c, report.l0_moments[i]->excess_kurtosis);
    }
  }
  for (const auto& agg : report.by_k) {
    const std::string k = std::to_string(agg.k);
    row("runs", k, "", "", static_cast<double>(agg.runs));
    row("valid_runs", k, "", "", static_cast<double>(agg.valid_runs));
    row("overall_error_mean", k, "", "", agg.overall_error.mean);
    row("overall_error_std", k, "", "", agg.overall_error.stddev);
    row("delta0_mean", k, "", "", agg.delta0.mean);
    row("delta0_std", k, "", "", agg.delta0.stddev);
    row("p0_hat_mean", k, "", "", agg.p0_hat.mean);
    row("p0_hat_std", k, "", "", agg.p0_hat.stddev);
    for (CompressorKind kind : kAllCompressors) {
      const std::string c(to_string(kind));
      row("rho_mean", k, "", c, agg.rho(kind).mean);
      row("rho_std", k, "", c, agg.rho(kind).stddev);
      row("l0_mean", k, "", c, agg.l0(kind).mean);
      row("l0_std", k, "", c, agg.l0(kind).stddev);
    }
  }
  for (const auto& [k, fit] : report.l0_vs_p0_fits) {
    if (!fit) continue;
    row("l0_vs_p0_fit_a", std::to_string(k), "", "lz", fit->a);
    row("l0_vs_p0_fit_b", std::to_string(k), "", "lz", fit->b);
    row("l0_vs_p0_fit_c", std::to_string(k), "", "lz", fit->c);
  }
  for (const auto& cell : report.cells) {
    const std::string k = std::to_string(cell.k), m = std::to_string(cell.m);
    row("cell_p0_hat_mean", k, m, "", cell.p0_hat);
    row("cell_overall_error_mean", k, m, "", cell.overall_error);
    row("cell_rho_mean", k, m, "lz", cell.rho_lz);
    row("cell_rho_mean", k, m, "ppm", cell.rho_ppm);
  }
  row("cool_runs", "", "", "", static_cast<double>(report.clusters.cool_runs));
  row("hot_runs", "", "", "", static_cast<double>(report.clusters.hot_runs));
  row("gap_runs", "", "", "", static_cast<double>(report.clusters.gap_runs));
  row("cool_l0_std", "", "", "lz", report.clusters.cool_l0_lz.stddev);
  row("hot_l0_std", "", "", "lz", report.clusters.hot_l0_lz.stddev);
  row("rho_argmin_k", "", "", "ppm", report.rho_ppm_trend.argmin_k);
  row("rho_argmin_k", "", "", "lz", report.rho_lz_trend.argmin_k);
  row("rho_max_rise", "", "", "ppm", report.rho_ppm_trend.max_rise);
}

}  // namespace bitscatter
