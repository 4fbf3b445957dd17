#include "bitscatter/figures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "bitscatter/analysis.hpp"
#include "bitscatter/contour.hpp"
#include "bitscatter/errors.hpp"
#include "bitscatter/records_csv.hpp"
#include "bitscatter/surface.hpp"
#include "bitscatter/svg.hpp"

namespace bitscatter {
namespace {

namespace fs = std::filesystem;
using svg::Plot;

constexpr std::array<Figure, 12> kFigures = {
    Figure::kLearningCurves, Figure::kRhoVsK,      Figure::kErrorRhoM,    Figure::kL0VsRho,
    Figure::kDeltaVsRho,     Figure::kRegressions, Figure::kL0Entropy,    Figure::kL0Delta,
    Figure::kHistogramL0,    Figure::kErrorSurface, Figure::kRhoSurface,  Figure::kRhoRates};

constexpr std::array<std::string_view, 12> kNames = {
    "learning-curves", "rho-vs-k",  "error-rho-m",  "l0-vs-rho",     "delta-vs-rho",  "regressions",
    "l0-entropy",      "l0-delta",  "histogram-l0", "error-surface", "rho-surface",   "rho-rates"};

std::ofstream open_csv(const fs::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::string fmt(double v) { return format_double(v); }

std::vector<const RunRecord*> valid_records(std::span<const RunRecord> records) {
  std::vector<const RunRecord*> out;
  for (const auto& r : records)
    if (r.delta0_valid) out.push_back(&r);
  return out;
}

// Cell edges around sorted centres.
std::vector<double> edges_from_centres(const std::vector<double>& c) {
  std::vector<double> e(c.size() + 1);
  if (c.size() == 1) return {c[0] - 0.5, c[0] + 0.5};
  for (std::size_t i = 1; i < c.size(); ++i) e[i] = 0.5 * (c[i - 1] + c[i]);
  e.front() = c.front() - (e[1] - c.front());
  e.back() = c.back() + (c.back() - e[c.size() - 1]);
  return e;
}

void draw_contours(Plot& plot, const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& values, const std::vector<double>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto segs = contour_segments(xs, ys, values, levels[i]);
    plot.canvas().comment("contour level " + fmt(levels[i]));
    for (const auto& s : segs)
      plot.canvas().line(plot.px(s.a.x), plot.py(s.a.y), plot.px(s.b.x), plot.py(s.b.y), "black", 1.2);
  }
}

void colour_scale_note(Plot& plot, double lo, double hi, std::string_view what) {
  plot.note(std::string(what) + " colour scale: blue " + svg::tick_label(lo) + " to red " + svg::tick_label(hi));
}

fs::path svg_path(const fs::path& dir, Figure f) { return dir / (std::string(figure_name(f)) + ".svg"); }
fs::path csv_path(const fs::path& dir, Figure f, std::string_view suffix = {}) {
  return dir / (std::string(figure_name(f)) + std::string(suffix) + ".csv");
}

std::vector<fs::path> learning_curves(std::span<const RunRecord> records, const fs::path& dir) {
  const auto cells = cell_means(records);
  std::set<int> ks;
  std::set<std::size_t> ms;
  for (const auto& c : cells) {
    ks.insert(c.k);
    ms.insert(c.m);
  }
  std::vector<double> xs, ys;
  for (std::size_t m : ms) xs.push_back(std::log10(static_cast<double>(m)));
  for (int k : ks) ys.push_back(k);
  std::vector<double> values(xs.size() * ys.size(), std::numeric_limits<double>::quiet_NaN());
  const std::vector<std::size_t> m_list(ms.begin(), ms.end());
  const std::vector<int> k_list(ks.begin(), ks.end());
  for (const auto& c : cells) {
    const auto ix = std::lower_bound(m_list.begin(), m_list.end(), c.m) - m_list.begin();
    const auto iy = std::lower_bound(k_list.begin(), k_list.end(), c.k) - k_list.begin();
    values[iy * xs.size() + ix] = c.overall_error;
  }

  const auto xe = edges_from_centres(xs), ye = edges_from_centres(ys);
  Plot plot("Mean prediction error over learner order and training length", "log10 m (training length)",
            "learner order k", {xe.front(), xe.back()}, {ye.front(), ye.back()});
  const double lo = 0.25, hi = 0.55;
  for (std::size_t iy = 0; iy < ys.size(); ++iy)
    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
      const double v = values[iy * xs.size() + ix];
      if (std::isnan(v)) continue;
      const double x0 = plot.px(xe[ix]), x1 = plot.px(xe[ix + 1]);
      const double y0 = plot.py(ye[iy + 1]), y1 = plot.py(ye[iy]);
      plot.canvas().rect(x0, y0, x1 - x0, y1 - y0, svg::ramp((v - lo) / (hi - lo)));
    }
  draw_contours(plot, xs, ys, values, {0.32, 0.35, 0.40, 0.45});
  colour_scale_note(plot, lo, hi, "error");
  plot.note("contours at 0.32, 0.35, 0.40, 0.45");
  plot.save(svg_path(dir, Figure::kLearningCurves));

  auto out = open_csv(csv_path(dir, Figure::kLearningCurves));
  out << "k,m,runs,mean_overall_error,mean_p0_hat\n";
  for (const auto& c : cells) out << c.k << ',' << c.m << ',' << c.runs << ',' << fmt(c.overall_error) << ',' << fmt(c.p0_hat) << '\n';
  return {svg_path(dir, Figure::kLearningCurves), csv_path(dir, Figure::kLearningCurves)};
}

std::vector<fs::path> rho_vs_k(std::span<const RunRecord> records, const fs::path& dir) {
  const auto by_k = aggregate_by_k(records);
  std::vector<double> ks, all;
  for (const auto& a : by_k) {
    ks.push_back(a.k);
    for (CompressorKind kind : kAllCompressors) {
      all.push_back(a.rho(kind).mean + a.rho(kind).stddev);
      all.push_back(std::max(0.0, a.rho(kind).mean - a.rho(kind).stddev));
    }
  }
  all.push_back(0.0);
  Plot plot("Mean sysRatio against learner order", "learner order k", "sysRatio rho", svg::padded_range(ks),
            svg::padded_range(all));
  std::size_t colour = 0;
  for (CompressorKind kind : kAllCompressors) {
    std::vector<double> mean, lo, hi;
    for (const auto& a : by_k) {
      mean.push_back(a.rho(kind).mean);
      lo.push_back(a.rho(kind).mean - a.rho(kind).stddev);
      hi.push_back(a.rho(kind).mean + a.rho(kind).stddev);
    }
    plot.band(ks, lo, hi, svg::palette(colour));
    plot.series(ks, mean, svg::palette(colour), "mean rho (" + std::string(to_string(kind)) + ")");
    const auto trend = rho_trend(by_k, kind, 0.02, 2);
    plot.note(std::string(to_string(kind)) + ": " + (trend.non_increasing ? "non-increasing" : "not monotone") +
              " from k=2, minimum at k=" + std::to_string(trend.argmin_k));
    ++colour;
  }
  plot.hline(1.0, "gray");
  plot.save(svg_path(dir, Figure::kRhoVsK));

  auto out = open_csv(csv_path(dir, Figure::kRhoVsK));
  out << "k,compressor,runs,mean_rho,std_rho\n";
  for (const auto& a : by_k)
    for (CompressorKind kind : kAllCompressors)
      out << a.k << ',' << to_string(kind) << ',' << a.runs << ',' << fmt(a.rho(kind).mean) << ','
          << fmt(a.rho(kind).stddev) << '\n';
  return {svg_path(dir, Figure::kRhoVsK), csv_path(dir, Figure::kRhoVsK)};
}

std::vector<fs::path> error_rho_m(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind) {
  const auto cells = cell_means(records);
  std::map<std::size_t, std::vector<const CellMean*>> by_m;
  std::vector<double> xs, ys;
  for (const auto& c : cells) {
    by_m[c.m].push_back(&c);
    xs.push_back(kind == CompressorKind::kLz ? c.rho_lz : c.rho_ppm);
    ys.push_back(c.overall_error);
  }
  Plot plot("Mean error against sysRatio per training length",
            "mean sysRatio rho (" + std::string(to_string(kind)) + ")", "mean overall error", svg::padded_range(xs),
            svg::padded_range(ys));
  std::size_t colour = 0;
  for (const auto& [m, group] : by_m) {
    std::vector<double> x, y;
    for (const CellMean* c : group) {
      x.push_back(kind == CompressorKind::kLz ? c->rho_lz : c->rho_ppm);
      y.push_back(c->overall_error);
    }
    plot.series(x, y, svg::palette(colour++), "m = " + std::to_string(m), 1.2);
  }
  plot.hline(0.3, "gray");
  plot.note("dashed line: Bayes error 0.3");
  plot.save(svg_path(dir, Figure::kErrorRhoM));

  auto out = open_csv(csv_path(dir, Figure::kErrorRhoM));
  out << "k,m,compressor,mean_rho,mean_overall_error\n";
  for (const auto& c : cells)
    out << c.k << ',' << c.m << ',' << to_string(kind) << ',' << fmt(kind == CompressorKind::kLz ? c.rho_lz : c.rho_ppm)
        << ',' << fmt(c.overall_error) << '\n';
  return {svg_path(dir, Figure::kErrorRhoM), csv_path(dir, Figure::kErrorRhoM)};
}

// Envelope of a xi_0 statistic against per-k mean rho.
std::vector<fs::path> envelope(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind,
                               Figure figure) {
  const bool is_l0 = figure == Figure::kL0VsRho;
  const auto by_k = aggregate_by_k(records);
  const auto valid = valid_records(records);
  auto stat = [&](const RunRecord& r) {
    return is_l0 ? static_cast<double>(r.l0_bytes(kind)) : r.delta0_bits;
  };
  auto summary = [&](const KAggregate& a) -> const Summary& { return is_l0 ? a.l0(kind) : a.delta0; };

  std::vector<double> sx, sy;
  std::map<int, double> rho_of_k;
  for (const auto& a : by_k) rho_of_k[a.k] = a.rho(kind).mean;
  for (const RunRecord* r : valid) {
    sx.push_back(rho_of_k[r->k]);
    sy.push_back(stat(*r));
  }
  std::vector<double> x, mean, lo, hi;
  for (auto it = by_k.rbegin(); it != by_k.rend(); ++it) {  // ascending rho
    const Summary& s = summary(*it);
    if (s.count == 0) continue;
    x.push_back(it->rho(kind).mean);
    mean.push_back(s.mean);
    lo.push_back(s.mean - s.stddev);
    hi.push_back(s.mean + s.stddev);
  }
  std::vector<double> yr = sy;
  yr.insert(yr.end(), lo.begin(), lo.end());
  yr.insert(yr.end(), hi.begin(), hi.end());
  const std::string what = is_l0 ? "l0 (bytes, " + std::string(to_string(kind)) + ")" : "Delta0 (bits)";
  Plot plot(what + " against sysRatio", "per-k mean sysRatio rho (" + std::string(to_string(kind)) + ")", what,
            svg::padded_range(sx), svg::padded_range(yr));
  plot.scatter(sx, sy, "#7f7f7f", 2.0, 0.35);
  plot.band(x, lo, hi, svg::palette(0));
  plot.series(x, mean, svg::palette(0), "mean");
  plot.series(x, hi, svg::palette(1), "mean + std", 1.0);
  plot.series(x, lo, svg::palette(2), "mean - std", 1.0);
  plot.save(svg_path(dir, figure));

  auto out = open_csv(csv_path(dir, figure));
  out << "k,mean_rho,valid_runs,mean,std,lower,upper\n";
  for (const auto& a : by_k) {
    const Summary& s = summary(a);
    out << a.k << ',' << fmt(a.rho(kind).mean) << ',' << s.count << ',' << fmt(s.mean) << ',' << fmt(s.stddev) << ','
        << fmt(s.mean - s.stddev) << ',' << fmt(s.mean + s.stddev) << '\n';
  }
  return {svg_path(dir, figure), csv_path(dir, figure)};
}

std::vector<fs::path> regressions(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind,
                                  int k_star) {
  const auto valid = valid_records(records);
  int k_max = 0;
  for (const RunRecord* r : valid) k_max = std::max(k_max, r->k);
  std::vector<int> chosen{k_star + 1};
  if (k_max > k_star + 1) chosen.push_back(k_max);

  std::vector<double> px, py;
  for (const RunRecord* r : valid) {
    px.push_back(r->p0_hat);
    py.push_back(static_cast<double>(r->l0_bytes(kind)));
  }
  Plot plot("Quadratic regression of l0 on p0", "p0 (empirical)", "l0 (bytes, " + std::string(to_string(kind)) + ")",
            svg::padded_range(px), svg::padded_range(py));
  auto coef = open_csv(csv_path(dir, Figure::kRegressions));
  coef << "k,points,a,b,c\n";
  auto pts_out = open_csv(csv_path(dir, Figure::kRegressions, "_points"));
  pts_out << "k,p0_hat,l0_bytes\n";

  std::size_t colour = 0;
  for (int k : chosen) {
    std::vector<Point2> pts;
    std::vector<double> x, y;
    for (const RunRecord* r : valid)
      if (r->k == k) {
        pts.push_back({r->p0_hat, static_cast<double>(r->l0_bytes(kind))});
        x.push_back(pts.back().x);
        y.push_back(pts.back().y);
        pts_out << k << ',' << fmt(pts.back().x) << ',' << fmt(pts.back().y) << '\n';
      }
    const auto c = svg::palette(colour++);
    plot.scatter(x, y, c, 3.0, 0.6);
    try {
      const QuadraticFit fit = regress_quadratic(pts);
      const auto [xmin, xmax] = std::minmax_element(x.begin(), x.end());
      std::vector<double> cx, cy;
      for (int i = 0; i <= 50; ++i) {
        const double t = *xmin + (*xmax - *xmin) * i / 50.0;
        cx.push_back(t);
        cy.push_back(fit(t));
      }
      plot.series(cx, cy, c, "k = " + std::to_string(k), 2.0);
      plot.note("k=" + std::to_string(k) + ": " + svg::tick_label(fit.a) + " x^2 + " + svg::tick_label(fit.b) +
                " x + " + svg::tick_label(fit.c));
      coef << k << ',' << pts.size() << ',' << fmt(fit.a) << ',' << fmt(fit.b) << ',' << fmt(fit.c) << '\n';
    } catch (const UndefinedStatisticError&) {
      plot.note("k=" + std::to_string(k) + ": fit undefined");
      coef << k << ',' << pts.size() << ",,,\n";
    }
  }
  plot.save(svg_path(dir, Figure::kRegressions));
  return {svg_path(dir, Figure::kRegressions), csv_path(dir, Figure::kRegressions),
          csv_path(dir, Figure::kRegressions, "_points")};
}

std::vector<fs::path> l0_scatter(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind,
                                 Figure figure) {
  const bool entropy = figure == Figure::kL0Entropy;
  const auto valid = valid_records(records);
  std::vector<double> x, y;
  for (const RunRecord* r : valid) {
    x.push_back(entropy ? entropy_bound(r->n0, r->p0_hat) : r->delta0_bits);
    y.push_back(entropy ? static_cast<double>(r->l0_bits(kind)) : static_cast<double>(r->l0_bytes(kind)));
  }
  const std::string comp(to_string(kind));
  Plot plot(entropy ? "l0 against the entropy bound" : "l0 against Delta0",
            entropy ? "n0 H(p0) + 0.5 log2 n0 (bits)" : "Delta0 (bits)",
            entropy ? "l0 (bits, " + comp + ")" : "l0 (bytes, " + comp + ")", svg::padded_range(x),
            svg::padded_range(y));
  plot.scatter(x, y, svg::palette(0));
  try {
    plot.note("Pearson r = " + svg::tick_label(pearson(x, y)) + " over " + std::to_string(x.size()) + " runs");
  } catch (const std::exception&) {
    plot.note("Pearson r undefined");
  }
  plot.save(svg_path(dir, figure));

  auto out = open_csv(csv_path(dir, figure));
  out << (entropy ? "k,m,repeat,entropy_bound_bits,l0_bits\n" : "k,m,repeat,delta0_bits,l0_bytes\n");
  for (std::size_t i = 0; i < valid.size(); ++i)
    out << valid[i]->k << ',' << valid[i]->m << ',' << valid[i]->repeat << ',' << fmt(x[i]) << ',' << fmt(y[i]) << '\n';
  return {svg_path(dir, figure), csv_path(dir, figure)};
}

std::vector<fs::path> histogram_l0(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind) {
  const auto valid = valid_records(records);
  if (valid.empty()) throw InsufficientDataError("histogram-l0: no runs with a valid Delta0");
  std::vector<double> xs;
  for (const RunRecord* r : valid) xs.push_back(static_cast<double>(r->l0_bytes(kind)));
  const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
  const std::size_t bins = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(std::sqrt(xs.size()))), 1, 40);
  const double lo = *mn, width = std::max(1.0, (*mx - *mn) / static_cast<double>(bins));
  std::vector<std::size_t> counts(bins, 0);
  for (double v : xs) counts[std::min(bins - 1, static_cast<std::size_t>((v - lo) / width))]++;
  const double top = static_cast<double>(*std::max_element(counts.begin(), counts.end()));

  Plot plot("Distribution of l0", "l0 (bytes, " + std::string(to_string(kind)) + ")", "runs",
            {lo, lo + width * static_cast<double>(bins)}, {0.0, top * 1.15 + 1});
  for (std::size_t b = 0; b < bins; ++b) {
    const double x0 = plot.px(lo + width * b), x1 = plot.px(lo + width * (b + 1));
    const double y0 = plot.py(static_cast<double>(counts[b])), y1 = plot.py(0.0);
    plot.canvas().rect(x0, y0, x1 - x0, y1 - y0, svg::palette(0), "white");
  }
  const double mu = mean(xs);
  plot.canvas().line(plot.px(mu), plot.py(0), plot.px(mu), plot.py(top * 1.15 + 1), "black", 1.0, "6,4");
  plot.note("mean l0 = " + svg::tick_label(mu) + " bytes (dashed)");
  try {
    const Moments mom = skewness_kurtosis(xs);
    plot.note("skewness = " + svg::tick_label(mom.skewness) + ", excess kurtosis = " + svg::tick_label(mom.excess_kurtosis));
    plot.note(mom.skewness > 0 ? "positive skew: heavier right tail" : "no right-heavy tail");
  } catch (const std::exception&) {
    plot.note("moments undefined");
  }
  plot.save(svg_path(dir, Figure::kHistogramL0));

  auto out = open_csv(csv_path(dir, Figure::kHistogramL0));
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < bins; ++b)
    out << fmt(lo + width * b) << ',' << fmt(lo + width * (b + 1)) << ',' << counts[b] << '\n';
  return {svg_path(dir, Figure::kHistogramL0), csv_path(dir, Figure::kHistogramL0)};
}

std::vector<fs::path> surface(std::span<const RunRecord> records, const fs::path& dir, CompressorKind kind,
                              Figure figure) {
  const bool p0 = figure == Figure::kErrorSurface;
  const SurfaceGrid grid = build_surface(records, p0 ? SurfaceValue::kP0 : SurfaceValue::kRho, kind);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < grid.values.size(); ++i)
    if (grid.admissible[i]) {
      lo = std::min(lo, grid.values[i]);
      hi = std::max(hi, grid.values[i]);
    }
  const std::string comp(to_string(kind));
  Plot plot(p0 ? "Error probability p0 over the Delta-l plane" : "sysRatio over the Delta-l plane", "Delta0 (bits)",
            "l0 (bytes, " + comp + ")", {grid.x_edges.front(), grid.x_edges.back()},
            {grid.y_edges.front(), grid.y_edges.back()});
  const double span = hi > lo ? hi - lo : 1.0;
  for (std::size_t iy = 0; iy < grid.ny; ++iy)
    for (std::size_t ix = 0; ix < grid.nx; ++ix) {
      const auto v = grid.at(ix, iy);
      if (!v) continue;  // inadmissible cells stay unpainted
      const double x0 = plot.px(grid.x_edges[ix]), x1 = plot.px(grid.x_edges[ix + 1]);
      const double y0 = plot.py(grid.y_edges[iy + 1]), y1 = plot.py(grid.y_edges[iy]);
      plot.canvas().rect(x0, y0, x1 - x0, y1 - y0, svg::ramp((*v - lo) / span));
    }
  std::vector<double> xc, yc;
  for (std::size_t ix = 0; ix < grid.nx; ++ix) xc.push_back(grid.x_center(ix));
  for (std::size_t iy = 0; iy < grid.ny; ++iy) yc.push_back(grid.y_center(iy));
  std::vector<double> levels;
  for (int i = 1; i <= 4; ++i) levels.push_back(lo + span * i / 5.0);
  draw_contours(plot, xc, yc, grid.values, levels);

  std::vector<double> l0;
  for (const RunRecord* r : valid_records(records)) l0.push_back(static_cast<double>(r->l0_bytes(kind)));
  const double mu0 = mean(l0);
  plot.hline(mu0, "black");
  plot.note("dashed line: mean l0 = " + svg::tick_label(mu0) + " bytes");
  colour_scale_note(plot, lo, hi, p0 ? "p0" : "rho");
  plot.note("admissible cells: " + std::to_string(grid.admissible_count()) + " of " +
            std::to_string(grid.nx * grid.ny) + " (unpainted cells are unreachable)");
  plot.save(svg_path(dir, figure));

  const fs::path stem = dir / std::string(figure_name(figure));
  write_surface_csv(grid, stem);
  return {svg_path(dir, figure), csv_path(dir, figure), csv_path(dir, figure, "_x_edges"),
          csv_path(dir, figure, "_y_edges")};
}

std::vector<fs::path> rho_rates(std::span<const RunRecord> records, const fs::path& dir) {
  const auto by_k = aggregate_by_k(records);
  std::vector<double> ks, all{0.0};
  std::map<CompressorKind, std::vector<double>> rates;
  for (std::size_t i = 1; i < by_k.size(); ++i) {
    ks.push_back(by_k[i].k);
    for (CompressorKind kind : kAllCompressors) {
      const double d = (by_k[i].rho(kind).mean - by_k[i - 1].rho(kind).mean) / (by_k[i].k - by_k[i - 1].k);
      rates[kind].push_back(d);
      all.push_back(d);
    }
  }
  Plot plot("Rate of change of mean sysRatio", "learner order k", "d rho / d k", svg::padded_range(ks),
            svg::padded_range(all));
  std::size_t colour = 0;
  for (CompressorKind kind : kAllCompressors)
    plot.series(ks, rates[kind], svg::palette(colour++), std::string(to_string(kind)));
  plot.hline(0.0, "gray");
  plot.save(svg_path(dir, Figure::kRhoRates));

  auto out = open_csv(csv_path(dir, Figure::kRhoRates));
  out << "k,compressor,drho_dk\n";
  for (CompressorKind kind : kAllCompressors)
    for (std::size_t i = 0; i < ks.size(); ++i)
      out << ks[i] << ',' << to_string(kind) << ',' << fmt(rates[kind][i]) << '\n';
  return {svg_path(dir, Figure::kRhoRates), csv_path(dir, Figure::kRhoRates)};
}

}  // namespace

std::span<const Figure> all_figures() { return kFigures; }

std::string_view figure_name(Figure f) { return kNames[static_cast<std::size_t>(f)]; }

Figure parse_figure(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kFigures[i];
  throw std::invalid_argument("unknown figure '" + std::string(name) + "'");
}

std::vector<fs::path> render_figure(Figure figure, std::span<const RunRecord> records, const fs::path& out_dir,
                                    const FigureOptions& options) {
  if (records.empty()) throw InsufficientDataError("no records to plot");
  fs::create_directories(out_dir);
  switch (figure) {
    case Figure::kLearningCurves: return learning_curves(records, out_dir);
    case Figure::kRhoVsK: return rho_vs_k(records, out_dir);
    case Figure::kErrorRhoM: return error_rho_m(records, out_dir, options.compressor);
    case Figure::kL0VsRho:
    case Figure::kDeltaVsRho: return envelope(records, out_dir, options.compressor, figure);
    case Figure::kRegressions: return regressions(records, out_dir, options.compressor, options.k_star);
    case Figure::kL0Entropy:
    case Figure::kL0Delta: return l0_scatter(records, out_dir, options.compressor, figure);
    case Figure::kHistogramL0: return histogram_l0(records, out_dir, options.compressor);
    case Figure::kErrorSurface:
    case Figure::kRhoSurface: return surface(records, out_dir, options.compressor, figure);
    case Figure::kRhoRates: return rho_rates(records, out_dir);
  }
  throw std::logic_error("unhandled figure");
}

}  // namespace bitscatter
