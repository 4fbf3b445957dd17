#include "bitscatter/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace bitscatter::svg {
namespace {

std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, std::round(v * 100.0) / 100.0);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

Canvas::Canvas(double width, double height) : width_(width), height_(height) {}

void Canvas::line(double x1, double y1, double x2, double y2, std::string_view stroke, double width,
                  std::string_view dash) {
  body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
        << "\" stroke=\"" << escape(stroke) << "\" stroke-width=\"" << num(width) << '"';
  if (!dash.empty()) body_ << " stroke-dasharray=\"" << escape(dash) << '"';
  body_ << "/>\n";
}

void Canvas::polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke, double width) {
  if (pts.size() < 2) return;
  body_ << "<polyline fill=\"none\" stroke=\"" << escape(stroke) << "\" stroke-width=\"" << num(width)
        << "\" points=\"";
  for (const auto& [x, y] : pts) body_ << num(x) << ',' << num(y) << ' ';
  body_ << "\"/>\n";
}

void Canvas::polygon(const std::vector<std::pair<double, double>>& pts, std::string_view fill, double opacity) {
  if (pts.size() < 3) return;
  body_ << "<polygon stroke=\"none\" fill=\"" << escape(fill) << "\" fill-opacity=\"" << num(opacity)
        << "\" points=\"";
  for (const auto& [x, y] : pts) body_ << num(x) << ',' << num(y) << ' ';
  body_ << "\"/>\n";
}

void Canvas::rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke,
                  double opacity) {
  body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" fill=\"" << escape(fill) << "\" stroke=\"" << escape(stroke) << '"';
  if (opacity < 1.0) body_ << " fill-opacity=\"" << num(opacity) << '"';
  body_ << "/>\n";
}

void Canvas::circle(double cx, double cy, double r, std::string_view fill, double opacity) {
  body_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" fill=\""
        << escape(fill) << "\" fill-opacity=\"" << num(opacity) << "\"/>\n";
}

void Canvas::text(double x, double y, std::string_view content, double size, std::string_view anchor,
                  double rotate) {
  body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
        << "\" font-family=\"sans-serif\" text-anchor=\"" << escape(anchor) << '"';
  if (rotate != 0.0) body_ << " transform=\"rotate(" << num(rotate) << ' ' << num(x) << ' ' << num(y) << ")\"";
  body_ << '>' << escape(content) << "</text>\n";
}

void Canvas::comment(std::string_view content) {
  std::string safe(content);
  for (std::size_t p; (p = safe.find("--")) != std::string::npos;) safe.replace(p, 2, "- ");
  body_ << "<!-- " << safe << " -->\n";
}

std::string Canvas::str() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\"" << num(height_)
      << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
      << "\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

void Canvas::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << str();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Range padded_range(const std::vector<double>& values, double margin) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!std::isfinite(lo)) return {0.0, 1.0};
  if (hi - lo < 1e-12) {
    const double pad = std::max(std::abs(lo) * 0.1, 0.5);
    return {lo - pad, hi + pad};
  }
  const double pad = (hi - lo) * margin;
  return {lo - pad, hi + pad};
}

std::vector<double> nice_ticks(Range r, int count) {
  const double span = r.hi - r.lo;
  if (!(span > 0) || count < 1) return {r.lo};
  const double raw = span / count;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double f : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + step * 1e-9; t += step)
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

std::string tick_label(double v) {
  char buf[32];
  const double a = std::abs(v);
  auto res = (a != 0.0 && (a < 1e-3 || a >= 1e6)) ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 2)
                                                  : std::to_chars(buf, buf + sizeof buf, std::round(v * 1e4) / 1e4);
  return std::string(buf, res.ptr);
}

std::string ramp(double t) {
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  // blue -> cyan -> yellow -> red
  static constexpr std::array<std::array<double, 3>, 4> stops = {{{49, 54, 149}, {116, 173, 209}, {254, 224, 144}, {215, 48, 39}}};
  const double s = t * (stops.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(s), stops.size() - 2);
  const double f = s - static_cast<double>(i);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround(stops[i][c] * (1 - f) + stops[i + 1][c] * f));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string_view palette(std::size_t i) {
  static constexpr std::array<std::string_view, 10> colors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                              "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[i % colors.size()];
}

Plot::Plot(std::string_view title, std::string_view x_label, std::string_view y_label, Range x, Range y,
           double width, double height)
    : canvas_(width, height), x_(x), y_(y), title_(title), x_label_(x_label), y_label_(y_label) {
  if (!(x_.hi > x_.lo)) x_.hi = x_.lo + 1.0;
  if (!(y_.hi > y_.lo)) y_.hi = y_.lo + 1.0;
}

double Plot::px(double x) const {
  return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (canvas_.width() - kLeft - kRight);
}

double Plot::py(double y) const {
  return canvas_.height() - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (canvas_.height() - kTop - kBottom);
}

void Plot::series(const std::vector<double>& xs, const std::vector<double>& ys, std::string_view color,
                  std::string_view label, double width) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (std::isfinite(xs[i]) && std::isfinite(ys[i])) pts.emplace_back(px(xs[i]), py(ys[i]));
  canvas_.polyline(pts, color, width);
  for (const auto& [x, y] : pts) canvas_.circle(x, y, 3.0, color, 1.0);
  if (!label.empty()) legend_entry(label, color);
}

void Plot::scatter(const std::vector<double>& xs, const std::vector<double>& ys, std::string_view color,
                   double radius, double opacity) {
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (std::isfinite(xs[i]) && std::isfinite(ys[i])) canvas_.circle(px(xs[i]), py(ys[i]), radius, color, opacity);
}

void Plot::band(const std::vector<double>& xs, const std::vector<double>& lo, const std::vector<double>& hi,
                std::string_view color, double opacity) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::isfinite(hi[i])) pts.emplace_back(px(xs[i]), py(hi[i]));
  for (std::size_t i = xs.size(); i-- > 0;)
    if (std::isfinite(lo[i])) pts.emplace_back(px(xs[i]), py(lo[i]));
  canvas_.polygon(pts, color, opacity);
}

void Plot::hline(double y, std::string_view color, std::string_view dash) {
  if (y < y_.lo || y > y_.hi) return;
  canvas_.line(px(x_.lo), py(y), px(x_.hi), py(y), color, 1.0, dash);
}

void Plot::note(std::string_view content) { notes_.emplace_back(content); }

void Plot::legend_entry(std::string_view label, std::string_view color) {
  legend_.emplace_back(std::string(label), std::string(color));
}

void Plot::finish() {
  if (finished_) return;
  finished_ = true;
  const double left = px(x_.lo), right = px(x_.hi), top = py(y_.hi), bottom = py(y_.lo);
  canvas_.rect(left, top, right - left, bottom - top, "none", "black");
  for (double t : nice_ticks(x_)) {
    canvas_.line(px(t), bottom, px(t), bottom + 5, "black");
    canvas_.text(px(t), bottom + 18, tick_label(t), 11);
  }
  for (double t : nice_ticks(y_)) {
    canvas_.line(left - 5, py(t), left, py(t), "black");
    canvas_.text(left - 8, py(t) + 4, tick_label(t), 11, "end");
  }
  canvas_.text(canvas_.width() / 2, 28, title_, 16);
  canvas_.text((left + right) / 2, canvas_.height() - 15, x_label_, 13);
  canvas_.text(20, (top + bottom) / 2, y_label_, 13, "middle", -90);
  double ly = top + 16;
  for (const auto& [label, color] : legend_) {
    canvas_.rect(right - 150, ly - 9, 10, 10, color);
    canvas_.text(right - 135, ly, label, 11, "start");
    ly += 16;
  }
  double ny = top + 16;
  for (const auto& n : notes_) {
    canvas_.rect(left + 6, ny - 11, 6.2 * static_cast<double>(n.size()) + 8, 15, "white", "none", 0.8);
    canvas_.text(left + 10, ny, n, 11, "start");
    ny += 16;
  }
}

void Plot::save(const std::filesystem::path& path) {
  finish();
  canvas_.save(path);
}

}  // namespace bitscatter::svg
