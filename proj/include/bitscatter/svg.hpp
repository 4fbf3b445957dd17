#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bitscatter::svg {

std::string escape(std::string_view text);

/// Minimal SVG document builder. Coordinates are in pixels.
class Canvas {
 public:
  Canvas(double width, double height);

  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0,
            std::string_view dash = {});
  void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke, double width = 1.5);
  void polygon(const std::vector<std::pair<double, double>>& pts, std::string_view fill, double opacity = 1.0);
  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "none",
            double opacity = 1.0);
  void circle(double cx, double cy, double r, std::string_view fill, double opacity = 1.0);
  void text(double x, double y, std::string_view content, double size = 12.0, std::string_view anchor = "middle",
            double rotate = 0.0);
  void comment(std::string_view content);

  double width() const { return width_; }
  double height() const { return height_; }

  std::string str() const;
  void save(const std::filesystem::path& path) const;

 private:
  double width_;
  double height_;
  std::ostringstream body_;
};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

/// Range covering `values` with a small margin; degenerate spans are widened.
Range padded_range(const std::vector<double>& values, double margin = 0.05);

/// Roughly `count` round tick positions inside r.
std::vector<double> nice_ticks(Range r, int count = 6);

std::string tick_label(double v);

/// Color for t in [0, 1] on a blue-to-red ramp.
std::string ramp(double t);

/// Categorical palette.
std::string_view palette(std::size_t i);

/// Axes frame with data-to-pixel mapping.
class Plot {
 public:
  Plot(std::string_view title, std::string_view x_label, std::string_view y_label, Range x, Range y,
       double width = 720, double height = 520);

  double px(double x) const;
  double py(double y) const;

  Canvas& canvas() { return canvas_; }
  Range x_range() const { return x_; }
  Range y_range() const { return y_; }

  void series(const std::vector<double>& xs, const std::vector<double>& ys, std::string_view color,
              std::string_view label = {}, double width = 1.8);
  void scatter(const std::vector<double>& xs, const std::vector<double>& ys, std::string_view color,
               double radius = 2.5, double opacity = 0.6);
  void band(const std::vector<double>& xs, const std::vector<double>& lo, const std::vector<double>& hi,
            std::string_view color, double opacity = 0.25);
  void hline(double y, std::string_view color, std::string_view dash = "6,4");
  void note(std::string_view content);
  void legend_entry(std::string_view label, std::string_view color);

  /// Draws frame, ticks and labels. Call after the data so axes sit on top.
  void finish();
  void save(const std::filesystem::path& path);

  static constexpr double kLeft = 80, kRight = 30, kTop = 50, kBottom = 60;

 private:
  Canvas canvas_;
  Range x_;
  Range y_;
  std::string title_, x_label_, y_label_;
  std::vector<std::pair<std::string, std::string>> legend_;
  std::vector<std::string> notes_;
  bool finished_ = false;
};

}  // namespace bitscatter::svg
