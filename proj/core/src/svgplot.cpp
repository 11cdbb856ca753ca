#include "ecdkit/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ecdkit/csv.hpp"
#include "ecdkit/errors.hpp"

namespace ecdkit::svg {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << v;
  return s.str();
}

std::string tick_label(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

struct Range {
  double lo;
  double hi;
};

// Widen the range to "nice" tick multiples of 1, 2 or 5 x 10^e.
std::vector<double> nice_ticks(Range& r, int target = 5) {
  if (r.hi - r.lo <= 0.0) {
    const double pad = r.lo == 0.0 ? 1.0 : std::abs(r.lo) * 0.1;
    r.lo -= pad;
    r.hi += pad;
  }
  const double raw = (r.hi - r.lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double f : {1.0, 2.0, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  r.lo = std::floor(r.lo / step) * step;
  r.hi = std::ceil(r.hi / step) * step;
  std::vector<double> ticks;
  for (double t = r.lo; t <= r.hi + step * 1e-9; t += step) ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  return ticks;
}

}  // namespace

std::string render(const LineChart& chart) {
  Range xr{INFINITY, -INFINITY}, yr{INFINITY, -INFINITY};
  for (const auto& s : chart.series)
    for (auto [x, y] : s.points) {
      xr = {std::min(xr.lo, x), std::max(xr.hi, x)};
      yr = {std::min(yr.lo, y), std::max(yr.hi, y)};
    }
  if (!std::isfinite(xr.lo)) throw SchemaError("line chart has no points");

  const auto xticks = nice_ticks(xr);
  const auto yticks = nice_ticks(yr);

  const double left = 70, right = 150, top = 40, bottom = 55;
  const double plot_w = chart.width - left - right;
  const double plot_h = chart.height - top - bottom;
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return top + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << chart.width
      << "\" height=\"" << chart.height << "\" viewBox=\"0 0 " << chart.width << ' ' << chart.height
      << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << chart.width << "\" height=\"" << chart.height
      << "\" fill=\"white\"/>\n"
      << "  <text x=\"" << num(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(chart.title) << "</text>\n";

  out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double t : xticks)
    out << "    <line x1=\"" << num(px(t)) << "\" y1=\"" << num(top) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(top + plot_h) << "\"/>\n";
  for (double t : yticks)
    out << "    <line x1=\"" << num(left) << "\" y1=\"" << num(py(t)) << "\" x2=\""
        << num(left + plot_w) << "\" y2=\"" << num(py(t)) << "\"/>\n";
  out << "  </g>\n";

  out << "  <rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plot_w)
      << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  out << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : xticks)
    out << "    <text x=\"" << num(px(t)) << "\" y=\"" << num(top + plot_h + 16)
        << "\" text-anchor=\"middle\">" << escape(tick_label(t)) << "</text>\n";
  for (double t : yticks)
    out << "    <text x=\"" << num(left - 6) << "\" y=\"" << num(py(t) + 4)
        << "\" text-anchor=\"end\">" << escape(tick_label(t)) << "</text>\n";
  out << "  </g>\n";

  out << "  <text x=\"" << num(left + plot_w / 2) << "\" y=\"" << chart.height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(chart.x_label) << "</text>\n"
      << "  <text x=\"18\" y=\"" << num(top + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 "
      << num(top + plot_h / 2) << ")\">" << escape(chart.y_label) << "</text>\n";

  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    auto pts = chart.series[s].points;
    std::stable_sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.first < b.first; });
    const char* color = kPalette[s % std::size(kPalette)];
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << (i ? " " : "") << num(px(pts[i].first)) << ',' << num(py(pts[i].second));
    out << "\"/>\n";
    for (auto [x, y] : pts)
      out << "  <circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\""
          << color << "\"/>\n";

    const double ly = top + 10 + 20.0 * static_cast<double>(s);
    const double lx = left + plot_w + 15;
    out << "  <line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "  <text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(chart.series[s].label)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<Panel> table_panels(const ExperimentTable& table) {
  if (table.empty()) throw SchemaError("experiment table has no rows to plot");
  std::vector<std::string> measures;
  for (const auto& r : table)
    if (std::find(measures.begin(), measures.end(), r.measure) == measures.end())
      measures.push_back(r.measure);

  std::vector<Panel> panels;
  for (const auto& measure : measures) {
    std::map<std::size_t, Series> by_dim;
    for (const auto& r : table) {
      if (r.measure != measure) continue;
      auto& s = by_dim[r.dim];
      s.label = "dim " + std::to_string(r.dim);
      s.points.emplace_back(r.variance_a, r.value);
    }
    LineChart chart;
    chart.title = measure;
    chart.x_label = "variance of A";
    chart.y_label = measure;
    for (auto& [dim, s] : by_dim) chart.series.push_back(std::move(s));
    panels.push_back({measure, render(chart)});
  }
  return panels;
}

}  // namespace ecdkit::svg
