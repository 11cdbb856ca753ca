#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecdkit/experiments.hpp"

namespace ecdkit::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y), drawn in x order
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  int width = 640;
  int height = 420;
};

/// Standalone SVG 1.1 document: axes with ticks, one polyline per series,
/// and a legend. Throws SchemaError when there is nothing to draw.
std::string render(const LineChart& chart);

struct Panel {
  std::string measure;
  std::string document;
};

/// One panel per measure (in order of first appearance): x = variance_a,
/// y = value, one series per dim.
std::vector<Panel> table_panels(const ExperimentTable& table);

}  // namespace ecdkit::svg
