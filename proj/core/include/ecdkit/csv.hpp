#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecdkit/metricspace.hpp"
#include "ecdkit/spanning.hpp"

namespace ecdkit::csv {

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

/// Whole-field numeric parse (surrounding spaces allowed).
std::optional<double> parse_real(std::string_view field);

std::vector<std::string_view> split_fields(std::string_view line);

/// One point per row. A first row whose first field is not numeric is a
/// header and is skipped. Throws ParseError / DimensionMismatch.
FeatureSet read_features(std::istream& in);
FeatureSet read_features_file(const std::string& path);

/// N rows of N comma-separated reals, no header. Returns the raw matrix for
/// validate_distance_matrix.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// Rows of (layer, i, j, weight) with a header line.
void write_graph(std::ostream& out, const SpanningGraph& g);

}  // namespace ecdkit::csv
