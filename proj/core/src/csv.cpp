#include "ecdkit/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ecdkit/errors.hpp"

namespace ecdkit::csv {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::vector<double> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<double> values;
  for (auto field : split_fields(line)) {
    auto v = parse_real(field);
    if (!v) {
      std::ostringstream msg;
      msg << "line " << line_no << ": '" << trim(field) << "' is not a number";
      throw ParseError(msg.str());
    }
    values.push_back(*v);
  }
  return values;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::optional<double> parse_real(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

FeatureSet read_features(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (first) {
      first = false;
      if (!parse_real(split_fields(line).front())) continue;  // header
    }
    rows.push_back(parse_row(line, line_no));
  }
  if (rows.empty()) throw ParseError("feature file contains no data rows");
  return FeatureSet::from_rows(rows);
}

FeatureSet read_features_file(const std::string& path) {
  auto in = open(path);
  try {
    return read_features(in);
  } catch (const InputError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Matrix read_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    rows.push_back(parse_row(line, line_no));
  }
  if (rows.empty()) throw ParseError("distance file contains no rows");
  const std::size_t cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      std::ostringstream msg;
      msg << "distance row " << r + 1 << " has " << rows[r].size() << " values, expected " << cols;
      throw NonSquareError(msg.str());
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  auto in = open(path);
  return read_matrix(in);
}

void write_graph(std::ostream& out, const SpanningGraph& g) {
  out << "layer,i,j,weight\n";
  for (const Edge& e : g.edges())
    out << e.layer << ',' << e.i << ',' << e.j << ',' << format_real(e.weight) << '\n';
}

}  // namespace ecdkit::csv
