#pragma once

#include <optional>
#include <string>

#include "ecdkit/ecd.hpp"
#include "ecdkit/setmeasures.hpp"

namespace ecdkit {

/// ECD report as a JSON object:
///   statistic, r1, r2, r12, mu1, mu2, sigma [[s11, s12], [s21, s22]], C,
///   edges, k, n, m, seed (int|null), rounds (int|null), metric, rng,
///   round_statistics, and coverage/mmd/frechet when `measures` is given.
std::string report_json(const EcdReport& report,
                        const std::optional<MeasureResult>& measures = std::nullopt);

/// coverage, mmd, frechet (null in precomputed mode), n, m, metric and the
/// covariance convention.
std::string measures_json(const MeasureResult& measures, std::size_t n, std::size_t m,
                          const std::string& metric);

/// Inverse of report_json for the ECD fields. Throws ParseError.
EcdReport parse_report_json(const std::string& text);

}  // namespace ecdkit
