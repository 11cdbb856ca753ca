#include "ecdkit/report.hpp"

#include <nlohmann/json.hpp>

#include "ecdkit/errors.hpp"
#include "ecdkit/random.hpp"

namespace ecdkit {

using nlohmann::json;

namespace {

json measure_fields(const MeasureResult& measures) {
  json j;
  j["coverage"] = measures.coverage;
  j["mmd"] = measures.mmd;
  j["frechet"] = measures.frechet ? json(*measures.frechet) : json(nullptr);
  j["covariance_denominator"] = "n-1";
  return j;
}

}  // namespace

std::string report_json(const EcdReport& r, const std::optional<MeasureResult>& measures) {
  json j;
  j["statistic"] = r.statistic;
  j["r1"] = r.counts.r1;
  j["r2"] = r.counts.r2;
  j["r12"] = r.counts.r12;
  j["mu1"] = r.moments.mu1;
  j["mu2"] = r.moments.mu2;
  j["sigma"] = {{r.moments.sigma[0][0], r.moments.sigma[0][1]},
                {r.moments.sigma[1][0], r.moments.sigma[1][1]}};
  j["C"] = r.degree_pairs;
  j["edges"] = r.edges;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["rounds"] = r.rounds ? json(*r.rounds) : json(nullptr);
  j["metric"] = r.metric;
  j["round_statistics"] = r.round_statistics;
  if (r.seed) j["rng"] = kRngAlgorithm;
  if (measures) j.update(measure_fields(*measures));
  return j.dump(2) + "\n";
}

std::string measures_json(const MeasureResult& measures, std::size_t n, std::size_t m,
                          const std::string& metric) {
  json j = measure_fields(measures);
  j["n"] = n;
  j["m"] = m;
  j["metric"] = metric;
  return j.dump(2) + "\n";
}

EcdReport parse_report_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    EcdReport r;
    r.statistic = j.at("statistic").get<double>();
    r.counts.r1 = j.at("r1").get<std::size_t>();
    r.counts.r2 = j.at("r2").get<std::size_t>();
    r.counts.r12 = j.value("r12", std::size_t{0});
    r.moments.mu1 = j.at("mu1").get<double>();
    r.moments.mu2 = j.at("mu2").get<double>();
    const auto& s = j.at("sigma");
    r.moments.sigma = {{{s.at(0).at(0).get<double>(), s.at(0).at(1).get<double>()},
                        {s.at(1).at(0).get<double>(), s.at(1).at(1).get<double>()}}};
    r.degree_pairs = j.at("C").get<double>();
    r.edges = j.at("edges").get<std::size_t>();
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("rounds").is_null()) r.rounds = j.at("rounds").get<int>();
    r.metric = j.value("metric", std::string{});
    r.round_statistics = j.value("round_statistics", std::vector<double>{});
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ECD report: ") + e.what());
  }
}

}  // namespace ecdkit
