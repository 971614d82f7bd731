#pragma once

// CSV and JSON emission for experiment results. Ratios carry 5 decimals and
// Table-2 quantities 2 decimals in both formats.

#include <string>

#include <json.hpp>

#include "sonc/experiment.hpp"
#include "sonc/sampling.hpp"

namespace sonc {

struct RunInfo {
  std::string command;
  SamplePlan plan;
  std::uint64_t samples = 0;
  std::uint64_t raw_draws = 0;
  std::string build_id;

  static RunInfo of(std::string command, const SampleSet& s);
};

/// "%.*f" in the C locale.
std::string fixed(double value, int decimals);

/// `value` rounded to `decimals` places, as the JSON number matching fixed().
double rounded(double value, int decimals);

std::string csv_header(const RunInfo& info, const std::string& columns);

std::string table1_csv(const RunInfo& info, const CoverHitMatrix& m);
nlohmann::ordered_json table1_json(const RunInfo& info, const CoverHitMatrix& m);

std::string table2_csv(const RunInfo& info, const CoverHitMatrix& m, int baseline = 9);
nlohmann::ordered_json table2_json(const RunInfo& info, const CoverHitMatrix& m, int baseline = 9);

std::string containment_csv(const RunInfo& info, const ContainmentReport& r);
nlohmann::ordered_json containment_json(const RunInfo& info, const ContainmentReport& r);

std::string homotopy_csv(const RunInfo& info, const HomotopyCurve& c);
nlohmann::ordered_json homotopy_json(const RunInfo& info, const HomotopyCurve& c);

/// Lines of `csv` that do not start with '#'.
std::string csv_data_rows(const std::string& csv);

}  // namespace sonc
