#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fcstool {

// One row of a benchmark results table.
struct BenchmarkRecord {
  std::string dataset;
  std::string algorithm;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double ri = 0.0;
  double ari = 0.0;
  double nmi = 0.0;
  double vi = 0.0;
  std::size_t iterations = 0;
  double cpu_seconds = 0.0;
};

// Per-algorithm grand averages over all records (means of the values exactly
// as they appear in the CSV).
struct GrandAverage {
  std::string algorithm;
  std::size_t records = 0;
  double ri = 0.0;
  double ari = 0.0;
  double nmi = 0.0;
  double vi = 0.0;
};

inline constexpr const char* kResultsHeader =
    "dataset,algorithm,run,seed,ri,ari,nmi,vi,iterations,cpu_seconds";

// Formats one record exactly as the CSV stores it (CVIs to 6 decimals,
// cpu_seconds to 2).
std::string format_record(const BenchmarkRecord& record);

void write_results_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records);

// Grand averages computed from the rounded values as written to the CSV, in
// first-appearance order of the algorithms.
std::vector<GrandAverage> grand_averages(const std::vector<BenchmarkRecord>& records);

// Appends "# summary,..." comment rows (full precision) after the records.
void append_summary(std::ostream& out, const std::vector<GrandAverage>& averages);

// Reads a results CSV, verifying the schema header; '#' comment lines are
// skipped. Throws fcs::ParseError with line numbers on malformed input.
std::vector<BenchmarkRecord> read_results_csv(const std::string& path);

}  // namespace fcstool
