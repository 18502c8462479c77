#include "results.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include "fcshape/errors.hpp"

namespace fcstool {

namespace {

double parse_field_double(const std::string& field, const std::string& path, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw fcs::ParseError(path, line, "non-numeric field '" + field + "'");
  }
  return v;
}

std::uint64_t parse_field_uint(const std::string& field, const std::string& path,
                               std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw fcs::ParseError(path, line, "non-integer field '" + field + "'");
  }
  return v;
}

}  // namespace

std::string format_record(const BenchmarkRecord& r) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%s,%s,%zu,%llu,%.6f,%.6f,%.6f,%.6f,%zu,%.2f",
                r.dataset.c_str(), r.algorithm.c_str(), r.run,
                static_cast<unsigned long long>(r.seed), r.ri, r.ari, r.nmi, r.vi,
                r.iterations, r.cpu_seconds);
  return buffer;
}

void write_results_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records) {
  out << kResultsHeader << "\n";
  for (const auto& record : records) out << format_record(record) << "\n";
}

std::vector<GrandAverage> grand_averages(const std::vector<BenchmarkRecord>& records) {
  // Round through the CSV formatting so the averages describe the file
  // contents exactly.
  auto rounded = [](double v, const char* fmt) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), fmt, v);
    return std::strtod(buffer, nullptr);
  };

  std::vector<GrandAverage> averages;
  std::map<std::string, std::size_t> index;
  for (const auto& r : records) {
    auto [it, inserted] = index.emplace(r.algorithm, averages.size());
    if (inserted) averages.push_back(GrandAverage{r.algorithm, 0, 0, 0, 0, 0});
    GrandAverage& g = averages[it->second];
    ++g.records;
    g.ri += rounded(r.ri, "%.6f");
    g.ari += rounded(r.ari, "%.6f");
    g.nmi += rounded(r.nmi, "%.6f");
    g.vi += rounded(r.vi, "%.6f");
  }
  for (auto& g : averages) {
    if (g.records == 0) continue;
    const double n = static_cast<double>(g.records);
    g.ri /= n;
    g.ari /= n;
    g.nmi /= n;
    g.vi /= n;
  }
  return averages;
}

void append_summary(std::ostream& out, const std::vector<GrandAverage>& averages) {
  out << "# summary,algorithm,records,mean_ri,mean_ari,mean_nmi,mean_vi\n";
  for (const auto& g : averages) {
    char buffer[320];
    std::snprintf(buffer, sizeof(buffer), "# summary,%s,%zu,%.15f,%.15f,%.15f,%.15f",
                  g.algorithm.c_str(), g.records, g.ri, g.ari, g.nmi, g.vi);
    out << buffer << "\n";
  }
}

std::vector<BenchmarkRecord> read_results_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fcs::ParseError(path, 0, "cannot open results file");

  std::vector<BenchmarkRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    if (!header_seen) {
      if (line != kResultsHeader) {
        throw fcs::ParseError(path, line_no,
                              "unrecognized results schema (expected header '" +
                                  std::string(kResultsHeader) + "')");
      }
      header_seen = true;
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto pos = line.find(',', start);
      fields.push_back(line.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (fields.size() != 10) {
      throw fcs::ParseError(path, line_no, "expected 10 fields, got " +
                                               std::to_string(fields.size()));
    }

    BenchmarkRecord r;
    r.dataset = fields[0];
    r.algorithm = fields[1];
    r.run = parse_field_uint(fields[2], path, line_no);
    r.seed = parse_field_uint(fields[3], path, line_no);
    r.ri = parse_field_double(fields[4], path, line_no);
    r.ari = parse_field_double(fields[5], path, line_no);
    r.nmi = parse_field_double(fields[6], path, line_no);
    r.vi = parse_field_double(fields[7], path, line_no);
    r.iterations = parse_field_uint(fields[8], path, line_no);
    r.cpu_seconds = parse_field_double(fields[9], path, line_no);
    records.push_back(std::move(r));
  }
  if (!header_seen) throw fcs::ParseError(path, line_no, "missing results header");
  return records;
}

}  // namespace fcstool
