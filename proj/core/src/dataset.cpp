#include "fcshape/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <string_view>
#include <unordered_map>

#include "fcshape/errors.hpp"

namespace fcs {

namespace {

struct RawRecord {
  long long label;
  TimeSeries series;
};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view field, const std::string& path, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(path, line, "non-numeric field '" + std::string(field) + "'");
  }
  return value;
}

long long parse_label(std::string_view field, const std::string& path, std::size_t line) {
  const double v = parse_double(field, path, line);
  const double r = std::nearbyint(v);
  if (std::abs(v - r) > 1e-9 * std::max(1.0, std::abs(v))) {
    throw ParseError(path, line, "class label '" + std::string(field) + "' is not an integer");
  }
  return static_cast<long long>(r);
}

// Reads one file's records, enforcing a common record width. When
// expected_fields is nonzero the first record must match it too (used when
// merging a second file).
std::vector<RawRecord> read_records(const std::string& path, std::size_t expected_fields) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");

  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  char sep = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    if (sep == 0) sep = line.find('\t') != std::string::npos ? '\t' : ',';

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto pos = rest.find(sep);
      fields.push_back(rest.substr(0, pos));
      if (pos == std::string_view::npos) break;
      rest.remove_prefix(pos + 1);
    }

    if (expected_fields == 0) {
      expected_fields = fields.size();
      if (expected_fields < 3) {
        throw ParseError(path, line_no,
                         "record needs a label and at least 2 samples, got " +
                             std::to_string(expected_fields) + " field(s)");
      }
    } else if (fields.size() != expected_fields) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(expected_fields) + " fields, got " +
                           std::to_string(fields.size()));
    }

    RawRecord rec;
    rec.label = parse_label(fields[0], path, line_no);
    rec.series.values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      rec.series.values.push_back(parse_double(fields[i], path, line_no));
    }
    records.push_back(std::move(rec));
  }

  if (records.empty()) throw ParseError(path, line_no, "file contains no records");
  return records;
}

std::string dataset_name_from(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  for (const char* suffix : {"_TRAIN", "_TEST"}) {
    if (stem.size() > std::strlen(suffix) && stem.ends_with(suffix)) {
      stem.resize(stem.size() - std::strlen(suffix));
      break;
    }
  }
  return stem;
}

Dataset assemble(std::vector<RawRecord> records, std::string name) {
  Dataset ds;
  ds.name = std::move(name);
  std::vector<long long> raw_labels;
  raw_labels.reserve(records.size());
  for (auto& rec : records) {
    raw_labels.push_back(rec.label);
    ds.series.push_back(z_normalize(rec.series));
  }
  ds.labels = remap_labels(raw_labels);
  return ds;
}

}  // namespace

std::size_t Dataset::label_count() const {
  if (!labels) return 0;
  std::set<int> distinct(labels->begin(), labels->end());
  return distinct.size();
}

std::vector<int> remap_labels(const std::vector<long long>& raw) {
  std::unordered_map<long long, int> seen;
  std::vector<int> out;
  out.reserve(raw.size());
  for (long long r : raw) {
    const auto [it, inserted] = seen.emplace(r, static_cast<int>(seen.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

Dataset load_ucr(const std::string& path) {
  auto records = read_records(path, 0);
  if (records.size() < 2) {
    throw ParseError(path, records.size(), "dataset needs at least 2 records");
  }
  return assemble(std::move(records), dataset_name_from(path));
}

Dataset load_ucr(const std::string& path, const std::string& merge_path) {
  auto records = read_records(path, 0);
  const std::size_t fields = records.empty() ? 0 : records[0].series.size() + 1;
  auto more = read_records(merge_path, fields);
  records.insert(records.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  if (records.size() < 2) {
    throw ParseError(path, records.size(), "dataset needs at least 2 records");
  }
  return assemble(std::move(records), dataset_name_from(path));
}

}  // namespace fcs
