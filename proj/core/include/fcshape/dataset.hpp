#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcshape/series.hpp"

namespace fcs {

// A collection of n series sharing one length p, with optional ground-truth
// class labels remapped to contiguous 1..c.
struct Dataset {
  std::vector<TimeSeries> series;
  std::optional<std::vector<int>> labels;
  std::string name;

  std::size_t size() const noexcept { return series.size(); }
  std::size_t length() const noexcept { return series.empty() ? 0 : series[0].size(); }

  // Number of distinct labels (0 when unlabeled).
  std::size_t label_count() const;
};

// Loads a UCR-format text file: one record per line, fields separated by a
// single comma or tab (auto-detected per file), field 1 the integer class
// label, the rest the samples. Labels are remapped to 1..c in order of first
// appearance and every series is z-normalized. Tolerates CRLF line endings
// and blank lines.
Dataset load_ucr(const std::string& path);

// As above, concatenating the records of two files with identical length p
// (labels are remapped over the concatenation).
Dataset load_ucr(const std::string& path, const std::string& merge_path);

// Remaps arbitrary integer labels to contiguous 1..c, preserving the order
// of first appearance.
std::vector<int> remap_labels(const std::vector<long long>& raw);

}  // namespace fcs
