#pragma once

#include <string>
#include <vector>

namespace fcstool {

// One benchmark input: either a single UCR file or a TRAIN/TEST pair merged
// under the shared base name.
struct DatasetSource {
  std::string name;
  std::string path;
  std::string merge_path;  // empty when not paired
};

// Scans a directory (non-recursive) for UCR text files, pairing X_TRAIN with
// X_TEST by stem. Returns sources sorted by dataset name.
std::vector<DatasetSource> discover_datasets(const std::string& dir);

}  // namespace fcstool
