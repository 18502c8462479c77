#include "datasets.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "fcshape/errors.hpp"

namespace fcstool {

namespace fs = std::filesystem;

std::vector<DatasetSource> discover_datasets(const std::string& dir) {
  if (!fs::is_directory(dir)) {
    throw fcs::ParseError(dir, 0, "not a directory");
  }

  struct Parts {
    std::string train;
    std::string test;
    std::vector<std::string> plain;
  };
  std::map<std::string, Parts> by_base;

  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string stem = entry.path().stem().string();
    if (stem.ends_with("_TRAIN")) {
      by_base[stem.substr(0, stem.size() - 6)].train = entry.path().string();
    } else if (stem.ends_with("_TEST")) {
      by_base[stem.substr(0, stem.size() - 5)].test = entry.path().string();
    } else {
      by_base[stem].plain.push_back(entry.path().string());
    }
  }

  std::vector<DatasetSource> sources;
  for (auto& [base, parts] : by_base) {
    if (!parts.train.empty() && !parts.test.empty()) {
      sources.push_back({base, parts.train, parts.test});
    } else if (!parts.train.empty()) {
      sources.push_back({base, parts.train, ""});
    } else if (!parts.test.empty()) {
      sources.push_back({base, parts.test, ""});
    }
    std::sort(parts.plain.begin(), parts.plain.end());
    for (const auto& path : parts.plain) {
      sources.push_back({base, path, ""});
    }
  }
  std::sort(sources.begin(), sources.end(),
            [](const DatasetSource& a, const DatasetSource& b) { return a.name < b.name; });
  return sources;
}

}  // namespace fcstool
