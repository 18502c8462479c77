#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcshape/clusterers.hpp"

namespace fcstool {

// Everything a single clustering run produces, serialized as JSON with
// shortest-round-trip doubles so artifacts reload losslessly and repeat runs
// are byte-identical.
struct RunArtifact {
  std::string algorithm;
  std::string dataset;
  fcs::ClusterConfig config;
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<int> labels;
  std::optional<std::vector<std::vector<double>>> memberships;  // c x n
  std::vector<std::vector<double>> centroids;                   // c x p
  std::vector<double> objective_trace;
  std::size_t iterations = 0;
  std::size_t empty_cluster_events = 0;
};

RunArtifact make_artifact(const std::string& algorithm, const std::string& dataset,
                          const fcs::ClusterConfig& config, const fcs::ClusterResult& result,
                          std::size_t n, std::size_t p);

std::string to_json(const RunArtifact& artifact);

// Throws fcs::ParseError on malformed or wrongly-versioned input.
RunArtifact artifact_from_json(const std::string& text, const std::string& origin);

void save_artifact(const RunArtifact& artifact, const std::string& path);
RunArtifact load_artifact(const std::string& path);

}  // namespace fcstool
