#include "artifact.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fcshape/errors.hpp"

namespace fcstool {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "fcshape-run/1";

std::string init_name(fcs::InitKind init) {
  return init == fcs::InitKind::sample_prototypes ? "sample-prototypes" : "random-assignment";
}

std::string distance_name(fcs::DistanceKind d) {
  return d == fcs::DistanceKind::sbd ? "sbd" : "euclidean";
}

}  // namespace

RunArtifact make_artifact(const std::string& algorithm, const std::string& dataset,
                          const fcs::ClusterConfig& config, const fcs::ClusterResult& result,
                          std::size_t n, std::size_t p) {
  RunArtifact a;
  a.algorithm = algorithm;
  a.dataset = dataset;
  a.config = config;
  a.n = n;
  a.p = p;
  a.labels = result.crisp.labels;
  if (result.fuzzy) {
    std::vector<std::vector<double>> u(result.fuzzy->clusters());
    for (std::size_t i = 0; i < result.fuzzy->clusters(); ++i) {
      u[i].assign(result.fuzzy->memberships.row(i),
                  result.fuzzy->memberships.row(i) + result.fuzzy->objects());
    }
    a.memberships = std::move(u);
  }
  for (const auto& centroid : result.prototypes.centroids) {
    a.centroids.push_back(centroid.values);
  }
  a.objective_trace = result.objective_trace;
  a.iterations = result.iterations;
  a.empty_cluster_events = result.empty_cluster_events;
  return a;
}

std::string to_json(const RunArtifact& a) {
  json doc;
  doc["format"] = kFormat;
  doc["algorithm"] = a.algorithm;
  doc["dataset"] = a.dataset;
  doc["config"] = {
      {"clusters", a.config.clusters},
      {"m", a.config.fuzzifier},
      {"max_iter", a.config.max_iterations},
      {"tol", a.config.epsilon},
      {"seed", a.config.seed},
      {"init", init_name(a.config.init)},
      {"distance", distance_name(a.config.distance)},
      {"sbd_unsquared", a.config.sbd_unsquared},
  };
  doc["n"] = a.n;
  doc["p"] = a.p;
  doc["labels"] = a.labels;
  if (a.memberships) doc["memberships"] = *a.memberships;
  doc["centroids"] = a.centroids;
  doc["objective_trace"] = a.objective_trace;
  doc["iterations"] = a.iterations;
  doc["empty_cluster_events"] = a.empty_cluster_events;
  return doc.dump(2) + "\n";
}

RunArtifact artifact_from_json(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw fcs::ParseError(origin, 0, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != kFormat) {
      throw fcs::ParseError(origin, 0, "unsupported artifact format '" +
                                           doc.at("format").get<std::string>() + "'");
    }
    RunArtifact a;
    a.algorithm = doc.at("algorithm").get<std::string>();
    a.dataset = doc.at("dataset").get<std::string>();
    const json& cfg = doc.at("config");
    a.config.clusters = cfg.at("clusters").get<std::size_t>();
    a.config.fuzzifier = cfg.at("m").get<double>();
    a.config.max_iterations = cfg.at("max_iter").get<std::size_t>();
    a.config.epsilon = cfg.at("tol").get<double>();
    a.config.seed = cfg.at("seed").get<std::uint64_t>();
    a.config.init = cfg.at("init").get<std::string>() == "random-assignment"
                        ? fcs::InitKind::random_assignment
                        : fcs::InitKind::sample_prototypes;
    a.config.distance = cfg.at("distance").get<std::string>() == "euclidean"
                            ? fcs::DistanceKind::euclidean
                            : fcs::DistanceKind::sbd;
    a.config.sbd_unsquared = cfg.at("sbd_unsquared").get<bool>();
    a.n = doc.at("n").get<std::size_t>();
    a.p = doc.at("p").get<std::size_t>();
    a.labels = doc.at("labels").get<std::vector<int>>();
    if (doc.contains("memberships")) {
      a.memberships = doc.at("memberships").get<std::vector<std::vector<double>>>();
    }
    a.centroids = doc.at("centroids").get<std::vector<std::vector<double>>>();
    a.objective_trace = doc.at("objective_trace").get<std::vector<double>>();
    a.iterations = doc.at("iterations").get<std::size_t>();
    a.empty_cluster_events = doc.at("empty_cluster_events").get<std::size_t>();
    return a;
  } catch (const json::exception& e) {
    throw fcs::ParseError(origin, 0, std::string("artifact field error: ") + e.what());
  }
}

void save_artifact(const RunArtifact& artifact, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fcs::Error("cannot write artifact file " + path);
  out << to_json(artifact);
}

RunArtifact load_artifact(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fcs::ParseError(path, 0, "cannot open artifact file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return artifact_from_json(buffer.str(), path);
}

}  // namespace fcstool
