#include "manifest.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "agpir/errors.hpp"
#include "agpir/rng.hpp"

namespace agpir::cli {

void RunManifest::write_sidecar(const std::string& data_path) const {
  nlohmann::json j;
  j["artifact"] = "agpir";
  j["version"] = "0.1.0";
  j["command"] = command;
  j["rng"] = Rng::kAlgorithm;
  j["seed"] = seed;
  j["parameters"] = parameters;
  const auto now = std::chrono::system_clock::now();
  j["created_unix"] = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();

  const std::string path = data_path + ".manifest.json";
  std::ofstream out(path);
  if (!out) throw Error("manifest: cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace agpir::cli
