#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace agpir::cli {

// Sidecar manifest for every data file a command emits: the command, its
// full parameter set, seed and artifact version. Re-running a command with
// the parameters recorded in a manifest reproduces the data file
// byte-identically (the timestamp lives only here, never in the data).
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;

  void add(const std::string& key, const std::string& value) { parameters[key] = value; }
  void add(const std::string& key, std::uint64_t value) {
    parameters[key] = std::to_string(value);
  }

  // Writes <data_path>.manifest.json next to the data file.
  void write_sidecar(const std::string& data_path) const;
};

}  // namespace agpir::cli
