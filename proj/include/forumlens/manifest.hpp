#pragma once

// Run manifests: a JSON record of the effective configuration, the SHA-256 of
// every input and artifact, the tool version and the kernel ISA. Manifests
// carry no timestamps, so equal inputs give byte-identical manifests.

#include <filesystem>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace forumlens {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

class Manifest {
 public:
  explicit Manifest(std::string command);

  void set_config(nlohmann::json config) { config_ = std::move(config); }
  void add_input(const std::filesystem::path& path);
  /// Records an artifact; the path is stored relative to `root`.
  void add_artifact(const std::filesystem::path& path, const std::filesystem::path& root);

  nlohmann::json to_json() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Entry {
    std::string path;
    std::string sha256;
  };
  std::string command_;
  nlohmann::json config_ = nlohmann::json::object();
  std::vector<Entry> inputs_;
  std::vector<Entry> artifacts_;
};

}  // namespace forumlens
