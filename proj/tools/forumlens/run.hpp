#pragma once

// Shared plumbing for subcommands: options that can also come from a JSON
// config file (flags win), the output directory, and the run manifest.

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "forumlens/corpus.hpp"
#include "forumlens/manifest.hpp"

namespace forumlens::cli {

/// Options registered through a Binder are echoed into the manifest and may
/// be supplied by --config under the key given at registration.
class Binder {
 public:
  explicit Binder(CLI::App* app) : app_(app) {}

  template <class T>
  CLI::Option* add(const std::string& flags, const std::string& key, T& var, const std::string& help) {
    CLI::Option* opt = app_->add_option(flags, var, help)->capture_default_str();
    items_.push_back({key, opt, [&var](const nlohmann::json& j) { var = j.get<T>(); },
                      [&var] { return nlohmann::json(var); }});
    return opt;
  }
  CLI::Option* flag(const std::string& flags, const std::string& key, bool& var, const std::string& help);

  CLI::App* app() const noexcept { return app_; }
  /// Fills options absent from the command line from `config` and returns
  /// the effective values. Unknown config keys are a ConfigError.
  nlohmann::json resolve(const nlohmann::json& config);
  /// True when the option came from the command line or the config file.
  bool given(const std::string& key) const { return given_.contains(key); }

 private:
  struct Item {
    std::string key;
    CLI::Option* option;
    std::function<void(const nlohmann::json&)> set;
    std::function<nlohmann::json()> get;
  };
  CLI::App* app_;
  std::vector<Item> items_;
  std::set<std::string> given_;
};

/// Options every subcommand takes.
struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

/// Registers --seed, --out and --config.
void add_common(Binder& binder, Common& common);

/// One subcommand invocation. Artifacts go under `out`; the manifest is
/// written by finish().
class Run {
 public:
  Run(std::string command, Binder& binder, Common& common);

  const std::filesystem::path& out() const noexcept { return out_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Reads a corpus and records it as an input.
  Corpus load_corpus(const std::string& path);
  nlohmann::json load_json(const std::string& path);
  void add_input(const std::filesystem::path& path) { manifest_.add_input(path); }

  /// Writes `content` to out/name and records it as an artifact.
  void write(const std::string& name, const std::string& content);
  void finish();

 private:
  std::filesystem::path out_;
  std::uint64_t seed_ = 0;
  Manifest manifest_;
};

/// Splits a comma-separated list; empty input gives an empty list.
std::vector<std::string> split_list(const std::string& text);

/// Registration hooks, one per command family.
void register_gen(CLI::App& app);
void register_ingest(CLI::App& app);
void register_classify(CLI::App& app);
void register_topics(CLI::App& app);
void register_rank(CLI::App& app);
void register_compare(CLI::App& app);
void register_stats(CLI::App& app);

}  // namespace forumlens::cli
