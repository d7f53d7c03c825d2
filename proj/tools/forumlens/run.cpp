#include "run.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "forumlens/error.hpp"

namespace forumlens::cli {

CLI::Option* Binder::flag(const std::string& flags, const std::string& key, bool& var, const std::string& help) {
  CLI::Option* opt = app_->add_flag(flags, var, help);
  items_.push_back({key, opt, [&var](const nlohmann::json& j) { var = j.get<bool>(); },
                    [&var] { return nlohmann::json(var); }});
  return opt;
}

nlohmann::json Binder::resolve(const nlohmann::json& config) {
  if (!config.is_object()) throw ConfigError("config file must hold a JSON object");
  std::set<std::string> known;
  for (auto& item : items_) {
    known.insert(item.key);
    if (item.option->count() > 0) given_.insert(item.key);
    if (item.option->count() > 0 || !config.contains(item.key)) continue;
    given_.insert(item.key);
    try {
      item.set(config.at(item.key));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key '" + item.key + "': " + e.what());
    }
  }
  for (const auto& [key, value] : config.items())
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  nlohmann::json effective = nlohmann::json::object();
  for (auto& item : items_) effective[item.key] = item.get();
  return effective;
}

void add_common(Binder& binder, Common& common) {
  binder.add("--seed", "seed", common.seed, "Random seed");
  binder.add("--out,-o", "out", common.out, "Output directory");
  binder.app()->add_option("--config", common.config, "JSON file with option values; flags override it");
}

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
}

}  // namespace

Run::Run(std::string command, Binder& binder, Common& common) : manifest_(std::move(command)) {
  nlohmann::json config = nlohmann::json::object();
  if (!common.config.empty()) {
    config = read_json_file(common.config);
    if (!config.is_object()) throw ConfigError("config file must hold a JSON object");
  }
  nlohmann::json effective = binder.resolve(config);
  if (common.out.empty()) throw ConfigError("--out is required");
  effective.erase("out");
  out_ = common.out;
  seed_ = common.seed;
  std::filesystem::create_directories(out_);
  manifest_.set_config(std::move(effective));
}

Corpus Run::load_corpus(const std::string& path) {
  if (path.empty()) throw ConfigError("--input is required");
  if (!std::filesystem::exists(path)) throw ConfigError("input '" + path + "' does not exist");
  manifest_.add_input(path);
  Corpus corpus = ingest_corpus(path);
  validate(corpus);
  return corpus;
}

nlohmann::json Run::load_json(const std::string& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("input '" + path + "' does not exist");
  manifest_.add_input(path);
  return read_json_file(path);
}

void Run::write(const std::string& name, const std::string& content) {
  const auto path = out_ / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << content;
  f.close();
  if (!f) throw ConfigError("failed writing '" + path.string() + "'");
  manifest_.add_artifact(path, out_);
}

void Run::finish() { manifest_.write(out_ / "manifest.json"); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace forumlens::cli
