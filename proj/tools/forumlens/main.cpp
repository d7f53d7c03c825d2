#include <CLI11.hpp>
#include <exception>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "forumlens/error.hpp"
#include "forumlens/version.hpp"
#include "run.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kConfig = 2, kData = 3, kNumerical = 4 };

int report(std::string_view name, std::string_view kind, std::string_view message, int code) {
  nlohmann::json e{{"error", name}, {"kind", kind}, {"message", message}, {"exit_code", code}};
  std::cerr << e.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forumlens: forum thread generation, classification, ranking and activity statistics"};
  app.set_version_flag("--version", std::string(forumlens::kVersion));
  app.require_subcommand(1);
  forumlens::cli::register_gen(app);
  forumlens::cli::register_ingest(app);
  forumlens::cli::register_classify(app);
  forumlens::cli::register_topics(app);
  forumlens::cli::register_rank(app);
  forumlens::cli::register_compare(app);
  forumlens::cli::register_stats(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(e.get_name(), "config", e.what(), kConfig);
  } catch (const forumlens::Error& e) {
    switch (e.kind()) {
      case forumlens::ErrorKind::Config: return report(e.name(), "config", e.what(), kConfig);
      case forumlens::ErrorKind::Data: return report(e.name(), "data", e.what(), kData);
      case forumlens::ErrorKind::Numerical: return report(e.name(), "numerical", e.what(), kNumerical);
    }
  } catch (const nlohmann::json::exception& e) {
    return report("JsonError", "data", e.what(), kData);
  } catch (const std::filesystem::filesystem_error& e) {
    return report("IoError", "config", e.what(), kConfig);
  } catch (const std::exception& e) {
    return report("InternalError", "internal", e.what(), kInternal);
  }
  return kOk;
}
