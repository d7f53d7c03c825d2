#include "forumlens/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <memory>

#include "forumlens/error.hpp"
#include "forumlens/kernels.hpp"
#include "forumlens/version.hpp"

namespace forumlens {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw Error(ErrorKind::Numerical, "HashError", "SHA-256 initialisation failed");
  }
  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_.get(), data, n); }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md, &len);
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(digits[md[i] >> 4]);
      out.push_back(digits[md[i] & 15]);
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "' for hashing");
  Sha256 h;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    h.update(buf, static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

Manifest::Manifest(std::string command) : command_(std::move(command)) {}

void Manifest::add_input(const std::filesystem::path& path) {
  inputs_.push_back({path.generic_string(), sha256_file(path)});
}

void Manifest::add_artifact(const std::filesystem::path& path, const std::filesystem::path& root) {
  artifacts_.push_back({path.lexically_relative(root).generic_string(), sha256_file(path)});
}

nlohmann::json Manifest::to_json() const {
  auto list = [](std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.path < b.path; });
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) out.push_back({{"path", e.path}, {"sha256", e.sha256}});
    return out;
  };
  return {{"tool", "forumlens"},
          {"version", kVersion},
          {"command", command_},
          {"isa", std::string(simd::isa_name(simd::active().isa))},
          {"config", config_},
          {"inputs", list(inputs_)},
          {"artifacts", list(artifacts_)}};
}

void Manifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write manifest '" + path.string() + "'");
  out << to_json().dump(2) << '\n';
}

}  // namespace forumlens
