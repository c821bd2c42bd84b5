#include "resint/gb_cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "resint/version.hpp"

namespace fs = std::filesystem;

namespace resint {

namespace {

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string jsonEscape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '"': r += "\\\""; break;
      case '\\': r += "\\\\"; break;
      case '\n': r += "\\n"; break;
      case '\t': r += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          snprintf(buf, sizeof buf, "\\u%04x", c);
          r += buf;
        } else {
          r += c;
        }
    }
  }
  return r;
}

}  // namespace

GbCache::GbCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) dir_.clear();  // cache is best effort
  }
}

std::string GbCache::defaultDir() {
  if (const char* d = std::getenv("RESINT_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/resint";
  if (const char* h = std::getenv("HOME")) return std::string(h) + "/.cache/resint";
  return "";
}

std::string GbCache::pathFor(const std::string& key, const char* ext) const {
  return dir_ + "/" + hex(fnv64(key)) + ext;
}

std::shared_ptr<const std::vector<std::string>> GbCache::load(const std::string& key) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  if (dir_.empty()) return nullptr;
  std::ifstream in(pathFor(key, ".txt"), std::ios::binary);
  if (!in) return nullptr;
  std::string header;
  std::size_t keyBytes = 0, nLines = 0;
  if (!std::getline(in, header) || header != "resint-cache 1") return nullptr;
  std::string word;
  if (!(in >> word >> keyBytes) || word != "key") return nullptr;
  in.get();  // newline
  std::string stored(keyBytes, '\0');
  in.read(stored.data(), static_cast<std::streamsize>(keyBytes));
  if (!in || stored != key) return nullptr;
  in.get();  // newline
  if (!(in >> word >> nLines) || word != "lines") return nullptr;
  in.get();
  auto lines = std::make_shared<std::vector<std::string>>();
  lines->reserve(nLines);
  std::string line;
  for (std::size_t i = 0; i < nLines; ++i) {
    if (!std::getline(in, line)) return nullptr;
    lines->push_back(line);
  }
  std::shared_ptr<const std::vector<std::string>> v = lines;
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(key, v);
  return v;
}

void GbCache::store(const std::string& key, std::vector<std::string> lines,
                    const std::string& fieldSig) {
  auto v = std::make_shared<const std::vector<std::string>>(std::move(lines));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = memo_.emplace(key, v);
    if (!inserted) return;  // first writer wins; values for one key agree anyway
  }
  if (dir_.empty()) return;
  std::ostringstream body;
  body << "resint-cache 1\n";
  body << "key " << key.size() << "\n" << key << "\n";
  body << "lines " << v->size() << "\n";
  for (const auto& l : *v) body << l << "\n";
  std::string base = pathFor(key, ".txt");
  std::string tmp = base + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << body.str();
  }
  std::error_code ec;
  fs::rename(tmp, base, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return;
  }
  std::ofstream man(pathFor(key, ".json"), std::ios::binary);
  if (man) {
    man << "{\"format\":\"resint-cache\",\"version\":\"" << kVersion << "\",\"field\":\""
        << jsonEscape(fieldSig) << "\",\"key_bytes\":" << key.size() << "}\n";
  }
}

}  // namespace resint
