#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace resint {

// Two-level cache for expensive basis computations: a process-wide memo and an
// optional on-disk store. Values are opaque line vectors; callers serialize.
// Disk entries keep the full key text, so a hash collision is only a miss.
class GbCache {
 public:
  GbCache() = default;                     // memory only
  explicit GbCache(std::string dir);       // plus disk persistence ("" = memory only)

  // $RESINT_CACHE_DIR, else ${XDG_CACHE_HOME:-$HOME/.cache}/resint
  static std::string defaultDir();

  std::shared_ptr<const std::vector<std::string>> load(const std::string& key);
  void store(const std::string& key, std::vector<std::string> lines,
             const std::string& fieldSig);

 private:
  std::string pathFor(const std::string& key, const char* ext) const;

  std::string dir_;
  std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const std::vector<std::string>>> memo_;
};

}  // namespace resint
