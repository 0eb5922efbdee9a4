#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galois/ambient.hpp"

namespace galoisdr {

/// 64-bit FNV-1a of the sorted canonical polynomial strings, as 16 hex digits.
std::string ambient_cache_key(const std::vector<QPoly>& polys);

/// On-disk store of splitting fields, one JSON file per key. Writes go to a
/// temporary file in the same directory and are renamed into place.
class AmbientCache {
 public:
  explicit AmbientCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const std::vector<QPoly>& polys) const;
  /// nullopt on a miss. A file that fails to parse or revalidate throws
  /// CorruptCache.
  std::optional<AmbientPtr> load(const std::vector<QPoly>& polys) const;
  void store(const std::vector<QPoly>& polys, const AmbientGaloisField& n) const;

 private:
  std::filesystem::path dir_;
};

struct AmbientLoad {
  AmbientPtr ambient;
  bool cache_hit = false;
  std::vector<std::string> warnings;
};

/// splitting_field with an optional cache. A corrupt entry is reported as a
/// warning and replaced by a fresh computation.
AmbientLoad load_ambient(const std::vector<QPoly>& polys, int max_degree, const std::optional<std::string>& cache_dir);

}  // namespace galoisdr
