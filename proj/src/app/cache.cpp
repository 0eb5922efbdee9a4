#include "app/cache.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "exact/poly_io.hpp"
#include "galois/serialize.hpp"

namespace galoisdr {

namespace fs = std::filesystem;

namespace {

std::vector<QPoly> canonical(const std::vector<QPoly>& polys) {
  std::vector<QPoly> out;
  for (const auto& f : polys) out.push_back(normalize_input_polynomial(f));
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    return format_polynomial(a) < format_polynomial(b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string ambient_cache_key(const std::vector<QPoly>& polys) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& f : canonical(polys)) {
    for (unsigned char c : format_polynomial(f) + ";") {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

fs::path AmbientCache::path_for(const std::vector<QPoly>& polys) const {
  return dir_ / ("ambient-" + ambient_cache_key(polys) + ".json");
}

std::optional<AmbientPtr> AmbientCache::load(const std::vector<QPoly>& polys) const {
  fs::path p = path_for(polys);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::CorruptCache, "cache file " + p.string() + " is not valid JSON");
  AmbientPtr n = ambient_from_json(j);
  // The stored field must be the one asked for.
  if (canonical(n->polys()) != canonical(polys)) {
    fail(ErrorCode::CorruptCache, "cache file " + p.string() + " holds different polynomials");
  }
  return n;
}

void AmbientCache::store(const std::vector<QPoly>& polys, const AmbientGaloisField& n) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create cache directory " + dir_.string());
  fs::path target = path_for(polys);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp.string());
    out << ambient_to_json(n).dump() << '\n';
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorCode::IoError, "cannot move cache file into place: " + target.string());
  }
}

AmbientLoad load_ambient(const std::vector<QPoly>& polys, int max_degree, const std::optional<std::string>& cache_dir) {
  AmbientLoad out;
  if (!cache_dir || cache_dir->empty()) {
    out.ambient = splitting_field(polys, max_degree);
    return out;
  }
  AmbientCache cache{fs::path(*cache_dir)};
  try {
    if (auto hit = cache.load(polys)) {
      if ((*hit)->degree() > max_degree) {
        fail(ErrorCode::DegreeCapExceeded, "splitting field degree " + std::to_string((*hit)->degree()) +
                                               " exceeds the cap " + std::to_string(max_degree));
      }
      out.ambient = *hit;
      out.cache_hit = true;
      return out;
    }
  } catch (const GaloisError& e) {
    if (e.code() != ErrorCode::CorruptCache) throw;
    out.warnings.push_back(std::string("CorruptCache: ") + e.what() + "; recomputing");
  }
  out.ambient = splitting_field(polys, max_degree);
  try {
    cache.store(polys, *out.ambient);
  } catch (const GaloisError& e) {
    out.warnings.push_back(std::string("cache write failed: ") + e.what());
  }
  return out;
}

}  // namespace galoisdr
