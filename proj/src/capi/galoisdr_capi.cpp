#include "galoisdr/galoisdr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "app/cache.hpp"
#include "app/check.hpp"
#include "app/fields.hpp"
#include "app/reports.hpp"
#include "exact/poly_io.hpp"

using namespace galoisdr;

struct gdr_ambient {
  AmbientPtr ambient;
  bool cache_hit = false;
};

struct gdr_ring {
  CoordinateRingPtr ring;
};

namespace {

thread_local std::string g_error;
thread_local std::vector<std::string> g_warnings;

gdr_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return GDR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return GDR_PARSE_ERROR;
    case ErrorCode::DegreeCapExceeded: return GDR_DEGREE_CAP_EXCEEDED;
    case ErrorCode::NotAnEmbedding: return GDR_NOT_AN_EMBEDDING;
    case ErrorCode::NoEmbedding: return GDR_NO_EMBEDDING;
    case ErrorCode::RamifiedOrBadPrime: return GDR_RAMIFIED_OR_BAD_PRIME;
    case ErrorCode::RamifiedInfinitePlace: return GDR_RAMIFIED_INFINITE_PLACE;
    case ErrorCode::InconsistentDescent: return GDR_INCONSISTENT_DESCENT;
    case ErrorCode::AmbientMismatch: return GDR_AMBIENT_MISMATCH;
    case ErrorCode::CorruptCache: return GDR_CORRUPT_CACHE;
    case ErrorCode::IoError: return GDR_IO_ERROR;
    case ErrorCode::Internal: return GDR_INTERNAL;
  }
  return GDR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into a status and g_error.
template <class F>
gdr_status guarded(F&& body) {
  g_error.clear();
  g_warnings.clear();
  try {
    body();
    return GDR_OK;
  } catch (const GaloisError& e) {
    g_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
  } catch (const std::exception& e) {
    g_error = e.what();
  }
  return GDR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::optional<QPoly> optional_poly(const char* s) {
  if (!s) return std::nullopt;
  return parse_polynomial(s);
}

template <class F>
gdr_status json_out(char** out, F&& make) {
  return guarded([&] {
    need(out, "output pointer");
    *out = nullptr;
    std::string s = make().dump();
    *out = dup(s);
    if (!*out) throw std::bad_alloc();
  });
}

}  // namespace

extern "C" {

const char* gdr_version(void) { return "1.0.0"; }

const char* gdr_status_name(gdr_status status) {
  static const char* const names[] = {"Ok",
                                      "InvalidArgument",
                                      "ParseError",
                                      "DegreeCapExceeded",
                                      "NotAnEmbedding",
                                      "NoEmbedding",
                                      "RamifiedOrBadPrime",
                                      "RamifiedInfinitePlace",
                                      "InconsistentDescent",
                                      "AmbientMismatch",
                                      "CorruptCache",
                                      "IoError",
                                      "Internal"};
  auto i = static_cast<unsigned>(status);
  return i < sizeof names / sizeof *names ? names[i] : "Unknown";
}

const char* gdr_last_error(void) { return g_error.c_str(); }
size_t gdr_warning_count(void) { return g_warnings.size(); }
const char* gdr_warning(size_t index) { return index < g_warnings.size() ? g_warnings[index].c_str() : nullptr; }
void gdr_string_free(char* s) { std::free(s); }

gdr_status gdr_parse_polynomial(const char* text, char** out_canonical) {
  return guarded([&] {
    need(text, "text");
    need(out_canonical, "output pointer");
    *out_canonical = dup(format_polynomial(parse_polynomial(text)));
  });
}

gdr_status gdr_ambient_new(const char* const* polys, size_t count, int max_degree, const char* cache_dir,
                           gdr_ambient** out) {
  std::vector<std::string> warnings;
  gdr_status st = guarded([&] {
    need(out, "output pointer");
    *out = nullptr;
    if (count == 0) fail(ErrorCode::InvalidArgument, "at least one polynomial is required");
    need(polys, "polys");
    if (max_degree < 1) fail(ErrorCode::InvalidArgument, "max_degree must be positive");
    std::vector<QPoly> ps;
    for (size_t i = 0; i < count; ++i) {
      need(polys[i], "polynomial");
      ps.push_back(parse_polynomial(polys[i]));
    }
    std::optional<std::string> dir;
    if (cache_dir && *cache_dir) dir = cache_dir;
    AmbientLoad load = load_ambient(ps, max_degree, dir);
    warnings = std::move(load.warnings);
    *out = new gdr_ambient{std::move(load.ambient), load.cache_hit};
  });
  g_warnings = std::move(warnings);
  return st;
}

void gdr_ambient_free(gdr_ambient* ambient) { delete ambient; }
int gdr_ambient_degree(const gdr_ambient* ambient) { return ambient ? ambient->ambient->degree() : 0; }
int gdr_ambient_cache_hit(const gdr_ambient* ambient) { return ambient && ambient->cache_hit ? 1 : 0; }

gdr_status gdr_ring_new(const gdr_ambient* ambient, const char* field, const char* over, gdr_ring** out) {
  return guarded([&] {
    need(out, "output pointer");
    *out = nullptr;
    need(ambient, "ambient");
    auto ext = select_extension(ambient->ambient, optional_poly(field), optional_poly(over));
    *out = new gdr_ring{build_coordinate_ring(ext)};
  });
}

void gdr_ring_free(gdr_ring* ring) { delete ring; }
int gdr_ring_dim(const gdr_ring* ring) { return ring ? ring->ring->dim() : 0; }

gdr_status gdr_split_report(const gdr_ambient* ambient, char** out_json) {
  return json_out(out_json, [&] {
    need(ambient, "ambient");
    return split_report(*ambient->ambient);
  });
}

gdr_status gdr_group_report(const gdr_ambient* ambient, char** out_json) {
  return json_out(out_json, [&] {
    need(ambient, "ambient");
    return group_report(*ambient->ambient);
  });
}

gdr_status gdr_coordinate_ring_report(const gdr_ring* ring, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    return coordinate_ring_report(ring->ring);
  });
}

gdr_status gdr_points_report(const gdr_ring* ring, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    return points_report(ring->ring);
  });
}

gdr_status gdr_dr_report(const gdr_ring* ring, int tower, int max_degree, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    return dr_report(ring->ring, tower != 0, max_degree);
  });
}

gdr_status gdr_restrict_report(const gdr_ring* source, const gdr_ambient* target, char** out_json) {
  return json_out(out_json, [&] {
    need(source, "source");
    need(target, "target");
    return restrict_report(source->ring->extension(), target->ambient);
  });
}

gdr_status gdr_frobenius_report(const gdr_ring* ring, uint64_t p, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    return frobenius_report(ring->ring, p);
  });
}

gdr_status gdr_frobenius_sweep_report(const gdr_ring* ring, uint64_t lo, uint64_t hi, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    if (lo > hi) fail(ErrorCode::InvalidArgument, "empty sweep range");
    return frobenius_sweep_report(ring->ring, lo, hi);
  });
}

gdr_status gdr_frobenius_infinity_report(const gdr_ring* ring, char** out_json) {
  return json_out(out_json, [&] {
    need(ring, "ring");
    return frobenius_infinity_report(ring->ring);
  });
}

gdr_status gdr_motive_report(const gdr_ambient* ambient, const char* scheme, char** out_json) {
  return json_out(out_json, [&] {
    need(ambient, "ambient");
    need(scheme, "scheme");
    return motive_report(ambient->ambient, parse_polynomial(scheme));
  });
}

gdr_status gdr_check_report(const char* suite, char** out_json, char** out_timing_json, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(out_json, "output pointer");
    *out_json = nullptr;
    if (out_timing_json) *out_timing_json = nullptr;
    json timing = json::object();
    json report = check_report(suite, timing);
    if (passed) *passed = check_report_passed(report) ? 1 : 0;
    *out_json = dup(report.dump());
    if (out_timing_json) *out_timing_json = dup(timing.dump());
  });
}

}  // extern "C"
