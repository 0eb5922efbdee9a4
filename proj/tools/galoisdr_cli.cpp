// galoisdr: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "galoisdr/galoisdr.h"

using json = nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1.0";

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

struct Failure {
  std::string code;
  std::string message;
  int exit_code;
};

int exit_for(gdr_status s) {
  return s == GDR_INVALID_ARGUMENT || s == GDR_PARSE_ERROR ? kUsage : kDomain;
}

[[noreturn]] void raise(gdr_status s) { throw Failure{gdr_status_name(s), gdr_last_error(), exit_for(s)}; }

[[noreturn]] void usage(const std::string& message) { throw Failure{"UsageError", message, kUsage}; }

// Takes ownership of a C string from the library and parses it.
json take_json(char* s) {
  std::unique_ptr<char, void (*)(char*)> owned(s, gdr_string_free);
  return json::parse(owned.get());
}

template <class F>
json report(F&& call) {
  char* out = nullptr;
  gdr_status s = call(&out);
  if (s != GDR_OK) raise(s);
  return take_json(out);
}

using AmbientHandle = std::unique_ptr<gdr_ambient, void (*)(gdr_ambient*)>;
using RingHandle = std::unique_ptr<gdr_ring, void (*)(gdr_ring*)>;

struct Options {
  std::vector<std::string> polys;
  std::string field, over;
  int max_degree = 24;
  std::string cache_dir;
  std::string out;
  bool pretty = false;
  // subcommand specific
  std::vector<std::string> targets;
  std::optional<std::uint64_t> prime;
  std::string sweep;
  bool infinite = false;
  std::string scheme;
  bool tower = false;
  std::string suite = "all";
};

class Timer {
 public:
  void phase(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    if (!current_.empty()) timing_[current_] = ms(last_, now);
    current_ = name;
    last_ = now;
  }
  json finish() {
    phase("");
    timing_["total"] = ms(start_, std::chrono::steady_clock::now());
    return timing_;
  }
  json& extra() { return timing_; }

 private:
  static double ms(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now(), last_ = start_;
  std::string current_;
  json timing_ = json::object();
};

struct Context {
  const Options& opt;
  Timer& timer;
  std::vector<std::string>& warnings;

  // Parse every polynomial argument up front so bad input never reaches
  // the expensive stages.
  void validate_polys() const {
    std::vector<std::string> all = opt.polys;
    all.insert(all.end(), opt.targets.begin(), opt.targets.end());
    for (const auto* s : {&opt.field, &opt.over, &opt.scheme}) {
      if (!s->empty()) all.push_back(*s);
    }
    for (const auto& p : all) {
      char* canon = nullptr;
      gdr_status st = gdr_parse_polynomial(p.c_str(), &canon);
      if (st != GDR_OK) raise(st);
      gdr_string_free(canon);
    }
  }

  AmbientHandle ambient(const std::vector<std::string>& polys, const char* hit_key) const {
    if (polys.empty()) usage("--poly is required");
    std::vector<const char*> ptrs;
    for (const auto& p : polys) ptrs.push_back(p.c_str());
    gdr_ambient* a = nullptr;
    gdr_status st = gdr_ambient_new(ptrs.data(), ptrs.size(), opt.max_degree,
                                    opt.cache_dir.empty() ? nullptr : opt.cache_dir.c_str(), &a);
    for (std::size_t i = 0; i < gdr_warning_count(); ++i) warnings.push_back(gdr_warning(i));
    if (st != GDR_OK) raise(st);
    if (!opt.cache_dir.empty()) timer.extra()[hit_key] = gdr_ambient_cache_hit(a) == 1;
    return AmbientHandle(a, gdr_ambient_free);
  }

  RingHandle ring(const gdr_ambient* a) const {
    gdr_ring* r = nullptr;
    gdr_status st = gdr_ring_new(a, opt.field.empty() ? nullptr : opt.field.c_str(),
                                 opt.over.empty() ? nullptr : opt.over.c_str(), &r);
    if (st != GDR_OK) raise(st);
    return RingHandle(r, gdr_ring_free);
  }
};

std::pair<std::uint64_t, std::uint64_t> parse_sweep(const std::string& s) {
  static const std::regex re(R"(^\s*(\d{1,19})\s*\.\.\s*(\d{1,19})\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) usage("--sweep expects A..B, got '" + s + "'");
  std::uint64_t lo = std::stoull(m[1]), hi = std::stoull(m[2]);
  if (lo > hi) usage("--sweep range is empty");
  return {lo, hi};
}

// Everything except output plumbing, so identical work echoes identically.
json command_echo(const std::string& name, const Options& o) {
  json c = {{"name", name}};
  if (!o.polys.empty()) c["polys"] = o.polys;
  if (!o.field.empty()) c["field"] = o.field;
  if (!o.over.empty()) c["over"] = o.over;
  c["max_degree"] = o.max_degree;
  if (!o.targets.empty()) c["targets"] = o.targets;
  if (o.prime) c["prime"] = *o.prime;
  if (!o.sweep.empty()) c["sweep"] = o.sweep;
  if (o.infinite) c["infinite"] = true;
  if (!o.scheme.empty()) c["scheme"] = o.scheme;
  if (o.tower) c["tower"] = true;
  if (name == "check") c["suite"] = o.suite;
  return c;
}

// Returns the results payload and sets `exit_code` for non-error failures.
json run(const std::string& name, const Options& o, Context& ctx, int& exit_code) {
  ctx.timer.phase("parse");
  ctx.validate_polys();
  if (name == "check") {
    ctx.timer.phase("checks");
    char *out = nullptr, *timing = nullptr;
    int passed = 0;
    gdr_status st = gdr_check_report(o.suite.c_str(), &out, &timing, &passed);
    if (st != GDR_OK) raise(st);
    ctx.timer.extra()["checks"] = take_json(timing)["checks"];
    if (!passed) exit_code = kDomain;
    return take_json(out);
  }

  ctx.timer.phase("ambient");
  AmbientHandle a = ctx.ambient(o.polys, "cache_hit");
  if (name == "split") {
    ctx.timer.phase("report");
    return report([&](char** out) { return gdr_split_report(a.get(), out); });
  }
  if (name == "group") {
    ctx.timer.phase("report");
    return report([&](char** out) { return gdr_group_report(a.get(), out); });
  }
  if (name == "motive") {
    if (o.scheme.empty()) usage("motive requires --scheme");
    ctx.timer.phase("report");
    return report([&](char** out) { return gdr_motive_report(a.get(), o.scheme.c_str(), out); });
  }

  ctx.timer.phase("coordinate_ring");
  RingHandle r = ctx.ring(a.get());
  ctx.timer.phase("report");
  if (name == "coordinate-ring") return report([&](char** out) { return gdr_coordinate_ring_report(r.get(), out); });
  if (name == "points") return report([&](char** out) { return gdr_points_report(r.get(), out); });
  if (name == "dr") {
    return report([&](char** out) { return gdr_dr_report(r.get(), o.tower ? 1 : 0, o.max_degree, out); });
  }
  if (name == "restrict") {
    if (o.targets.empty()) usage("restrict requires --target");
    ctx.timer.phase("target");
    AmbientHandle t = ctx.ambient(o.targets, "target_cache_hit");
    ctx.timer.phase("report");
    return report([&](char** out) { return gdr_restrict_report(r.get(), t.get(), out); });
  }
  if (name == "frobenius") {
    int modes = (o.prime ? 1 : 0) + (o.sweep.empty() ? 0 : 1) + (o.infinite ? 1 : 0);
    if (modes != 1) usage("frobenius needs exactly one of -p, --sweep, --infinite");
    if (o.prime) return report([&](char** out) { return gdr_frobenius_report(r.get(), *o.prime, out); });
    if (o.infinite) return report([&](char** out) { return gdr_frobenius_infinity_report(r.get(), out); });
    auto [lo, hi] = parse_sweep(o.sweep);
    return report([&](char** out) { return gdr_frobenius_sweep_report(r.get(), lo, hi, out); });
  }
  usage("unknown subcommand " + name);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flattened key/value table. Arrays of scalars stay on one line.
void render(const json& v, const std::string& path, std::ostream& os) {
  auto all_scalar = [](const json& a) {
    for (const auto& x : a) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) render(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (v.is_array() && !all_scalar(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) render(v[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    std::string text;
    if (v.is_array()) {
      text = "[";
      for (std::size_t i = 0; i < v.size(); ++i) text += (i ? ", " : "") + scalar_text(v[i]);
      text += "]";
    } else {
      text = scalar_text(v);
    }
    os << std::left << std::setw(48) << path << ' ' << text << '\n';
  }
}

void render_pretty(const json& env, std::ostream& os) {
  os << "galoisdr " << env["command"]["name"].get<std::string>() << " (schema " << kSchemaVersion << ")\n";
  if (env.contains("error")) {
    os << "error: " << env["error"]["code"].get<std::string>() << ": " << env["error"]["message"].get<std::string>()
       << '\n';
    return;
  }
  const json& res = env["results"];
  if (env["command"]["name"] == "check") {
    for (const auto& c : res["checks"]) {
      const char* status = c["passed"] == true ? "PASS" : (c["blocking"] == true ? "FAIL" : "WARN");
      os << std::left << std::setw(6) << status << std::setw(28) << c["id"].get<std::string>()
         << c["description"].get<std::string>() << '\n';
    }
    os << "passed " << res["passed"] << ", failed " << res["failed"] << ", warnings " << res["warnings"] << '\n';
  } else {
    render(res, "", os);
  }
  for (const auto& w : env["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
}

void emit(const json& env, const Options& o) {
  std::string text;
  if (o.pretty) {
    std::ostringstream ss;
    render_pretty(env, ss);
    text = ss.str();
  } else {
    text = env.dump() + "\n";
  }
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) {
    std::cerr << "galoisdr: cannot write " << o.out << '\n';
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Galois, de Rham and Artin motive computations over Q", "galoisdr"};
  app.set_version_flag("--version", std::string(gdr_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  if (const char* env = std::getenv("GALOIS_CACHE")) o.cache_dir = env;
  app.add_option("--poly", o.polys, "Defining polynomial in x (repeatable)");
  app.add_option("--field", o.field, "Top field L: splitting field of this polynomial (default: all of N)");
  app.add_option("--over", o.over, "Base field K = Q(r) for the least root r of this polynomial (default: Q)");
  app.add_option("--max-degree", o.max_degree, "Cap on splitting field degree")->check(CLI::PositiveNumber);
  app.add_option("--ambient-cache", o.cache_dir, "Cache directory for splitting fields (default: $GALOIS_CACHE)");
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_flag("--pretty", o.pretty, "Human-readable table instead of JSON");

  app.add_subcommand("split", "Splitting field degree and Galois group");
  app.add_subcommand("group", "Group table, classes and subgroups");
  app.add_subcommand("coordinate-ring", "Basis of A(L/K) and its Hopf structure");
  app.add_subcommand("points", "L- and K-points of the algebraic Galois group");
  auto* restrict = app.add_subcommand("restrict", "Restriction maps into a larger field");
  restrict->add_option("--target", o.targets, "Polynomials defining the target field (repeatable)")->required();
  auto* frob = app.add_subcommand("frobenius", "Frobenius points at finite and infinite places");
  frob->add_option("-p,--prime", o.prime, "An unramified prime");
  frob->add_option("--sweep", o.sweep, "All primes in A..B");
  frob->add_flag("--infinite", o.infinite, "The real place");
  auto* motive = app.add_subcommand("motive", "Permutation motive of a finite etale scheme");
  motive->add_option("--scheme", o.scheme, "Squarefree polynomial f; the scheme is Spec Q[x]/(f)")->required();
  auto* dr = app.add_subcommand("dr", "Hopf axioms and etale decomposition of A(L/K)");
  dr->add_flag("--tower", o.tower, "Also build the truncated absolute group");
  auto* check = app.add_subcommand("check", "Run the built-in verification suites");
  check->add_option("--suite", o.suite, "all, acceptance or invariants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    json err = {{"schema_version", kSchemaVersion},
                {"error", {{"code", "UsageError"}, {"message", e.what()}}},
                {"warnings", json::array()}};
    std::cout << err.dump() << '\n';
    return kUsage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  Timer timer;
  std::vector<std::string> warnings;
  Context ctx{o, timer, warnings};
  json env = {{"schema_version", kSchemaVersion}, {"command", command_echo(name, o)}};
  int exit_code = kOk;
  try {
    env["results"] = run(name, o, ctx, exit_code);
  } catch (const Failure& f) {
    env["error"] = {{"code", f.code}, {"message", f.message}};
    exit_code = f.exit_code;
    std::cerr << "galoisdr: " << f.code << ": " << f.message << '\n';
  } catch (const std::exception& e) {
    env["error"] = {{"code", "Internal"}, {"message", e.what()}};
    exit_code = kDomain;
    std::cerr << "galoisdr: Internal: " << e.what() << '\n';
  }
  env["warnings"] = warnings;
  for (const auto& w : warnings) std::cerr << "galoisdr: warning: " << w << '\n';
  env["timing"] = timer.finish();
  emit(env, o);
  return exit_code;
}
