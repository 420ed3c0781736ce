#pragma once

#include "flatfold/corpus.hpp"
#include "flatfold/io.hpp"
#include "flatfold/oracle.hpp"
#include "flatfold/report.hpp"
#include "flatfold/vertex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace flatfold::cli {

// Exit codes: analysis ran (whatever the verdicts), bad usage or input, and an
// internal disagreement between independent routes.
enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2 };

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

namespace detail {

using json = nlohmann::json;

struct Options {
  std::string format = "text";
  bool no_timing = false;
  std::vector<std::string> angle_words;
  std::string mv;
  bool force_oracle = false;
  bool fast = false;
  std::size_t oracle_limit = 10;
  std::string file;
  std::string svg_out;
  std::size_t samples = 200;
  unsigned long long seed = 20241016;
  std::size_t max_degree = 8;
  unsigned threads = 1;
};

// Crease count up to which `check` consults the oracle without --oracle.
inline constexpr std::size_t kDefaultOracleCreases = 8;
inline constexpr std::size_t kFastEnumerateLimit = 24;

inline std::string joined(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

inline void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto input = joined(o.angle_words);
  auto r = report::analyze(input, io::parse_angles(input));
  if (!o.no_timing) r.timing_ms = elapsed_ms(t0);
  emit(out, o, report::to_json(r), report::to_text(r));
  return kOk;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  const auto v = io::parse_angles(joined(o.angle_words));
  const bool flat = vertex::kawasaki(v);
  const std::string count = flat ? to_string(vertex::count_mv(v).count) : "0";
  json j{{"count", count}, {"kawasaki", flat}};
  emit(out, o, j, count + (flat ? "" : " (not flat-foldable)") + "\n");
  return kOk;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  const auto v = io::parse_angles(joined(o.angle_words));
  const auto mv = io::parse_mv(o.mv, v.size());
  const bool flat = vertex::kawasaki(v);
  json j{{"angles", report::angles_json(v)},
         {"assignment", mv.to_string()},
         {"kawasaki", flat},
         {"maekawa", vertex::maekawa_check(mv)}};
  std::optional<bool> crimp;
  if (flat) crimp = vertex::crimp_validity(v, mv);
  std::optional<bool> oracle_verdict;
  const bool run_oracle = o.force_oracle || v.size() <= kDefaultOracleCreases;
  if (run_oracle) {
    oracle::OracleOptions opts;
    opts.max_creases = o.oracle_limit;
    oracle_verdict = oracle::oracle_is_valid(v, mv, opts);
  }
  const bool crimp_valid = crimp.value_or(false);
  if (oracle_verdict && *oracle_verdict != crimp_valid) {
    throw InvariantViolation("crimp reduction and layer-order oracle disagree on " + v.to_string() +
                             " " + mv.to_string());
  }
  const bool valid = o.force_oracle ? *oracle_verdict : crimp_valid;
  j["crimp_valid"] = crimp_valid;
  j["oracle_valid"] = oracle_verdict ? json(*oracle_verdict) : json(nullptr);
  j["method"] = o.force_oracle ? "oracle" : "crimp";
  j["valid"] = valid;
  if (!flat) j["reason"] = "not flat-foldable: Kawasaki fails";

  std::ostringstream text;
  text << mv.to_string() << " on " << v.to_string() << ": " << (valid ? "valid" : "invalid");
  if (!flat) text << " (Kawasaki fails)";
  text << "\n  crimp: " << (crimp_valid ? "valid" : "invalid");
  text << "\n  oracle: " << (oracle_verdict ? (*oracle_verdict ? "valid" : "invalid") : "not run") << "\n";
  emit(out, o, j, text.str());
  return kOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto v = io::parse_angles(joined(o.angle_words));
  std::vector<MVAssignment> valid;
  const bool flat = vertex::kawasaki(v);
  if (o.fast) {
    if (v.size() > kFastEnumerateLimit) {
      throw CapacityError("--fast enumeration is limited to " + std::to_string(kFastEnumerateLimit) +
                          " creases");
    }
    if (flat) {
      const std::size_t n = v.size();
      for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        auto mv = MVAssignment::from_mask(n, mask);
        if (vertex::maekawa_check(mv) && vertex::crimp_validity(v, mv)) valid.push_back(std::move(mv));
      }
    }
  } else {
    oracle::OracleOptions opts;
    opts.max_creases = o.oracle_limit;
    opts.threads = o.threads;
    valid = oracle::oracle_enumerate(v, opts);
  }
  if (flat && BigInt(valid.size()) != vertex::count_mv(v).count) {
    throw InvariantViolation("enumeration found " + std::to_string(valid.size()) +
                             " assignments but the recursion counts " +
                             to_string(vertex::count_mv(v).count));
  }
  json list = json::array();
  std::string text;
  for (const auto& mv : valid) {
    list.push_back(mv.to_string());
    text += mv.to_string() + "\n";
  }
  text += std::to_string(valid.size()) + " valid assignments\n";
  emit(out, o, {{"angles", report::angles_json(v)}, {"method", o.fast ? "crimp" : "oracle"},
                {"assignments", list}, {"count", std::to_string(valid.size())}},
       text);
  return kOk;
}

inline int cmd_pattern_check(const Options& o, std::ostream& out) {
  const auto p = io::read_pattern_file(o.file);
  const auto c = report::check_pattern(p);
  emit(out, o, report::to_json(c), report::to_text(c));
  return kOk;
}

inline int cmd_pattern_svg(const Options& o, std::ostream& out) {
  const auto p = io::read_pattern_file(o.file);
  io::emit_svg(p, o.svg_out);
  emit(out, o, {{"written", o.svg_out}, {"creases", p.creases().size()}},
       "wrote " + o.svg_out + "\n");
  return kOk;
}

inline int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::size_t vertices = 0, assignments = 0;
  std::vector<std::string> mismatches;
  for (std::size_t s = 0; s < o.samples; ++s) {
    const std::size_t degree = 2 * (1 + s % (o.max_degree / 2));
    const auto v = corpus::random_kawasaki_sequence(rng, degree, s % 2 == 0);
    ++vertices;
    const auto fast = vertex::count_mv(v).count;
    const auto slow = oracle::oracle_count(v, {o.oracle_limit, true, o.threads});
    if (fast != slow) {
      mismatches.push_back(v.to_string() + ": recursion " + to_string(fast) + ", oracle " + to_string(slow));
    }
    const auto model = oracle::fold_directions(v);
    for (unsigned long long mask = 0; mask < (1ULL << degree); ++mask) {
      const auto mv = MVAssignment::from_mask(degree, mask);
      ++assignments;
      if (vertex::crimp_validity(v, mv) != oracle::find_stacking(model, mv).has_value()) {
        mismatches.push_back(v.to_string() + " " + mv.to_string() + ": crimp and oracle disagree");
      }
    }
  }
  json j{{"vertices", vertices}, {"assignments", assignments}, {"seed", o.seed},
         {"mismatches", mismatches}, {"passed", mismatches.empty()}};
  std::ostringstream text;
  text << "selftest: " << vertices << " vertices, " << assignments << " assignments, "
       << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches) text << "  " << m << "\n";
  emit(out, o, j, text.str());
  return mismatches.empty() ? kOk : kInternal;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"flat-foldability analysis for single vertices and crease patterns", "flatfold"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", o.no_timing, "omit timing from reports");

  auto angles_arg = [&](CLI::App* sub) {
    sub->add_option("angles", o.angle_words, "angles, e.g. \"90,90,90,90\"")->required();
    sub->fallthrough();
  };
  auto* analyze = app.add_subcommand("analyze", "Kawasaki, parity, bounds and count with trace");
  angles_arg(analyze);
  auto* count = app.add_subcommand("count", "number of valid mountain-valley assignments");
  angles_arg(count);
  auto* check = app.add_subcommand("check", "validity of one mountain-valley assignment");
  angles_arg(check);
  check->add_option("--mv", o.mv, "labels such as MMVM, one per crease")->required();
  check->add_flag("--oracle", o.force_oracle, "decide with the exhaustive layer-order oracle");
  check->add_option("--oracle-limit", o.oracle_limit, "largest degree the oracle accepts");
  auto* enumerate = app.add_subcommand("enumerate", "list every valid assignment");
  angles_arg(enumerate);
  enumerate->add_flag("--fast", o.fast, "filter with crimp reduction instead of the oracle");
  enumerate->add_option("--oracle-limit", o.oracle_limit, "largest degree the oracle accepts");
  enumerate->add_option("--threads", o.threads, "oracle worker threads");

  auto* pattern = app.add_subcommand("pattern", "crease pattern checks");
  pattern->require_subcommand(1);
  pattern->fallthrough();
  auto* pcheck = pattern->add_subcommand("check", "local Kawasaki, reflection traces, generalized Maekawa");
  pcheck->add_option("file", o.file, "pattern JSON file")->required();
  pcheck->fallthrough();
  auto* psvg = pattern->add_subcommand("svg", "draw the pattern as SVG");
  psvg->add_option("file", o.file, "pattern JSON file")->required();
  psvg->add_option("-o,--output", o.svg_out, "output SVG path")->required();
  psvg->fallthrough();

  auto* selftest = app.add_subcommand("selftest", "cross-check the recursion against the oracle");
  selftest->add_option("--samples", o.samples, "number of random vertices");
  selftest->add_option("--seed", o.seed, "random seed");
  selftest->add_option("--max-degree", o.max_degree, "largest even degree sampled")
      ->check(CLI::IsMember({2, 4, 6, 8, 10}));
  selftest->add_option("--threads", o.threads, "oracle worker threads");
  selftest->fallthrough();

  std::vector<const char*> argv{"flatfold"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) return detail::cmd_analyze(o, out);
    if (count->parsed()) return detail::cmd_count(o, out);
    if (check->parsed()) return detail::cmd_check(o, out);
    if (enumerate->parsed()) return detail::cmd_enumerate(o, out);
    if (pcheck->parsed()) return detail::cmd_pattern_check(o, out);
    if (psvg->parsed()) return detail::cmd_pattern_svg(o, out);
    if (selftest->parsed()) return detail::cmd_selftest(o, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace flatfold::cli
