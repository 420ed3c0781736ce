// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "flatfold/flatfold.hpp"
#include "flatfold_cli.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace flatfold;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run_cli(args, out, err);
  if (code) *code = c;
  return out.str() + err.str();
}

std::vector<AngleSequence> build_corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<AngleSequence> out;
  for (std::size_t i = 0; i < 240; ++i) {
    const std::size_t degree = 2 * (1 + i % 4);
    out.push_back(corpus::random_kawasaki_sequence(rng, degree, i % 3 != 2));
  }
  return out;
}

Outcome criterion1() {
  const auto text = cli_out({"count", "90,90,90,90"});
  const auto direct = vertex::count_mv({90, 90, 90, 90}).count;
  return {text == "8\n" && direct == 8, "count 90,90,90,90 -> " + text.substr(0, text.size() - 1)};
}

Outcome criterion2() {
  const auto r = vertex::count_mv({20, 10, 40, 50, 60, 60, 60, 60});
  std::string factors;
  for (const auto& s : r.trace) factors += to_string(s.factor) + " ";
  const bool ok = r.count == 48 && r.trace.size() == 2 && r.trace[0].factor == 2 && r.trace[1].factor == 3 &&
                  r.base_value == 8 && cli_out({"count", "20,10,40,50,60,60,60,60"}) == "48\n";
  return {ok, "count 48, factors " + factors + "base " + to_string(r.base_value)};
}

Outcome criterion3() {
  const AngleSequence v{20, 10, 40, 50, 60, 60, 60, 60};
  const auto b = vertex::bounds(v);
  const auto c = vertex::count_mv(v).count;
  const bool ok = b.first == 16 && b.second == 112 && b.first <= c && c <= b.second;
  return {ok, "bounds (" + to_string(b.first) + ", " + to_string(b.second) + "), count " + to_string(c)};
}

Outcome criterion4() {
  const std::vector<std::pair<AngleSequence, int>> cases{
      {{90, 90, 90, 90}, 8}, {{100, 80, 80, 100}, 6}, {{40, 60, 140, 120}, 4}};
  bool ok = true;
  std::string detail;
  for (const auto& [v, expected] : cases) {
    const auto fast = vertex::count_mv(v).count;
    const auto slow = oracle::oracle_count(v);
    ok = ok && fast == expected && slow == expected;
    detail += to_string(fast) + "/" + to_string(slow) + " ";
  }
  return {ok, "recursion/oracle " + detail};
}

Outcome criterion5(const std::vector<AngleSequence>& corpus) {
  std::size_t mismatches = 0;
  for (const auto& v : corpus) {
    if (oracle::oracle_count(v) != vertex::count_mv(v).count) ++mismatches;
  }
  return {mismatches == 0 && corpus.size() >= 200,
          std::to_string(corpus.size()) + " vertices, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion6(const std::vector<AngleSequence>& corpus) {
  std::size_t runs = 0, checks = 0, mismatches = 0;
  for (const auto& v : corpus) {
    const std::size_t n = v.size();
    for (const auto& run : vertex::maximal_runs(v)) {
      ++runs;
      const auto creases = run.creases(n);
      for (unsigned mask = 0; mask < (1u << creases.size()); ++mask) {
        std::vector<Label> full(n, Label::Valley);
        std::vector<Label> local;
        for (std::size_t j = 0; j < creases.size(); ++j) {
          full[creases[j]] = ((mask >> j) & 1u) ? Label::Mountain : Label::Valley;
          local.push_back(full[creases[j]]);
        }
        ++checks;
        if (oracle::oracle_run_valid(run.angle, run.k, local) !=
            vertex::run_validity(v, run, MVAssignment(full))) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0 && runs > 0, std::to_string(runs) + " runs, " + std::to_string(checks) +
                                           " labellings, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion7(const std::vector<AngleSequence>& corpus) {
  oracle::OracleOptions raw;
  raw.maekawa_prefilter = false;
  std::size_t valid = 0, exceptions = 0;
  for (const auto& v : corpus) {
    for (const auto& mv : oracle::oracle_enumerate(v, raw)) {
      ++valid;
      if (!vertex::maekawa_check(mv)) ++exceptions;
    }
  }
  std::mt19937_64 rng(77);
  std::size_t odd = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t degree = 1 + 2 * static_cast<std::size_t>(i % 5);
    const auto v = corpus::random_sequence(rng, degree, i % 2 == 0);
    ++odd;
    if (vertex::kawasaki(v)) ++exceptions;
  }
  return {exceptions == 0, std::to_string(valid) + " oracle-valid assignments, " + std::to_string(odd) +
                               " odd-degree sequences, " + std::to_string(exceptions) + " exceptions"};
}

Outcome criterion8() {
  std::mt19937_64 rng(88);
  std::size_t stars = 0, flat = 0, mismatches = 0;
  for (int i = 0; i < 240; ++i) {
    const std::size_t degree = 4 + static_cast<std::size_t>(i % 5);
    const auto v = degree % 2 == 0 && i % 3 != 0 ? corpus::random_kawasaki_sequence(rng, degree, true)
                                                 : corpus::random_sequence(rng, degree, true);
    std::uniform_real_distribution<double> offset(0, 360), shift(-5, 5);
    const double start = offset(rng);
    const double px = shift(rng), py = shift(rng);
    std::vector<pattern::ReflectionMap> maps;
    Rational direction = 0;
    for (std::size_t j = 0; j < degree; ++j) {
      maps.push_back(pattern::ReflectionMap::across_line(px, py, start + to_double(direction)));
      direction += v[j];
    }
    const bool expected = vertex::kawasaki(v);
    ++stars;
    if (expected) ++flat;
    if (pattern::trace_reflections(maps).is_identity != expected) ++mismatches;
  }
  return {mismatches == 0 && stars >= 100, std::to_string(stars) + " stars (" + std::to_string(flat) +
                                               " Kawasaki), " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion9() {
  std::mt19937_64 rng(99);
  std::size_t patterns = 0, failures = 0, interior = 0;
  while (patterns < 150) {
    auto p = flatfold::testing::random_planar_pattern(rng, 6);
    if (!p) continue;
    auto mv = flatfold::testing::random_local_maekawa_assignment(rng, *p);
    if (!mv) continue;
    const auto r = pattern::generalized_maekawa(p->with_assignment(*mv));
    ++patterns;
    interior += static_cast<std::size_t>(r.tally.up_vertices + r.tally.down_vertices);
    if (!r.holds.value_or(false)) ++failures;
  }
  return {failures == 0, std::to_string(patterns) + " patterns, " + std::to_string(interior) +
                             " interior vertices, " + std::to_string(failures) + " failures"};
}

Outcome criterion10() {
  const auto p = flatfold::testing::triangle_witness();
  const auto check = report::check_pattern(p);
  const auto j = report::to_json(check);
  const auto text = cli_out({"pattern", "check", std::string(FLATFOLD_PATTERN_DIR) + "/triangle_witness.json"});
  const bool ok = check.kawasaki.size() == 3 && report::all_local_checks_pass(check) &&
                  j.at("claim") == pattern::kNecessaryOnly &&
                  text.find("necessary only") != std::string::npos &&
                  text.find("all local checks pass") != std::string::npos;
  return {ok, "3 interior vertices pass Kawasaki and reflection traces; report says \"necessary only\""};
}

}  // namespace

int main() {
  const auto corpus = build_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"count 90,90,90,90 is 8", criterion1},
      {"count of the worked example is 48 = 2*3*8", criterion2},
      {"bounds of the worked example are (16, 112)", criterion3},
      {"counts 8/6/4 by recursion and oracle", criterion4},
      {"oracle count equals recursion over the corpus", [&] { return criterion5(corpus); }},
      {"run validity equals the restricted oracle", [&] { return criterion6(corpus); }},
      {"oracle-valid assignments satisfy Maekawa; odd degree never Kawasaki", [&] { return criterion7(corpus); }},
      {"reflection trace identity equals Kawasaki on random stars", criterion8},
      {"generalized Maekawa identity on random patterns", criterion9},
      {"non-sufficiency witness labelled necessary only", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s [%s] (%.0f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), ms);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
