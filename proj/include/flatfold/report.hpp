#pragma once

#include "flatfold/io.hpp"
#include "flatfold/pattern.hpp"
#include "flatfold/vertex.hpp"

#include "json.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace flatfold::report {

using json = nlohmann::json;

inline json angles_json(const AngleSequence& v) {
  json out = json::array();
  for (const auto& a : v.angles()) out.push_back(to_string(a.degrees()));
  return out;
}

inline const char* kind_name(SurfaceKind k) { return k == SurfaceKind::Flat ? "flat" : "cone"; }

// Indices in reports are 1-based, matching crease names l1..l2n.
inline json count_json(const CountResult& r) {
  json trace = json::array();
  for (const auto& step : r.trace) {
    trace.push_back({{"start", step.start + 1},
                     {"run_length", step.run_length},
                     {"factor", to_string(step.factor)},
                     {"residual", angles_json(step.residual)}});
  }
  return {{"count", to_string(r.count)},
          {"base_value", to_string(r.base_value)},
          {"bounds", {{"lower", to_string(r.bounds.first)}, {"upper", to_string(r.bounds.second)}}},
          {"trace", trace}};
}

struct AnalysisReport {
  std::string input;
  AngleSequence angles;
  bool kawasaki = false;
  std::optional<Rational> alternating_sum;
  std::optional<std::pair<BigInt, BigInt>> bounds;
  std::optional<CountResult> count;
  std::optional<double> timing_ms;
};

inline AnalysisReport analyze(const std::string& input, const AngleSequence& v) {
  AnalysisReport r{input, v, vertex::kawasaki(v), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (v.even()) {
    r.alternating_sum = vertex::alternating_sum(v);
    r.bounds = vertex::bounds(v);
  }
  if (r.kawasaki) r.count = vertex::count_mv(v);
  return r;
}

inline json to_json(const AnalysisReport& r) {
  json out;
  out["input"] = r.input;
  out["angles"] = angles_json(r.angles);
  out["degree"] = r.angles.size();
  out["even_degree"] = r.angles.even();
  out["total"] = to_string(r.angles.total());
  out["surface"] = kind_name(r.angles.kind());
  out["kawasaki"] = r.kawasaki;
  out["alternating_sum"] = r.alternating_sum ? json(to_string(*r.alternating_sum)) : json(nullptr);
  out["bounds"] = r.bounds ? json{{"lower", to_string(r.bounds->first)},
                                  {"upper", to_string(r.bounds->second)}}
                           : json(nullptr);
  if (r.count) {
    out["count"] = count_json(*r.count);
  } else {
    out["count"] = {{"count", "0"}, {"reason", "not flat-foldable: Kawasaki fails"}};
  }
  if (r.timing_ms) out["timing_ms"] = *r.timing_ms;
  return out;
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "angles:    " << r.angles.to_string() << "\n";
  os << "degree:    " << r.angles.size() << (r.angles.even() ? " (even)" : " (odd)") << "\n";
  os << "total:     " << to_string(r.angles.total()) << " (" << kind_name(r.angles.kind()) << ")\n";
  os << "kawasaki:  " << (r.kawasaki ? "holds" : "fails");
  if (r.alternating_sum) os << " (alternating sum " << to_string(*r.alternating_sum) << ")";
  os << "\n";
  if (r.bounds) {
    os << "bounds:    " << to_string(r.bounds->first) << " <= C <= " << to_string(r.bounds->second) << "\n";
  }
  if (!r.count) {
    os << "count:     0 (not flat-foldable)\n";
  } else {
    const auto& c = *r.count;
    os << "count:     " << to_string(c.count) << "\n";
    os << "trace:\n";
    std::string product;
    for (const auto& step : c.trace) {
      os << "  run at sector " << step.start + 1 << ", length " << step.run_length << ": x"
         << to_string(step.factor) << " -> " << step.residual.to_string() << "\n";
      product += to_string(step.factor) + " * ";
    }
    os << "  base: " << to_string(c.base_value) << "\n";
    os << "  " << product << to_string(c.base_value) << " = " << to_string(c.count) << "\n";
  }
  if (r.timing_ms) os << "time:      " << *r.timing_ms << " ms\n";
  return os.str();
}

// Local checks over a crease pattern. Every verdict here is a necessary
// condition only; the report never claims global foldability.
struct PatternCheck {
  std::vector<pattern::VertexKawasaki> kawasaki;
  std::vector<pattern::TraceResult> traces;  // parallel to `kawasaki`
  std::optional<pattern::MaekawaReport> maekawa;
};

inline PatternCheck check_pattern(const CreasePattern& p) {
  PatternCheck out;
  out.kawasaki = pattern::local_kawasaki_all(p);
  for (const auto& entry : out.kawasaki) {
    out.traces.push_back(pattern::reflection_trace(p, pattern::curve_around_vertex(p, entry.vertex)));
  }
  if (p.assignment()) out.maekawa = pattern::generalized_maekawa(p);
  return out;
}

inline bool all_local_checks_pass(const PatternCheck& c) {
  for (std::size_t i = 0; i < c.kawasaki.size(); ++i) {
    if (!c.kawasaki[i].passes || !c.traces[i].is_identity) return false;
  }
  return true;
}

inline json to_json(const PatternCheck& c) {
  json vertices = json::array();
  for (std::size_t i = 0; i < c.kawasaki.size(); ++i) {
    const auto& k = c.kawasaki[i];
    const auto& t = c.traces[i];
    vertices.push_back({{"vertex", k.vertex},
                        {"degree", k.degree},
                        {"angles", angles_json(k.angles)},
                        {"angles_exact", k.angles_exact},
                        {"split", k.split},
                        {"kawasaki", k.passes},
                        {"reflection_trace", {{"status", pattern::to_string(t.status)},
                                              {"identity", t.is_identity},
                                              {"deviation", t.deviation}}}});
  }
  json out;
  out["vertices"] = vertices;
  out["local_checks_pass"] = all_local_checks_pass(c);
  out["claim"] = pattern::kNecessaryOnly;
  out["note"] =
      "local Kawasaki and reflection traces are necessary conditions only; "
      "no global flat-foldability decision is made";
  if (c.maekawa) {
    const auto& m = *c.maekawa;
    out["generalized_maekawa"] = {
        {"M", m.tally.mountains},
        {"V", m.tally.valleys},
        {"M_i", m.tally.interior_mountains},
        {"V_i", m.tally.interior_valleys},
        {"U", m.tally.up_vertices},
        {"D", m.tally.down_vertices},
        {"lhs", m.lhs},
        {"rhs", m.rhs},
        {"holds", m.holds ? json(*m.holds) : json(nullptr)},
        {"violating_vertices", m.violating_vertices},
        {"degree_two_vertices", m.degree_two_vertices},
        {"convention", "degree-2 vertices count as up or down by their shared label"}};
  } else {
    out["generalized_maekawa"] = nullptr;
  }
  return out;
}

inline std::string to_text(const PatternCheck& c) {
  std::ostringstream os;
  os << "local checks (" << pattern::kNecessaryOnly << "):\n";
  for (std::size_t i = 0; i < c.kawasaki.size(); ++i) {
    const auto& k = c.kawasaki[i];
    os << "  vertex " << k.vertex << " degree " << k.degree << (k.split ? " [split]" : "")
       << ": kawasaki " << (k.passes ? "pass" : "FAIL") << (k.angles_exact ? "" : " (angles approximate)")
       << ", reflection trace " << pattern::to_string(c.traces[i].status) << "\n";
  }
  os << "all local checks " << (all_local_checks_pass(c) ? "pass" : "do not pass")
     << "; this is " << pattern::kNecessaryOnly << ", not a foldability claim\n";
  if (c.maekawa) {
    const auto& m = *c.maekawa;
    os << "generalized maekawa: M=" << m.tally.mountains << " V=" << m.tally.valleys
       << " M_i=" << m.tally.interior_mountains << " V_i=" << m.tally.interior_valleys
       << " U=" << m.tally.up_vertices << " D=" << m.tally.down_vertices << "\n";
    if (m.holds) {
      os << "  M-V = " << m.lhs << ", 2U-2D-M_i+V_i = " << m.rhs << ": "
         << (*m.holds ? "holds" : "DOES NOT HOLD") << "\n";
    } else {
      os << "  not evaluated; local Maekawa fails at vertices";
      for (auto v : m.violating_vertices) os << ' ' << v;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace flatfold::report
