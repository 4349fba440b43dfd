#pragma once

// JSON documents (schema version 1). Rationals are always strings "p/q" or "p".

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "llf/predicates.hpp"
#include "llf/sweeps.hpp"

namespace llf {

using json = nlohmann::json;

inline constexpr int json_schema_version = 1;

inline void to_json(json& j, const CQ& z) { j = json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }
inline void from_json(const json& j, CQ& z) {
  z.re = parse_qq(j.at("re").get<std::string>());
  z.im = parse_qq(j.at("im").get<std::string>());
}

inline void to_json(json& j, const RootOfUnity& z) { j = json{{"order", z.order()}, {"index", z.index()}}; }
inline void from_json(const json& j, RootOfUnity& z) {
  z = RootOfUnity(j.at("order").get<std::int64_t>(), j.at("index").get<std::int64_t>());
}

inline json qq_json(const QQ& q) { return to_string(q); }
inline QQ qq_from(const json& j) { return parse_qq(j.get<std::string>()); }

inline void to_json(json& j, const Atom& a) {
  if (auto* g = std::get_if<GammaR>(&a))
    j = json{{"kind", "GAMMA_R"}, {"mu", g->mu}};
  else if (auto* g = std::get_if<GammaC>(&a))
    j = json{{"kind", "GAMMA_C"}, {"mu", g->mu}};
  else {
    const auto& e = std::get<Euler>(a);
    j = json{{"kind", "EULER"}, {"c", qq_json(e.c)}, {"zeta", e.zeta}};
  }
  j["text"] = to_string(a);
}

inline void from_json(const json& j, Atom& a) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "GAMMA_R")
    a = GammaR{j.at("mu").get<CQ>()};
  else if (kind == "GAMMA_C")
    a = GammaC{j.at("mu").get<CQ>()};
  else if (kind == "EULER")
    a = Euler{qq_from(j.at("c")), j.at("zeta").get<RootOfUnity>()};
  else
    throw InvalidParameter("unknown atom kind '" + kind + "'");
}

inline json terms_json(const std::vector<AtomTerm>& terms) {
  json arr = json::array();
  for (const auto& [atom, k] : terms) arr.push_back(json{{"atom", atom}, {"mult", k}});
  return arr;
}

inline std::vector<AtomTerm> terms_from(const json& arr) {
  std::vector<AtomTerm> out;
  for (const auto& t : arr) out.emplace_back(t.at("atom").get<Atom>(), t.at("mult").get<int>());
  return out;
}

inline void to_json(json& j, const PoleReport& r) {
  j = json{{"s", qq_json(r.s)},
           {"order", r.order},
           {"contributors", terms_json(r.contributors)},
           {"opaque_degraded", r.opaque_degraded}};
}
inline void from_json(const json& j, PoleReport& r) {
  r.s = qq_from(j.at("s"));
  r.order = j.at("order").get<int>();
  r.contributors = terms_from(j.at("contributors"));
  r.opaque_degraded = j.at("opaque_degraded").get<bool>();
}

inline void to_json(json& j, const ThetaCertificate& c) {
  j = json{{"certified", c.certified},
           {"reason", c.reason},
           {"sigma_pole_at_half", c.sigma_pole_at_half},
           {"dual_pole_at_half", c.dual_pole_at_half}};
}
inline void from_json(const json& j, ThetaCertificate& c) {
  c.certified = j.at("certified").get<bool>();
  c.reason = j.at("reason").get<std::string>();
  c.sigma_pole_at_half = j.at("sigma_pole_at_half").get<PoleReport>();
  c.dual_pole_at_half = j.at("dual_pole_at_half").get<PoleReport>();
}

struct PoleEntry {
  QQ s;
  int order = 0;
  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

/// Output document of the lfactor, pole, rs and theta-check commands.
struct JsonReport {
  int version = json_schema_version;
  std::string command;
  std::vector<std::string> input;
  std::vector<AtomTerm> lfactor;
  std::vector<PoleEntry> poles;
  std::optional<ThetaCertificate> certificate;
  std::vector<std::string> flags;

  friend bool operator==(const JsonReport&, const JsonReport&) = default;
};

inline void to_json(json& j, const JsonReport& r) {
  json poles = json::array();
  for (const auto& p : r.poles) poles.push_back(json{{"s", qq_json(p.s)}, {"order", p.order}});
  j = json{{"version", r.version},
           {"command", r.command},
           {"input", r.input},
           {"lfactor", terms_json(r.lfactor)},
           {"poles", poles},
           {"certificate", r.certificate ? json(*r.certificate) : json(nullptr)},
           {"flags", r.flags}};
}

inline void from_json(const json& j, JsonReport& r) {
  r.version = j.at("version").get<int>();
  if (r.version != json_schema_version) throw InvalidParameter("unsupported report version");
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input").get<std::vector<std::string>>();
  r.lfactor = terms_from(j.at("lfactor"));
  r.poles.clear();
  for (const auto& p : j.at("poles")) r.poles.push_back({qq_from(p.at("s")), p.at("order").get<int>()});
  if (j.at("certificate").is_null())
    r.certificate.reset();
  else
    r.certificate = j.at("certificate").get<ThetaCertificate>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
}

inline Field field_from(const std::string& s) {
  for (Field f : {Field::real, Field::complex, Field::nonarch})
    if (to_string(f) == s) return f;
  throw InvalidParameter("unknown field '" + s + "'");
}

inline void to_json(json& j, const GridSpec& g) {
  json cs = json::array();
  for (const auto& c : g.c_values) cs.push_back(qq_json(c));
  j = json{{"field", std::string(to_string(g.field))},
           {"m_values", g.m_values},
           {"r_values", g.r_values},
           {"c_values", cs},
           {"zeta_orders", g.zeta_orders},
           {"max_length", g.max_length},
           {"max_blocks", g.max_blocks},
           {"opaque_degrees", g.opaque_degrees},
           {"include_ramified", g.include_ramified}};
}

inline void from_json(const json& j, GridSpec& g) {
  g.field = field_from(j.at("field").get<std::string>());
  g.m_values = j.at("m_values").get<std::vector<int>>();
  g.r_values = j.at("r_values").get<std::vector<CQ>>();
  g.c_values.clear();
  for (const auto& c : j.at("c_values")) g.c_values.push_back(qq_from(c));
  g.zeta_orders = j.at("zeta_orders").get<std::vector<int>>();
  g.max_length = j.at("max_length").get<int>();
  g.max_blocks = j.at("max_blocks").get<int>();
  g.opaque_degrees = j.at("opaque_degrees").get<std::vector<int>>();
  g.include_ramified = j.at("include_ramified").get<bool>();
}

inline void to_json(json& j, const Counterexample& c) {
  j = json{{"blocks", c.blocks}, {"reports", c.reports}, {"note", c.note}};
}
inline void from_json(const json& j, Counterexample& c) {
  c.blocks = j.at("blocks").get<std::vector<std::string>>();
  c.reports = j.at("reports").get<std::vector<PoleReport>>();
  c.note = j.at("note").get<std::string>();
}

/// Sweep report document; wall time is omitted when `timing` is false.
inline json sweep_json(const SweepReport& r, bool timing = true) {
  json j{{"version", json_schema_version},
         {"command", "sweep"},
         {"property", r.property},
         {"verdict", r.verdict()},
         {"mutation", std::string(to_string(r.mutation))},
         {"grid", r.grid},
         {"cases", r.cases},
         {"degraded_cases", r.degraded_cases},
         {"counterexamples", r.counterexamples}};
  if (timing) j["wall_time_s"] = r.wall_time_s;
  return j;
}

inline void to_json(json& j, const SweepReport& r) { j = sweep_json(r, true); }

inline void from_json(const json& j, SweepReport& r) {
  if (j.at("version").get<int>() != json_schema_version) throw InvalidParameter("unsupported report version");
  r.property = j.at("property").get<std::string>();
  auto m = parse_mutation(j.at("mutation").get<std::string>());
  if (!m) throw InvalidParameter("unknown mutation");
  r.mutation = *m;
  r.grid = j.at("grid").get<GridSpec>();
  r.cases = j.at("cases").get<long long>();
  r.degraded_cases = j.at("degraded_cases").get<long long>();
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.wall_time_s = j.value("wall_time_s", 0.0);
}

}  // namespace llf
