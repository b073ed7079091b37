#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"

#include "endok/iso.hpp"
#include "endok/strat.hpp"

namespace endok {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "endok-report/1";

using json = nlohmann::json;

/// Exit codes of the command line tool.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kUnknown = 3, kSoundness = 4 };

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::string input_digest;
  std::vector<json> records;
  std::optional<double> millis;
  int exit_code = kOk;
};

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx, md, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error("SHA-256 digest failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

inline json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    a.push_back(row);
  }
  return a;
}

inline json to_json(const Verdict& v) {
  json j = {{"status", to_string(v.status)}, {"reason", v.reason}};
  if (v.degree) j["degree"] = *v.degree;
  if (v.value) j["value"] = *v.value;
  if (v.status == Certified::Unknown) j["bound"] = v.bound;
  return j;
}

inline json verdict_record(const std::string& name, const Verdict& v) {
  json j = to_json(v);
  j["record"] = "verdict";
  j["name"] = name;
  return j;
}

inline json to_json(const PdStatus& p) {
  json j = {{"status", p.str()}};
  switch (p.kind) {
    case PdStatus::Kind::FiniteLength: j["kind"] = "FiniteLength"; j["length"] = p.length; break;
    case PdStatus::Kind::PeriodicHenceInfinite: j["kind"] = "PeriodicHenceInfinite"; j["from"] = p.from; j["to"] = p.to; break;
    default: j["kind"] = "UnknownBeyond"; j["bound"] = p.bound;
  }
  return j;
}

inline json tor_record(const std::string& name, const TorProfile& p) {
  json deg = json::array();
  for (auto [k, d] : p.degrees) deg.push_back({{"j", k}, {"dim", d}});
  return {{"record", "tor"}, {"name", name}, {"degrees", deg}, {"status", p.status_str()},
          {"resolution", to_json(p.resolution_status)}};
}

inline json to_json(const ConditionResult& c) {
  json j = {{"holds", c.holds}};
  if (c.holds) {
    j["witness"] = to_json(c.witness);
  } else {
    j["failed"] = c.failed;
    j["certificate"] = to_json(c.failing_vector);
  }
  return j;
}

inline json covariance_record(const std::string& name, const CovarianceReport& r) {
  return {{"record", "covariance"},
          {"name", name},
          {"covariant", to_json(r.covariant)},
          {"x_covariant", to_json(r.x_covariant)},
          {"contravariant", to_json(r.contravariant)},
          {"y_contravariant", to_json(r.y_contravariant)}};
}

inline json k0_record(const std::string& name, const K0Report& k) {
  return {{"record", "k0"},          {"algebra", name},          {"rank", k.rank},
          {"classes", k.class_labels}, {"simples", k.simple_count}, {"blocks", k.block_count},
          {"cartan", k.cartan}};
}

inline json decomposition_record(const DecompositionVerdict& v) {
  json hyps = json::array();
  for (const auto& h : v.hypotheses) {
    json j = to_json(h.verdict);
    j["name"] = h.name;
    hyps.push_back(j);
  }
  json rhs = json::array();
  for (const auto& t : v.rhs) rhs.push_back({{"name", t.name}, {"rank", t.rank}});
  return {{"record", "decomposition"},
          {"theorem", v.theorem},
          {"scope", "rank-level"},
          {"hypotheses", hyps},
          {"lhs", {{"name", v.lhs.name}, {"rank", v.lhs.rank}}},
          {"rhs", rhs},
          {"rhs_total", v.rhs_total()},
          {"equation", v.equation()},
          {"equation_holds", v.equation_holds},
          {"classification", to_string(v.classification)},
          {"notes", v.notes}};
}

inline json chain_record(const StratChain& c) {
  json stages = json::array();
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto& s = c.stages[i];
    stages.push_back({{"stage", i + 1},
                      {"idempotent", s.algebra->element_to_string(s.idempotent)},
                      {"quotient_dim", s.algebra->dim()},
                      {"ideal_dim", s.ideal.dim()},
                      {"ideal_in_r_dim", s.ideal_in_r.dim()},
                      {"delta_dim", s.delta.dim()},
                      {"end_delta_dim", s.end_delta->dim()},
                      {"end_delta_division", s.division}});
  }
  return {{"record", "stratification"}, {"length", c.length()}, {"complete", c.complete},
          {"maximal", c.maximal},      {"explored", c.explored}, {"quasi_hereditary", c.quasi_hereditary()},
          {"stages", stages}};
}

inline json iso_record(const std::string& a, const std::string& b, const AlgebraIso& r) {
  json j = {{"record", "iso"}, {"source", a}, {"target", b}, {"status", to_string(r.status)}};
  if (r.status == Certified::Yes) j["map"] = to_json(r.map);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline json error_record(const std::string& kind, const std::string& what) {
  return {{"record", "error"}, {"kind", kind}, {"message", what}};
}

inline json header_record(const Report& r) {
  return {{"record", "header"}, {"schema", kReportSchema},       {"tool", "endok"},
          {"version", kToolVersion}, {"command", r.command},      {"seed", r.seed},
          {"input_digest", r.input_digest.empty() ? "" : "sha256:" + r.input_digest}, {"scope", "rank-level"}};
}

inline json summary_record(const Report& r) {
  return {{"record", "summary"}, {"records", r.records.size()}, {"exit", r.exit_code}};
}

/// Line-delimited JSON: header, one line per record, summary, and timing
/// only when it was measured.
inline std::string emit_machine(const Report& r) {
  std::string out = header_record(r).dump() + "\n";
  for (const auto& rec : r.records) out += rec.dump() + "\n";
  out += summary_record(r).dump() + "\n";
  if (r.millis) out += json{{"record", "timing"}, {"millis", *r.millis}}.dump() + "\n";
  return out;
}

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void human_fields(std::ostringstream& out, const json& rec, const std::string& indent) {
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    if (it.key() == "record") continue;
    const json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      human_fields(out, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << it.key() << ":\n";
      for (const auto& e : v) {
        out << indent << "  -\n";
        human_fields(out, e, indent + "    ");
      }
    } else {
      out << indent << std::left << std::setw(18) << it.key() << " " << (v.is_array() ? v.dump() : scalar_text(v))
          << "\n";
    }
  }
}

}  // namespace detail

/// Human rendering of the same records, one block per record.
inline std::string emit_human(const Report& r) {
  std::ostringstream out;
  out << "endok " << kToolVersion << " (" << kReportSchema << ", rank-level)\n";
  out << "command " << r.command << "  seed " << r.seed;
  if (!r.input_digest.empty()) out << "  input sha256:" << r.input_digest;
  out << "\n";
  for (const auto& rec : r.records) {
    out << "\n[" << rec.value("record", "?") << "]";
    if (rec.contains("theorem")) out << " " << rec["theorem"].get<std::string>();
    if (rec.contains("name")) out << " " << detail::scalar_text(rec["name"]);
    out << "\n";
    if (rec.value("record", "") == "decomposition")
      out << "  " << rec["equation"].get<std::string>() << "  " << rec["classification"].get<std::string>() << "\n";
    detail::human_fields(out, rec, "  ");
  }
  out << "\nexit " << r.exit_code << "\n";
  if (r.millis) out << "time " << std::fixed << std::setprecision(1) << *r.millis << " ms\n";
  return out.str();
}

inline std::string emit_report(const Report& r, const std::string& format) {
  return format == "machine" ? emit_machine(r) : emit_human(r);
}

}  // namespace endok
