#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "endok/homalg.hpp"
#include "endok/iso.hpp"
#include "endok/ktheory.hpp"
#include "endok/report.hpp"
#include "endok/spec_io.hpp"
#include "endok/strat.hpp"

namespace endok {

struct RunOptions {
  std::size_t bound = 0;       ///< resolution bound, 0: 2 dim A
  std::size_t tor_bound = 10;
  std::size_t retries = 64;
  std::uint64_t seed = 0;
  std::size_t budget = 100000; ///< stratification search nodes
  std::string algebra, compare, e, ideal, morphism, thm;
  bool timing = false;

  Bounds bounds() const {
    Bounds b;
    b.resolution = bound;
    b.tor = tor_bound;
    b.search.retries = retries;
    b.search.seed = seed;
    return b;
  }
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze", "k0",     "check-ideal", "check-covariant", "tor",
                                              "stratify", "verify", "construct",   "corpus"};
  return names;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int worst(int a, int b) {
  auto rank = [](int c) { return c == kSoundness ? 4 : c == kInputError ? 3 : c == kUnknown ? 2 : c == kNegative ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

struct Session {
  const Workspace& w;
  const RunOptions& opt;
  Report& report;

  SearchOptions search() const { return opt.bounds().search; }

  std::string algebra_name() const { return opt.algebra.empty() ? w.default_algebra : opt.algebra; }
  const AlgebraPtr& algebra() const { return w.main_algebra(opt.algebra); }

  const AlgElement& idempotent() const {
    const AlgElement& e = w.element(opt.e);
    if (e.parent != algebra()) throw UsageError("element '" + opt.e + "' is not in " + algebra_name());
    if (!e.parent->is_idempotent(e.coords)) throw NotIdempotent();
    return e;
  }

  /// The ideal under test: --ideal, else A e A for --e.
  Subspace ideal() const {
    if (!opt.ideal.empty()) {
      const Ideal& i = w.ideal(opt.ideal);
      if (i.parent != algebra()) throw UsageError("ideal '" + opt.ideal + "' is not in " + algebra_name());
      return i.space;
    }
    if (!opt.e.empty()) return ideal_generated(algebra(), {idempotent().coords}).space;
    throw UsageError("this command needs --ideal or --e");
  }

  void add(json rec) { report.records.push_back(std::move(rec)); }
  void exit(int code) { report.exit_code = worst(report.exit_code, code); }

  void decomposition(const std::vector<DecompositionVerdict>& vs) {
    for (const auto& v : vs) {
      add(decomposition_record(v));
      if (v.classification == Classification::Inconclusive) exit(kUnknown);
      else if (v.classification != Classification::ConfirmsTheorem) exit(kNegative);
    }
  }

  void analyze() {
    const AlgebraPtr& a = algebra();
    json rec = {{"record", "algebra"},
                {"name", algebra_name()},
                {"field", a->field().name()},
                {"dim", a->dim()},
                {"commutative", a->is_commutative()},
                {"center_dim", center(*a).dim()},
                {"provenance", a->provenance().kind}};
    if (a->field().is_rationals()) {
      rec["radical_dim"] = radical(*a).dim();
      rec["radical_nilpotency"] = radical_nilpotency(*a);
      json prims = json::array();
      for (const auto& v : elements(primitive_idempotents(*a, search()))) prims.push_back(a->element_to_string(v));
      rec["primitive_idempotents"] = prims;
    }
    add(rec);
    if (a->field().is_rationals()) add(k0_record(algebra_name(), k0(a, search())));
    if (!opt.compare.empty()) {
      AlgebraIso r = algebra_iso(a, w.algebra(opt.compare), search());
      add(iso_record(algebra_name(), opt.compare, r));
      if (r.status == Certified::No) exit(kNegative);
      if (r.status == Certified::Unknown) exit(kUnknown);
    }
  }

  void k0_cmd() { add(k0_record(algebra_name(), k0(algebra(), search()))); }

  void check_ideal() {
    const AlgebraPtr& a = algebra();
    Subspace i = ideal();
    const Bounds b = opt.bounds();
    AlgebraPtr aop = opposite(*a);
    bool idem = product_span(*a, i, i) == i;
    add(verdict_record("idempotent ideal", Verdict::of(idem, idem ? "I^2 = I" : "I^2 != I")));
    add({{"record", "ideal"}, {"algebra", algebra_name()}, {"dim", i.dim()}, {"square_dim", product_span(*a, i, i).dim()},
         {"quotient_dim", a->dim() - i.dim()}});
    if (i.dim()) {
      add(verdict_record("projective (left)", projective_verdict(left_ideal_module(a, i).module, search(), "_A I")));
      add(verdict_record("projective (right)", projective_verdict(left_ideal_module(aop, i).module, search(), "I_A")));
    }
    auto q = quotient_modules(a, aop, i);
    Resolution rl = resolution(q.left, b.resolution_for(*a), search());
    Resolution rr = resolution(q.right, b.resolution_for(*a), search());
    add({{"record", "pd"}, {"name", "A/I (left)"}, {"status", to_json(rl.status)}});
    add({{"record", "pd"}, {"name", "A/I (right)"}, {"status", to_json(rr.status)}});
    if (!opt.e.empty()) {
      const Vec& e = idempotent().coords;
      Verdict h = is_homological_ideal(a, e, b.tor, search());
      add(verdict_record("homological", h));
      StratifyingReport s = is_stratifying(a, e, b.tor, search());
      add(verdict_record("stratifying", s.overall));
      add(verdict_record("stratifying: multiplication", s.multiplication));
      add(verdict_record("stratifying: Tor over eAe", s.tor));
      if (h.decided() && s.overall.decided() && h.status != s.overall.status)
        throw SoundnessViolation("homological and stratifying verdicts disagree");
      if (h.is_no()) exit(kNegative);
      else if (!h.decided()) exit(kUnknown);
    } else if (!idem) {
      exit(kNegative);
    }
  }

  void check_covariant() {
    if (opt.morphism.empty()) throw UsageError("check-covariant needs --morphism");
    const ModuleHom& f = w.morphism(opt.morphism);
    CovarianceReport c = check_covariance(f);
    add(covariance_record(opt.morphism, c));
    bool tr = is_trace(f.target, image(f.matrix)), weak = is_weak_trace(f.target, image(f.matrix));
    add(verdict_record("trace", Verdict::of(tr, tr ? "image is the trace of Y in X" : "image is not the trace of Y in X")));
    add(verdict_record("weak trace", Verdict::of(weak, weak ? "image is a weak trace" : "image is not a weak trace")));
    try {
      FactorizationReport fr = verify_factorization_lemmas(f.source, f.target, f.matrix, search());
      json lemmas = {{"record", "factorization"}};
      auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v) lemmas[key] = *v;
      };
      put("ideal_y_left_projective", fr.ideal_y_left_projective);
      put("composition_y_injective", fr.composition_y_injective);
      put("ideal_x_right_projective", fr.ideal_x_right_projective);
      put("composition_x_injective", fr.composition_x_injective);
      put("ideal_x_left_projective", fr.ideal_x_left_projective);
      put("ideal_y_right_projective", fr.ideal_y_right_projective);
      lemmas["quotient_y_identified"] = fr.quotient_y_identified;
      lemmas["quotient_x_identified"] = fr.quotient_x_identified;
      add(lemmas);
    } catch (const HypothesisNotEstablished& e) {
      add({{"record", "factorization"}, {"skipped", e.what()}});
    }
    if (!c.covariant.holds && !c.x_covariant.holds && !c.contravariant.holds && !c.y_contravariant.holds)
      exit(kNegative);
  }

  void tor_cmd() {
    const AlgebraPtr& a = algebra();
    const Bounds b = opt.bounds();
    Subspace i = ideal();
    AlgebraPtr aop = opposite(*a);
    auto q = quotient_modules(a, aop, i);
    TorProfile p = tor(q.right, q.left, b.tor, search());
    add(tor_record("Tor^A(A/I, A/I)", p));
    if (!opt.e.empty()) {
      const Vec& e = idempotent().coords;
      if (!is_zero(e)) {
        CornerBimodules cb = corner_bimodules(a, e);
        add(tor_record("Tor^{eAe}(Ae, eA)", tor(cb.re_right, cb.er_left, b.tor, search())));
      }
    }
  }

  void stratify() {
    const AlgebraPtr& a = algebra();
    auto chain = find_stratification(a, opt.budget, search());
    if (!chain) throw Error("no stratification found");
    if (!validate_chain(*chain, search())) throw SoundnessViolation("stratification chain fails re-validation");
    add(chain_record(*chain));
    auto [qh, qchain] = is_quasi_hereditary(a, opt.budget, search());
    if (qchain && !validate_chain(*qchain, search())) throw SoundnessViolation("quasi-hereditary chain fails re-validation");
    add(verdict_record("quasi-hereditary", qh));
    if (qchain) add(chain_record(*qchain));
    decomposition({k0_stratified_decomposition(*chain, search())});
    if (!qh.decided()) exit(kUnknown);
  }

  const FamilyInstance& family() const {
    auto it = w.families.find(algebra_name());
    if (it == w.families.end()) throw UsageError(algebra_name() + " is not a family instance");
    return it->second;
  }

  void verify() {
    const std::string& thm = opt.thm;
    std::vector<DecompositionVerdict> vs;
    const std::string base = thm.substr(0, thm.find('('));
    auto want = [&](const std::string& id) { return base == id; };
    if (thm.empty()) throw UsageError("verify needs --thm");
    if (want("1.1")) {
      std::optional<Vec> e;
      if (!opt.e.empty()) e = idempotent().coords;
      vs = verify_thm1(algebra(), ideal(), e, opt.bounds());
    } else if (want("1.2") || want("3.8")) {
      if (opt.morphism.empty()) throw UsageError("verify --thm " + thm + " needs --morphism");
      const ModuleHom& f = w.morphism(opt.morphism);
      vs = verify_mainthm(f.source, f.target, f.matrix, search());
    } else if (want("4.1")) {
      auto chain = find_stratification(algebra(), opt.budget, search());
      if (!chain) throw Error("no stratification found");
      vs = {k0_stratified_decomposition(*chain, search())};
    } else {
      const FamilyInstance& fi = family();
      if (want("4.2") && fi.morita) vs = {verify_morita_context(*fi.morita, search())};
      else if (want("4.3") && fi.morita) vs = {verify_triangular(*fi.morita, search())};
      else if (want("4.4") && fi.kind == "tiled") vs = {verify_tiled(fi.base, fi.j, fi.upper, *fi.blocks, search())};
      else if (want("4.7") && fi.kind == "checkerboard") vs = verify_checkerboard(fi.base, fi.x, fi.y, *fi.blocks, search());
      else if (want("4.8") && fi.kind == "ji_zero") vs = {verify_ji_zero(fi.base, fi.i, fi.j, *fi.blocks, search())};
      else if (want("4.10") && fi.skew) vs = verify_skew_group(*fi.skew, search());
      else throw UsageError("theorem " + thm + " does not apply to " + algebra_name() + " (" + fi.kind + ")");
    }
    std::vector<DecompositionVerdict> keep;
    for (auto& v : vs)
      if (v.theorem.rfind(thm, 0) == 0) keep.push_back(std::move(v));
    if (keep.empty()) throw UsageError("no statement " + thm + " is checked for this input");
    decomposition(keep);
  }

  void construct() {
    json doc = structure_constants_spec(*algebra(), algebra_name());
    add({{"record", "construct"}, {"algebra", algebra_name()}, {"dim", algebra()->dim()}, {"document", doc}});
  }
};

}  // namespace detail

/// Runs one command on one parsed document.
inline void run_on(const std::string& command, const Workspace& w, const RunOptions& opt, Report& report) {
  detail::Session s{w, opt, report};
  if (command == "analyze") s.analyze();
  else if (command == "k0") s.k0_cmd();
  else if (command == "check-ideal") s.check_ideal();
  else if (command == "check-covariant") s.check_covariant();
  else if (command == "tor") s.tor_cmd();
  else if (command == "stratify") s.stratify();
  else if (command == "verify") s.verify();
  else if (command == "construct") s.construct();
  else throw UsageError("unknown command '" + command + "'");
}

/// Maps library errors to records and exit codes.
template <class F>
inline void guarded(Report& r, F&& body) {
  try {
    body();
  } catch (const SoundnessViolation& e) {
    r.records.push_back(error_record("SoundnessViolation", e.what()));
    r.exit_code = kSoundness;
  } catch (const BudgetExhausted& e) {
    r.records.push_back(error_record("BudgetExhausted", e.what()));
    r.exit_code = detail::worst(r.exit_code, kUnknown);
  } catch (const RandomizedSearchExhausted& e) {
    r.records.push_back(error_record("RandomizedSearchExhausted", e.what()));
    r.exit_code = detail::worst(r.exit_code, kUnknown);
  } catch (const BoundExceeded& e) {
    r.records.push_back(error_record("BoundExceeded", e.what()));
    r.exit_code = detail::worst(r.exit_code, kUnknown);
  } catch (const NonRationalLiteral& e) {
    r.records.push_back(error_record("NonRationalLiteral", e.what()));
    r.exit_code = kInputError;
  } catch (const UnresolvedReference& e) {
    r.records.push_back(error_record("UnresolvedReference", e.what()));
    r.exit_code = kInputError;
  } catch (const SchemaError& e) {
    r.records.push_back(error_record("SchemaError", e.what()));
    r.exit_code = kInputError;
  } catch (const Error& e) {
    r.records.push_back(error_record("InputError", e.what()));
    r.exit_code = kInputError;
  }
}

/// Parses the files, runs the command on each, and assembles one report.
inline Report run(const std::string& command, const std::vector<std::string>& files, const RunOptions& opt) {
  Report r;
  r.command = command;
  r.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();
  guarded(r, [&] {
    if (files.empty()) throw SchemaError("no input files");
    std::string all;
    std::vector<std::string> texts;
    for (const auto& f : files) {
      texts.push_back(detail::read_file(f));
      all += texts.back();
    }
    r.input_digest = sha256_hex(all);
    for (std::size_t k = 0; k < files.size(); ++k) {
      Workspace w = parse_spec_text(texts[k]);
      run_on(command, w, opt, r);
    }
  });
  if (opt.timing)
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Whether every field of `want` occurs in `have` with the same value;
/// arrays must have equal length and match elementwise.
inline bool json_subset(const json& want, const json& have) {
  if (want.is_object()) {
    if (!have.is_object()) return false;
    for (auto it = want.begin(); it != want.end(); ++it)
      if (!have.contains(it.key()) || !json_subset(it.value(), have[it.key()])) return false;
    return true;
  }
  if (want.is_array()) {
    if (!have.is_array() || have.size() != want.size()) return false;
    for (std::size_t k = 0; k < want.size(); ++k)
      if (!json_subset(want[k], have[k])) return false;
    return true;
  }
  return want == have;
}

inline RunOptions options_from_json(const json& j, RunOptions base) {
  auto s = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = j[key].get<std::string>();
  };
  s("algebra", base.algebra);
  s("compare", base.compare);
  s("e", base.e);
  s("ideal", base.ideal);
  s("morphism", base.morphism);
  s("thm", base.thm);
  if (j.contains("bound")) base.bound = j["bound"].get<std::size_t>();
  if (j.contains("tor_bound")) base.tor_bound = j["tor_bound"].get<std::size_t>();
  if (j.contains("budget")) base.budget = j["budget"].get<std::size_t>();
  return base;
}

/// Runs the golden cases listed in an expectations file (or
/// `expectations.json` inside a directory), sorted by case id.
inline Report run_corpus(const std::string& path, const RunOptions& opt) {
  Report r;
  r.command = "corpus";
  r.seed = opt.seed;
  auto t0 = std::chrono::steady_clock::now();
  guarded(r, [&] {
    std::filesystem::path p(path);
    if (std::filesystem::is_directory(p)) p /= "expectations.json";
    std::string text = detail::read_file(p.string());
    r.input_digest = sha256_hex(text);
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError(std::string("malformed expectations: ") + e.what());
    }
    if (!doc.contains("cases") || !doc["cases"].is_array()) throw SchemaError("expectations need a \"cases\" array");
    std::vector<json> cases(doc["cases"].begin(), doc["cases"].end());
    std::sort(cases.begin(), cases.end(), [](const json& a, const json& b) { return a.at("id") < b.at("id"); });
    std::size_t passed = 0;
    for (const json& c : cases) {
      std::string id = c.at("id").get<std::string>();
      RunOptions o = options_from_json(c.value("options", json::object()), opt);
      o.timing = false;
      Report got = run(c.at("command").get<std::string>(), {(p.parent_path() / c.at("file").get<std::string>()).string()}, o);
      json mismatches = json::array();
      const json& expect = c.value("expect", json::object());
      if (expect.contains("exit") && expect["exit"].get<int>() != got.exit_code)
        mismatches.push_back("exit " + std::to_string(got.exit_code) + ", expected " + expect["exit"].dump());
      for (const json& want : expect.value("records", json::array())) {
        bool found = std::any_of(got.records.begin(), got.records.end(), [&](const json& h) { return json_subset(want, h); });
        if (!found) mismatches.push_back("missing " + want.dump());
      }
      bool ok = mismatches.empty();
      passed += ok;
      json rec = {{"record", "case"}, {"id", id}, {"status", ok ? "pass" : "fail"}, {"exit", got.exit_code}};
      if (!ok) rec["mismatches"] = mismatches;
      r.records.push_back(rec);
      if (got.exit_code == kSoundness) r.exit_code = kSoundness;
    }
    r.records.push_back({{"record", "corpus"}, {"cases", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed}});
    if (passed != cases.size()) r.exit_code = detail::worst(r.exit_code, kNegative);
  });
  if (opt.timing)
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace endok
