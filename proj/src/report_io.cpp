#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hadfrac/harness.hpp"

namespace hadfrac {

namespace {

using nlohmann::json;

std::string display_id(const InequalityReport& r) {
  std::string id = theorem_name(r.theorem);
  if (r.literal_variant) id += "_literal";
  return id;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ColumnMask {
  bool p = false, q = false, gamma = false, delta = false, corridor = false;
};

ColumnMask mask_for(const InequalityReport& r) {
  ColumnMask m;
  switch (r.theorem) {
    case TheoremId::T3_1:
      m.p = m.corridor = true;
      m.q = r.literal_variant;
      break;
    case TheoremId::T3_2:
      m.p = m.corridor = true;
      break;
    case TheoremId::T4_1:
    case TheoremId::T4_2:
    case TheoremId::T4_3:
      m.p = m.q = m.corridor = true;
      break;
    case TheoremId::T4_4:
      m.gamma = m.delta = true;
      break;
    case TheoremId::T4_5:
    case TheoremId::T4_6:
      break;
    case TheoremId::T4_7:
    case TheoremId::T4_8:
      m.p = true;
      break;
  }
  return m;
}

Verdict verdict_from_name(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "violated") return Verdict::Violated;
  if (s == "inconclusive") return Verdict::Inconclusive;
  if (s == "error") return Verdict::Error;
  throw std::invalid_argument("unknown verdict: " + s);
}

json record_to_json(const InequalityReport& r) {
  json rec;
  rec["theorem"] = theorem_name(r.theorem);
  rec["literal_variant"] = r.literal_variant;
  rec["alpha"] = r.params.alpha;
  rec["beta"] = r.params.beta;
  if (r.params2) {
    rec["alpha2"] = r.params2->alpha;
    rec["beta2"] = r.params2->beta;
  }
  rec["p"] = r.spec.p;
  rec["q"] = r.spec.q;
  rec["gamma"] = r.spec.gamma;
  rec["delta"] = r.spec.delta;
  rec["m"] = r.spec.m;
  rec["M"] = r.spec.M;
  rec["x"] = r.x;
  rec["lhs"] = r.lhs;
  rec["rhs"] = r.rhs;
  rec["margin"] = r.margin;
  rec["err_budget"] = r.err_budget;
  rec["verdict"] = verdict_name(r.verdict);
  rec["seed"] = r.seed.seed;
  rec["trial_index"] = r.seed.trial_index;
  json fns = json::object();
  for (const auto& [name, text] : r.functions) fns[name] = json::parse(text);
  rec["functions"] = std::move(fns);
  if (!r.note.empty()) rec["note"] = r.note;
  return rec;
}

InequalityReport record_from_json(const json& rec) {
  InequalityReport r;
  const auto tid = theorem_from_name(rec.at("theorem").get<std::string>());
  if (!tid) throw std::invalid_argument("report record: unknown theorem id");
  r.theorem = *tid;
  r.literal_variant = rec.value("literal_variant", false);
  r.params.alpha = rec.at("alpha").get<double>();
  r.params.beta = rec.at("beta").get<double>();
  if (rec.contains("alpha2"))
    r.params2 = FracParams{rec.at("alpha2").get<double>(),
                           rec.at("beta2").get<double>()};
  r.spec.p = rec.at("p").get<double>();
  r.spec.q = rec.at("q").get<double>();
  r.spec.gamma = rec.at("gamma").get<double>();
  r.spec.delta = rec.at("delta").get<double>();
  r.spec.m = rec.at("m").get<double>();
  r.spec.M = rec.at("M").get<double>();
  r.x = rec.at("x").get<double>();
  r.lhs = rec.at("lhs").get<double>();
  r.rhs = rec.at("rhs").get<double>();
  r.margin = rec.at("margin").get<double>();
  r.err_budget = rec.at("err_budget").get<double>();
  r.verdict = verdict_from_name(rec.at("verdict").get<std::string>());
  r.seed.seed = rec.at("seed").get<std::uint64_t>();
  r.seed.trial_index = rec.at("trial_index").get<int>();
  for (const auto& [name, fn] : rec.at("functions").items())
    r.functions.emplace_back(name, fn.dump());
  r.note = rec.value("note", std::string{});
  return r;
}

const PositiveFunction require_fn(const InequalityReport& r, const char* name) {
  for (const auto& [n, text] : r.functions)
    if (n == name) return deserialize_function(text);
  throw std::invalid_argument(std::string("report record is missing function '") +
                              name + "' (cannot replay)");
}

}  // namespace

void write_csv(const std::vector<InequalityReport>& reports, std::ostream& os) {
  os << "theorem_id,alpha,beta,alpha2,beta2,p,q,gamma,delta,m,M,x,"
        "lhs,rhs,margin,verdict,seed,trial_index,err_budget\n";
  for (const auto& r : reports) {
    const ColumnMask m = mask_for(r);
    os << display_id(r) << ',' << fmt(r.params.alpha) << ','
       << fmt(r.params.beta) << ',';
    if (r.params2)
      os << fmt(r.params2->alpha) << ',' << fmt(r.params2->beta) << ',';
    else
      os << ",,";
    os << (m.p ? fmt(r.spec.p) : "") << ',' << (m.q ? fmt(r.spec.q) : "")
       << ',' << (m.gamma ? fmt(r.spec.gamma) : "") << ','
       << (m.delta ? fmt(r.spec.delta) : "") << ','
       << (m.corridor ? fmt(r.spec.m) : "") << ','
       << (m.corridor ? fmt(r.spec.M) : "") << ',' << fmt(r.x) << ','
       << fmt(r.lhs) << ',' << fmt(r.rhs) << ',' << fmt(r.margin) << ','
       << verdict_name(r.verdict) << ','
       << std::to_string(r.seed.seed) << ',' << r.seed.trial_index << ','
       << fmt(r.err_budget) << '\n';
  }
}

void write_json(const SuiteConfig& config,
                const std::vector<InequalityReport>& reports,
                std::ostream& os) {
  json doc;
  doc["schema"] = "hadfrac-suite-v1";
  json cfg;
  cfg["trials_per_theorem"] = config.trials_per_theorem;
  cfg["tol_rel"] = config.tol_rel;
  cfg["quad_rtol"] = config.quad_rtol;
  cfg["master_seed"] = config.master_seed;
  json names = json::array();
  for (TheoremId t : config.theorems) names.push_back(theorem_name(t));
  cfg["theorems"] = std::move(names);
  cfg["include_literal_variant"] = config.include_literal_variant;
  cfg["alphas"] = config.alphas;
  cfg["betas"] = config.betas;
  cfg["ps"] = config.ps;
  json cors = json::array();
  for (auto [m, M] : config.corridors) cors.push_back(json::array({m, M}));
  cfg["corridors"] = std::move(cors);
  cfg["xs"] = config.xs;
  doc["config"] = std::move(cfg);
  json recs = json::array();
  for (const auto& r : reports) recs.push_back(record_to_json(r));
  doc["records"] = std::move(recs);
  os << doc.dump(1) << '\n';
}

ReplayResult replay_trial(const std::string& json_text, int record_index) {
  const json doc = json::parse(json_text);
  const json& recs = doc.at("records");
  if (record_index < 0 || std::size_t(record_index) >= recs.size())
    throw std::out_of_range("replay: trial index out of range (report has " +
                            std::to_string(recs.size()) + " records)");
  ReplayResult out;
  out.recorded = record_from_json(recs.at(record_index));

  CheckSettings cs;
  if (doc.contains("config")) {
    const json& cfg = doc.at("config");
    cs.tol_rel = cfg.value("tol_rel", cs.tol_rel);
    cs.quad_rtol = cfg.value("quad_rtol", cs.quad_rtol);
  }

  const InequalityReport& rec = out.recorded;
  try {
    switch (rec.theorem) {
      case TheoremId::T3_1:
        out.recomputed =
            rec.literal_variant
                ? check_t3_1_literal(require_fn(rec, "f"), require_fn(rec, "g"),
                                     rec.spec, rec.x, rec.params, cs)
                : check_t3_1(require_fn(rec, "f"), require_fn(rec, "g"),
                             rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T3_2:
        out.recomputed = check_t3_2(require_fn(rec, "f"), require_fn(rec, "g"),
                                    rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T4_1:
        out.recomputed = check_t4_1(require_fn(rec, "f"), require_fn(rec, "g"),
                                    rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T4_2:
        out.recomputed = check_t4_2(require_fn(rec, "f"), require_fn(rec, "g"),
                                    rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T4_3:
        out.recomputed = check_t4_3(require_fn(rec, "f"), require_fn(rec, "g"),
                                    rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T4_4:
        out.recomputed = check_t4_4(require_fn(rec, "f"), require_fn(rec, "g"),
                                    rec.spec, rec.x, rec.params, cs);
        break;
      case TheoremId::T4_5:
      case TheoremId::T4_6:
        out.recomputed =
            check_t4_5(require_fn(rec, "f"), require_fn(rec, "g"),
                       require_fn(rec, "h"), rec.x, rec.params, rec.params2, cs);
        break;
      case TheoremId::T4_7:
      case TheoremId::T4_8:
        out.recomputed =
            check_t4_7(require_fn(rec, "f"), require_fn(rec, "h"), rec.spec.p,
                       rec.x, rec.params, rec.params2, cs);
        break;
    }
    out.recomputed.seed = rec.seed;
    const auto close = [](double a, double b) {
      return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
    };
    out.match = close(rec.lhs, out.recomputed.lhs) &&
                close(rec.rhs, out.recomputed.rhs) &&
                rec.verdict == out.recomputed.verdict;
  } catch (const std::exception& e) {
    out.recomputed = rec;
    out.recomputed.lhs = out.recomputed.rhs = out.recomputed.margin = 0.0;
    out.recomputed.verdict = Verdict::Error;
    out.recomputed.note = e.what();
    out.match = rec.verdict == Verdict::Error;
  }
  return out;
}

int report_record_count(const std::string& json_text) {
  const json doc = json::parse(json_text);
  return int(doc.at("records").size());
}

}  // namespace hadfrac
