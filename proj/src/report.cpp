#include "witt/report.hpp"

#include <json.hpp>

#include "witt/render.hpp"

namespace witt {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson defect_json(const SampledDefect& d) {
  OrderedJson j;
  j["samples"] = d.samples;
  j["all_zero"] = d.all_zero;
  if (!d.all_zero) j["witness"] = d.witness;
  return j;
}

std::string defect_text(const SampledDefect& d) {
  if (d.all_zero)
    return "exact-zero on " + std::to_string(d.samples) + " samples";
  return "counterexample " + d.witness;
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "doc") return ReportFormat::kDoc;
  throw Error("unknown format '" + name + "' (expected text or doc)");
}

std::string render_report(const ClassificationReport& rep,
                          const AlgebraConfig& cfg, int samples,
                          ReportFormat format) {
  if (format == ReportFormat::kDoc) {
    OrderedJson j;
    j["report"] = "classification";
    j["rank"] = cfg.rank;
    j["seed"] = cfg.seed;
    j["samples"] = samples;
    j["alternating"] = rep.alternating;
    j["symmetric_residue"] = render(rep.symmetric_residue);
    j["cybe"] = render(rep.cybe_value);
    j["cocycle_defect"] = defect_json(rep.cocycle_defects);
    j["cojacobi_defect"] = defect_json(rep.cojacobi_defects);
    j["verdict"] = verdict_name(rep.verdict);
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "classification report\n";
  out += "rank: " + std::to_string(cfg.rank) + "\n";
  out += "seed: " + std::to_string(cfg.seed) + "\n";
  out += "samples: " + std::to_string(samples) + "\n";
  out += "alternating: " + std::string(rep.alternating ? "true" : "false") + "\n";
  out += "symmetric-residue: " + render(rep.symmetric_residue) + "\n";
  out += "cybe: " + render(rep.cybe_value) + "\n";
  out += "cocycle-defect: " + defect_text(rep.cocycle_defects) + "\n";
  out += "cojacobi-defect: " + defect_text(rep.cojacobi_defects) + "\n";
  out += "verdict: " + verdict_name(rep.verdict) + "\n";
  return out;
}

std::string render_report(const SuiteReport& rep, ReportFormat format) {
  if (format == ReportFormat::kDoc) {
    OrderedJson j;
    j["report"] = "suite";
    j["suite"] = rep.name;
    j["rank"] = rep.rank;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["checks"] = rep.checks;
    j["result"] = rep.passed() ? "pass" : "fail";
    j["counterexamples"] = rep.failures;
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "suite: " + rep.name + "\n";
  out += "rank: " + std::to_string(rep.rank) + "\n";
  out += "seed: " + std::to_string(rep.seed) + "\n";
  out += "samples: " + std::to_string(rep.samples) + "\n";
  out += "checks: " + std::to_string(rep.checks) + "\n";
  out += "result: " + std::string(rep.passed() ? "pass" : "fail") + "\n";
  for (const auto& f : rep.failures) out += "counterexample: " + f + "\n";
  return out;
}

}  // namespace witt
