#include "graphweight/report_format.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace graphweight {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string plain_value(const FormulaOutcome& o) {
  if (o.value) return o.value->value.to_fraction_string();
  return o.skipped_for_budget ? "skipped" : "-";
}

std::string format_plain(const VerificationReport& r, const FormatOptions& opts) {
  std::ostringstream os;
  os << (r.graph_id.empty() ? "-" : r.graph_id) << " n=" << r.n << " m=" << r.m;
  for (Formula f : kAllFormulas)
    os << ' ' << kValueFields[static_cast<std::size_t>(f)] << '=' << plain_value(r.outcome(f));
  os << (r.all_equal ? " equal" : " MISMATCH");
  if (r.claim_checked != 0 || r.parity_checked != 0)
    os << " identities=" << r.claim_checked << (r.identity_violations == 0 ? " ok" : " VIOLATED");
  if (opts.timings) {
    os << " [ms";
    for (Formula f : kAllFormulas) os << ' ' << to_string(f) << '=' << ms(r.outcome(f).elapsed.count());
    os << ']';
  }
  return os.str();
}

std::string format_csv(const VerificationReport& r, const FormatOptions& opts) {
  std::ostringstream os;
  os << r.graph_id << ',' << r.n << ',' << r.m;
  for (const auto& o : r.outcomes) {
    os << ',';
    if (o.value) os << o.value->value.to_exact_string();
  }
  os << ',' << (r.all_equal ? "true" : "false") << ',' << r.claim_checked << ',' << r.parity_checked
     << ',' << r.identity_violations;
  if (opts.timings)
    for (const auto& o : r.outcomes) os << ',' << ms(o.elapsed.count());
  return os.str();
}

std::string format_jsonl(const VerificationReport& r, const FormatOptions& opts) {
  ordered_json j;
  j["graph6"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  for (Formula f : kAllFormulas) {
    const auto& o = r.outcome(f);
    j[kValueFields[static_cast<std::size_t>(f)]] =
        o.value ? ordered_json(o.value->value.to_exact_string()) : ordered_json(nullptr);
  }
  ordered_json approx;
  for (Formula f : kAllFormulas) {
    const auto& o = r.outcome(f);
    approx[kValueFields[static_cast<std::size_t>(f)]] =
        o.value ? ordered_json(o.value->value.to_double()) : ordered_json(nullptr);
  }
  j["approximate"] = std::move(approx);
  j["equal"] = r.all_equal;
  ordered_json skipped = ordered_json::array();
  for (Formula f : kAllFormulas)
    if (r.outcome(f).skipped_for_budget) skipped.push_back(kValueFields[static_cast<std::size_t>(f)]);
  j["skipped"] = std::move(skipped);
  j["claim_checked"] = r.claim_checked;
  j["parity_checked"] = r.parity_checked;
  j["identity_violations"] = r.identity_violations;
  if (opts.timings) {
    ordered_json elapsed;
    for (Formula f : kAllFormulas)
      elapsed[kValueFields[static_cast<std::size_t>(f)]] = r.outcome(f).elapsed.count();
    j["elapsed_ms"] = std::move(elapsed);
  }
  return j.dump();
}

}  // namespace

std::string csv_header(const FormatOptions& opts) {
  std::string h = "graph6,n,m,phi_definition,phi_eulerian,psi,equal,claim_checked,parity_checked,identity_violations";
  if (opts.timings) h += ",elapsed_ms_definition,elapsed_ms_eulerian,elapsed_ms_corank";
  return h;
}

std::string format_report(const VerificationReport& r, const FormatOptions& opts) {
  switch (opts.format) {
    case OutputFormat::plain: return format_plain(r, opts);
    case OutputFormat::csv: return format_csv(r, opts);
    case OutputFormat::jsonl: return format_jsonl(r, opts);
  }
  return {};
}

std::string format_summary(const RunSummary& s) {
  std::ostringstream os;
  os << s.graphs << " graphs, " << s.mismatches << " mismatches";
  if (s.claim_checked != 0 || s.identity_violations != 0)
    os << ", " << s.claim_checked << " subset identities checked, " << s.identity_violations
       << " violations";
  if (s.budget_skips != 0) os << ", " << s.budget_skips << " formula evaluations skipped for budget";
  return os.str();
}

}  // namespace graphweight
