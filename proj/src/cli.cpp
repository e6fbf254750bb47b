#include "eispole/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eispole/error.hpp"
#include "eispole/format.hpp"
#include "eispole/golden.hpp"
#include "eispole/pipeline.hpp"

namespace eispole::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool is_all(const std::string& s) { return s == "ALL" || s == "all"; }

struct KostantSummary {
  RootSystemKind kind;
  bool ok = false;
  std::uint64_t degree_product = 0;
};

KostantSummary check_kostant(const RootSystem& rs) {
  KostantSummary s{rs.kind()};
  const auto k = kostant_multisets(rs);
  s.degree_product = weyl_order_from_degrees(rs);
  s.ok = k.rhs_roots.is_subset_of(k.lhs) && k.residual.size() == static_cast<std::size_t>(rs.rank()) &&
         !k.residual.empty() && k.residual.begin()->first >= 2;
  return s;
}

} // namespace

ParseResult parse_arguments(const std::vector<std::string>& argv) {
  CLI::App app{"Pole locations and orders of degenerate Eisenstein series for maximal parabolics", "eispole"};

  std::string type_arg;
  std::string node_arg = "ALL";
  std::string format_arg = "text";
  std::string rescale_arg = "1";
  Request req;
  std::string corpus;

  app.add_option("--type", type_arg, "Root system type, e.g. E8, or a comma list, or ALL");
  app.add_option("--node", node_arg, "Removed simple node (Bourbaki numbering) or ALL")->capture_default_str();
  app.add_option("--format", format_arg, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--rescale", rescale_arg, "Divide reported pole locations by this positive rational p/q")
      ->capture_default_str();
  app.add_flag("--verify", req.verify, "Cross-check against the reduced residue function");
  app.add_flag("--sweep", req.sweep, "Run the Kostant and Weyl-group symbolic checks for each type");
  app.add_option("--corpus", corpus, "Golden corpus file or directory to compare against");
  app.add_option("--weyl-cap", req.weyl_cap, "Largest Weyl group enumerated by --sweep")->capture_default_str();
  app.add_option("--max-rank", req.max_rank, "Largest admissible rank")->capture_default_str();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, kOk, app.help()};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, kUsage, e.what()};
  }

  try {
    if (!type_arg.empty()) {
      if (is_all(type_arg)) {
        req.kinds = all_kinds(req.max_rank);
      } else {
        for (const auto& t : split(type_arg, ',')) {
          const auto kind = parse_kind(t);
          validate(kind, req.max_rank);
          req.kinds.push_back(kind);
        }
      }
    }
    if (!is_all(node_arg)) {
      std::size_t used = 0;
      const int node = std::stoi(node_arg, &used);
      if (used != node_arg.size()) throw UsageError("bad --node value '" + node_arg + "'");
      for (const auto& k : req.kinds)
        if (node < 1 || node > k.rank)
          throw UsageError("node " + node_arg + " out of range 1.." + std::to_string(k.rank) + " for " +
                           to_string(k));
      req.node = node;
    }
    if (format_arg == "json") req.format = Format::Json;
    if (format_arg == "latex") req.format = Format::Latex;
    req.rescale = parse_rational(rescale_arg);
    if (req.rescale <= 0) throw UsageError("--rescale must be positive");
    if (!corpus.empty()) req.corpus = corpus;
    if (req.kinds.empty() && !req.corpus) throw UsageError("nothing to do: give --type and/or --corpus");
  } catch (const UsageError& e) {
    return {std::nullopt, kUsage, e.what()};
  } catch (const Error& e) {
    return {std::nullopt, kUsage, e.what()};
  } catch (const std::logic_error&) {
    return {std::nullopt, kUsage, "bad --node value '" + node_arg + "'"};
  }
  return {req, kOk, ""};
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
  int status = kOk;
  Json doc = Json::object();
  std::size_t json_cases = 0;

  if (!req.kinds.empty()) {
    std::vector<CaseRequest> requests;
    for (const auto& k : req.kinds) {
      if (req.node) {
        requests.emplace_back(k, *req.node);
      } else {
        for (int n = 1; n <= k.rank; ++n) requests.emplace_back(k, n);
      }
    }
    std::vector<CaseResult> results;
    try {
      results = compute_cases(requests, req.verify, req.max_rank);
    } catch (const ArgumentError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const ConfigurationError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    Json cases = Json::array();
    for (const auto& r : results) {
      if (r.oracle && !r.oracle->match) {
        status = kVerificationFailure;
        err << "verification failure: " << to_string(r.kind) << " P" << r.node
            << (r.oracle->error.empty() ? "" : ": " + r.oracle->error) << "\n";
      }
      switch (req.format) {
        case Format::Text: out << format_case_text(r, req.rescale) << "\n"; break;
        case Format::Latex: out << format_case_latex(r, req.rescale) << "\n"; break;
        case Format::Json: cases.push_back(case_to_json(r, req.rescale)); break;
      }
    }
    json_cases = cases.size();
    if (req.format == Format::Json) doc["cases"] = std::move(cases);
  }

  if (req.sweep) {
    Json checks = Json::array();
    for (const auto& k : req.kinds) {
      auto rs = std::make_shared<const RootSystem>(build_root_system(k, req.max_rank));
      const auto kostant = check_kostant(*rs);
      Json entry = {{"group", to_string(k)}, {"kostant_ok", kostant.ok},
                    {"degree_product", kostant.degree_product}};
      std::string line = "sweep " + to_string(k) + ": kostant " + (kostant.ok ? "ok" : "FAILED");
      if (!kostant.ok) status = kVerificationFailure;
      try {
        const auto report = weyl_sweep(rs, req.weyl_cap);
        Json w = weyl_sweep_to_json(report);
        const bool degrees_ok = report.group_order == kostant.degree_product;
        w["degrees_match_order"] = degrees_ok;
        entry["weyl_checks"] = std::move(w);
        line += ", |W| = " + std::to_string(report.group_order) + (degrees_ok ? "" : " (DEGREE MISMATCH)") +
                ", length mismatches " + std::to_string(report.length_mismatches) + ", cocycle " +
                std::to_string(report.cocycle_tested - report.cocycle_failures) + "/" +
                std::to_string(report.cocycle_tested) + ", cancellation " + std::to_string(report.cancellation_ok) +
                "/" + std::to_string(report.admissible);
        if (!report.passed() || !degrees_ok) status = kVerificationFailure;
      } catch (const SizeError& e) {
        entry["weyl_checks"] = {{"group", to_string(k)}, {"skipped", e.what()}};
        line += ", weyl checks skipped (" + std::string(e.what()) + ")";
      }
      checks.push_back(std::move(entry));
      if (req.format != Format::Json) out << line << "\n";
    }
    if (req.format == Format::Json) doc["weyl_checks"] = std::move(checks);
  }

  if (req.corpus) {
    std::vector<GoldenCase> corpus;
    try {
      corpus = load_corpus(*req.corpus);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    const GoldenReport report = golden_compare(corpus, req.max_rank);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    Json entries = Json::array();
    for (const auto& o : report.outcomes) {
      const GoldenCase& g = *o.golden;
      Json e = {{"type", to_string(g.kind)},
                {"node", g.node},
                {"source", g.source},
                {"ok", o.ok()},
                {"decomposition_match", o.decomposition_match},
                {"poles_match", o.poles_match},
                {"consistent", g.consistent},
                {"oracle_match", o.oracle_match},
                {"expected_poles", poles_to_json(g.expected_poles)},
                {"computed_poles", poles_to_json(o.computed_poles)}};
      if (g.adjudication)
        e["adjudication"] = {{"field", g.adjudication->field},
                             {"published", g.adjudication->published},
                             {"note", g.adjudication->note}};
      if (!o.error.empty()) e["error"] = o.error;
      entries.push_back(std::move(e));

      if (req.format != Format::Json) {
        out << (o.ok() ? "OK   " : "FAIL ") << to_string(g.kind) << " P" << g.node << " [" << g.source << "]";
        if (!o.ok()) {
          out << " expected poles: " << format_poles_text(g.expected_poles)
              << "; computed: " << format_poles_text(o.computed_poles) << " (" << o.computed_decomposition
              << "); oracle " << (o.oracle_match ? "agrees with computation" : "MISMATCH")
              << (g.consistent ? "" : "; corpus entry inconsistent with its own decomposition");
        }
        out << "\n";
        if (g.adjudication)
          out << "     adjudicated " << g.adjudication->field << ": published '" << g.adjudication->published
              << "'; " << g.adjudication->note << "\n";
      }
    }
    if (req.format != Format::Json)
      out << "golden: " << (report.outcomes.size() - report.mismatches()) << "/" << report.outcomes.size()
          << " cases match\n";
    else
      doc["golden"] = {{"cases", std::move(entries)}, {"mismatches", report.mismatches()},
                       {"total", report.outcomes.size()}};
    if (!report.passed()) status = kVerificationFailure;
  }

  if (req.format == Format::Json) {
    if (json_cases == 1 && doc.size() == 1)
      out << doc["cases"][0].dump() << "\n";
    else
      out << doc.dump() << "\n";
  }
  return status;
}

int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_arguments(argv);
  if (!parsed.request) {
    (parsed.status == kOk ? out : err) << parsed.message << "\n";
    return parsed.status;
  }
  return run(*parsed.request, out, err);
}

} // namespace eispole::cli
