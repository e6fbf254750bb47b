#include "eispole/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eispole/error.hpp"
#include "eispole/format.hpp"
#include "eispole/pipeline.hpp"

namespace eispole {

std::vector<PoleEntry> poles_from_decomposition(const std::map<int, std::vector<std::pair<int, int>>>& dec) {
  LevelDecomposition levels;
  for (const auto& [j, summands] : dec)
    for (const auto& [l, m] : summands) levels[j].mults[l] += m;
  return pole_table(pole_polynomial(levels));
}

std::vector<GoldenCase> parse_corpus(const std::string& text, const std::string& origin) {
  std::vector<GoldenCase> out;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& c : doc.at("cases")) {
      GoldenCase g;
      g.kind = parse_kind(c.at("type").get<std::string>());
      g.node = c.at("node").get<int>();
      for (const auto& [j, summands] : c.at("decomposition").items())
        for (const auto& s : summands)
          g.expected_decomposition[std::stoi(j)].emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
      for (const auto& p : c.at("poles"))
        g.expected_poles.push_back({parse_rational(p.at(0).get<std::string>()), p.at(1).get<int>()});
      std::sort(g.expected_poles.begin(), g.expected_poles.end(),
                [](const PoleEntry& a, const PoleEntry& b) { return a.location > b.location; });
      g.source = c.value("source", "");
      if (c.contains("adjudication")) {
        const auto& a = c.at("adjudication");
        g.adjudication = Adjudication{a.value("field", ""), a.value("published", ""), a.value("note", "")};
      }
      g.consistent = poles_from_decomposition(g.expected_decomposition) == g.expected_poles;
      g.origin = origin;
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed corpus " + origin + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError("malformed corpus " + origin + ": " + e.what());
  }
  return out;
}

std::vector<GoldenCase> load_corpus(const std::filesystem::path& path) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(path))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }

  std::vector<GoldenCase> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw IoError("cannot read corpus " + f.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto cases = parse_corpus(buffer.str(), f.filename().string());
    out.insert(out.end(), std::make_move_iterator(cases.begin()), std::make_move_iterator(cases.end()));
  }
  return out;
}

std::size_t GoldenReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const GoldenOutcome& o) { return !o.ok(); }));
}

GoldenReport golden_compare(const std::vector<GoldenCase>& corpus, int max_rank) {
  GoldenReport report;
  if (corpus.empty()) {
    report.warnings.push_back("corpus is empty; nothing to compare");
    return report;
  }

  std::map<RootSystemKind, std::shared_ptr<const RootSystem>> systems;
  std::vector<CaseResult> results;
  for (const auto& g : corpus) {
    try {
      auto& rs = systems[g.kind];
      if (!rs) rs = std::make_shared<const RootSystem>(build_root_system(g.kind, max_rank));
      results.push_back(compute_case(rs, g.node, true));
    } catch (const Error& e) {
      CaseResult failed{g.kind, g.node, 0, {}, CrossCheckReport{}};
      failed.oracle->error = e.what();
      results.push_back(std::move(failed));
    }
  }

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GoldenCase& g = corpus[i];
    const CaseResult& r = results[i];
    GoldenOutcome o;
    o.golden = &g;
    if (r.oracle && !r.oracle->error.empty()) o.error = r.oracle->error;

    std::map<int, std::vector<std::pair<int, int>>> computed;
    for (const auto& [j, dec] : r.analysis.decomposition)
      for (const auto& [l, m] : dec.mults) computed[j].emplace_back(l, m);
    auto expected = g.expected_decomposition;
    for (auto& [j, v] : expected) std::sort(v.begin(), v.end());
    o.decomposition_match = computed == expected;
    o.computed_poles = pole_table(r.analysis.poles);
    o.poles_match = o.computed_poles == g.expected_poles;
    o.oracle_match = r.oracle && r.oracle->match;
    for (const auto& [j, dec] : r.analysis.decomposition)
      o.computed_decomposition += (o.computed_decomposition.empty() ? "" : ", ") + std::string("r") +
                                  std::to_string(j) + " = " + format_decomposition(dec);
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

} // namespace eispole
