#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eispole/polemap.hpp"
#include "eispole/rootsys.hpp"

namespace eispole {

/// A published value that disagrees with its own table and was replaced by
/// the oracle-adjudicated one.
struct Adjudication {
  std::string field;
  std::string published;
  std::string note;
};

struct GoldenCase {
  RootSystemKind kind;
  int node = 0;
  /// j -> (l, mult) pairs.
  std::map<int, std::vector<std::pair<int, int>>> expected_decomposition;
  std::vector<PoleEntry> expected_poles;
  std::string source;
  std::optional<Adjudication> adjudication;
  /// expected_poles agree with the poles implied by expected_decomposition.
  bool consistent = true;
  /// File the case was read from.
  std::string origin;
};

/// Poles implied by a decomposition, in pole_table order.
std::vector<PoleEntry> poles_from_decomposition(const std::map<int, std::vector<std::pair<int, int>>>& dec);

/// Loads a corpus file, or every *.json file of a directory in name order.
/// Throws IoError for unreadable or malformed input.
std::vector<GoldenCase> load_corpus(const std::filesystem::path& path);
std::vector<GoldenCase> parse_corpus(const std::string& text, const std::string& origin);

struct GoldenOutcome {
  const GoldenCase* golden = nullptr;
  bool decomposition_match = false;
  bool poles_match = false;
  bool oracle_match = false;
  std::vector<PoleEntry> computed_poles;
  std::string computed_decomposition;
  std::string error;

  bool ok() const {
    return decomposition_match && poles_match && oracle_match && golden->consistent && error.empty();
  }
};

struct GoldenReport {
  std::vector<GoldenOutcome> outcomes;
  std::vector<std::string> warnings;

  std::size_t mismatches() const;
  bool passed() const { return mismatches() == 0; }
};

/// Recomputes every case and diffs decomposition and poles, attaching the
/// residue-oracle verdict to each entry.
GoldenReport golden_compare(const std::vector<GoldenCase>& corpus, int max_rank = kDefaultMaxRank);

} // namespace eispole
