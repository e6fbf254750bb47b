#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eispole/multiset.hpp"
#include "eispole/pipeline.hpp"
#include "eispole/polemap.hpp"
#include "eispole/weylsym.hpp"

namespace eispole {

using Json = nlohmann::json;

Json rationals_to_json(const Multiset<Rational>& values);
Json poles_to_json(const std::vector<PoleEntry>& table);
/// {"roots": [[...], ...], "coroots": [[...], ...]} as integer arrays.
Json root_system_to_json(const RootSystem& rs);
/// {"levels": {"1": [eigenvalues...], ...}}
Json graded_eigenvalues_to_json(const GradedEigenvalues& g);
/// {"sl2": [{"l": 2, "mult": 1}, ...]} in descending l.
Json decomposition_to_json(const SL2Decomposition& dec);

/// Stable per-case schema: type, rank, node, levels, poles and (optionally) oracle.
Json case_to_json(const CaseResult& result, const Rational& rescale = Rational(1));
Json weyl_sweep_to_json(const WeylSweepReport& report);

/// "V1^2 + V3" with summands in ascending l.
std::string format_decomposition(const SL2Decomposition& dec);

/// "r1 = V1, r2 = V0, r3 = V1; poles: 3/2, (1/2; 2)"
std::string format_case_text(const CaseResult& result, const Rational& rescale = Rational(1));
std::string format_case_latex(const CaseResult& result, const Rational& rescale = Rational(1));

} // namespace eispole
