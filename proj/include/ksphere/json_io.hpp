#pragma once

#include "ksphere/ktheory.hpp"
#include "ksphere/verification.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ksphere {

inline constexpr int kJsonSchemaVersion = 1;

/// lambda as named in a spec document: a convention or explicit signs on the
/// generators.
struct LambdaChoice {
  std::optional<std::string> convention;
  std::vector<int> generator_signs;
};

struct ParsedSpec {
  GroupSpec group;
  std::optional<LambdaChoice> lambda;
};

/// Reads {"family": ..., parameters..., "lambda": {...}} or
/// {"generators": [[...], ...], "lambda": {...}}. Throws InputError naming
/// the offending field.
ParsedSpec parse_group_spec(const nlohmann::json& j);
ParsedSpec parse_group_spec_text(const std::string& text);

SignHomomorphism resolve_lambda(const ParsedSpec& spec, const GroupTable& g);
/// The convention name, or describe_signs for explicit signs.
std::string lambda_label(const ParsedSpec& spec, const GroupTable& g,
                         const SignHomomorphism& lambda);

nlohmann::json to_json(const Cyclotomic& v);
nlohmann::json to_json(const CharacterTable& t, const std::string& label);
nlohmann::json to_json(const IndexTwoSetting& s, const KGroupPresentation& p);
nlohmann::json to_json(const IndexTwoSetting& s, const IdealPresentation& p);
nlohmann::json to_json(const Report& r);

Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

/// The exact content of a kgroup document.
struct KGroupSummary {
  SphereModel sphere = SphereModel::s_1_plus_lambda;
  std::size_t rank = 0;
  IntMatrix basis; // coefficient vectors
  std::vector<IntMatrix> action;

  friend bool operator==(const KGroupSummary&, const KGroupSummary&) = default;
};

KGroupSummary summarize(const KGroupPresentation& p);
KGroupSummary summarize(const IdealPresentation& p);
KGroupSummary kgroup_from_json(const nlohmann::json& j);

Report report_from_json(const nlohmann::json& j);

} // namespace ksphere
