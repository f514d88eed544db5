#include "ksphere/json_io.hpp"

#include "ksphere/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ksphere {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& what) {
  throw InputError("field '" + path + "': " + what);
}

std::string join(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

const json& field(const json& j, const std::string& name, const std::string& prefix) {
  auto it = j.find(name);
  if (it == j.end()) bad_field(join(prefix, name), "missing");
  return *it;
}

unsigned positive(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 || j.get<std::int64_t>() > 1'000'000)
    bad_field(path, "expected a positive integer");
  return j.get<unsigned>();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

GroupSpec parse_group(const json& j, const std::string& prefix) {
  if (!j.is_object()) bad_field(prefix.empty() ? "spec" : prefix, "expected an object");
  bool has_family = j.contains("family");
  bool has_generators = j.contains("generators");
  if (has_family == has_generators)
    bad_field(prefix.empty() ? "family" : join(prefix, "family"),
              "exactly one of 'family' and 'generators' is required");

  if (has_generators) {
    auto path = join(prefix, "generators");
    const auto& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) bad_field(path, "expected a non-empty list of permutations");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto p = path + "[" + std::to_string(i) + "]";
      if (!gens[i].is_array() || gens[i].empty()) bad_field(p, "expected a list of point images");
      Permutation perm;
      for (const auto& x : gens[i]) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
          bad_field(p, "point images must be non-negative integers");
        perm.push_back(x.get<std::uint32_t>());
      }
      perms.push_back(std::move(perm));
    }
    auto degree = static_cast<unsigned>(perms[0].size());
    if (j.contains("degree")) degree = positive(j["degree"], join(prefix, "degree"));
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const auto& perm = perms[i];
      auto p = path + "[" + std::to_string(i) + "]";
      if (perm.size() != degree) bad_field(p, "length differs from the degree " + std::to_string(degree));
      std::vector<bool> hit(degree, false);
      for (auto x : perm) {
        if (x >= degree || hit[x]) bad_field(p, "not a bijection on 0.." + std::to_string(degree - 1));
        hit[x] = true;
      }
    }
    return GroupSpec::permutations(degree, std::move(perms));
  }

  const auto& fam = j["family"];
  auto fpath = join(prefix, "family");
  if (!fam.is_string()) bad_field(fpath, "expected a string");
  auto name = lower(fam.get<std::string>());
  auto n = [&] { return positive(field(j, "n", prefix), join(prefix, "n")); };
  if (name == "c" || name == "cyclic") return GroupSpec::cyclic(n());
  if (name == "d" || name == "dihedral") return GroupSpec::dihedral(n());
  if (name == "s" || name == "symmetric") return GroupSpec::symmetric(n());
  if (name == "a" || name == "alternating") return GroupSpec::alternating(n());
  if (name == "q" || name == "q8" || name == "quaternion") {
    if (j.contains("n") && positive(j["n"], join(prefix, "n")) != 8)
      bad_field(join(prefix, "n"), "only the quaternion group of order 8 is supported");
    return GroupSpec::quaternion();
  }
  if (name == "product" || name == "direct_product") {
    auto path = join(prefix, "factors");
    const auto& factors = field(j, "factors", prefix);
    if (!factors.is_array() || factors.size() < 2) bad_field(path, "expected at least two factors");
    auto spec = parse_group(factors.back(), path + "[" + std::to_string(factors.size() - 1) + "]");
    for (std::size_t i = factors.size() - 1; i-- > 0;)
      spec = GroupSpec::product(parse_group(factors[i], path + "[" + std::to_string(i) + "]"),
                                std::move(spec));
    return spec;
  }
  bad_field(fpath, "unknown family '" + fam.get<std::string>() +
                       "' (expected cyclic, dihedral, quaternion, symmetric, alternating or product)");
}

json int_matrix(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

IntMatrix read_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) bad_field(path, "expected a matrix");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) bad_field(path, "expected rows of integers");
    m.push_back(row.get<IntVector>());
  }
  return m;
}

void check_header(const json& j, const std::string& schema) {
  if (!j.is_object()) bad_field("document", "expected an object");
  if (field(j, "schema", "") != schema) bad_field("schema", "expected '" + schema + "'");
  if (field(j, "version", "") != kJsonSchemaVersion)
    bad_field("version", "unsupported version");
}

json header(const std::string& schema) {
  return json{{"schema", schema}, {"version", kJsonSchemaVersion}};
}

} // namespace

ParsedSpec parse_group_spec(const json& j) {
  ParsedSpec out{parse_group(j, ""), std::nullopt};
  if (auto it = j.find("lambda"); it != j.end()) {
    const auto& l = *it;
    if (!l.is_object()) bad_field("lambda", "expected an object");
    bool conv = l.contains("convention");
    bool signs = l.contains("generator_signs");
    if (conv == signs)
      bad_field("lambda", "exactly one of 'convention' and 'generator_signs' is required");
    LambdaChoice choice;
    if (conv) {
      if (!l["convention"].is_string()) bad_field("lambda.convention", "expected a string");
      choice.convention = l["convention"].get<std::string>();
    } else {
      const auto& s = l["generator_signs"];
      if (!s.is_array() || s.empty()) bad_field("lambda.generator_signs", "expected a list of +1/-1");
      for (const auto& x : s) {
        if (!x.is_number_integer() || (x != 1 && x != -1))
          bad_field("lambda.generator_signs", "entries must be +1 or -1");
        choice.generator_signs.push_back(x.get<int>());
      }
    }
    out.lambda = std::move(choice);
  }
  return out;
}

ParsedSpec parse_group_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_group_spec(j);
}

SignHomomorphism resolve_lambda(const ParsedSpec& spec, const GroupTable& g) {
  if (!spec.lambda) bad_field("lambda", "missing");
  const auto& l = *spec.lambda;
  if (l.convention) {
    try {
      return sign_convention(spec.group, g, *l.convention);
    } catch (const InputError& e) {
      bad_field("lambda.convention", e.what());
    }
  }
  if (l.generator_signs.size() != g.generators.size())
    bad_field("lambda.generator_signs",
              "expected " + std::to_string(g.generators.size()) + " signs, one per generator");
  try {
    return SignHomomorphism::from_generator_signs(g, l.generator_signs);
  } catch (const InputError& e) {
    bad_field("lambda.generator_signs", e.what());
  }
}

std::string lambda_label(const ParsedSpec& spec, const GroupTable& g,
                         const SignHomomorphism& lambda) {
  if (spec.lambda && spec.lambda->convention) return *spec.lambda->convention;
  return describe_signs(g, lambda);
}

// ---------------------------------------------------------------------------

json to_json(const Cyclotomic& v) {
  json out{{"modulus", v.modulus()}, {"coefficients", v.coefficients()}};
  if (v.denominator() != 1) out["denominator"] = v.denominator();
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_object()) bad_field("value", "expected {modulus, coefficients}");
  auto m = positive(field(j, "modulus", "value"), "value.modulus");
  const auto& c = field(j, "coefficients", "value");
  if (!c.is_array()) bad_field("value.coefficients", "expected a list of integers");
  std::int64_t den = 1;
  if (j.contains("denominator")) den = j["denominator"].get<std::int64_t>();
  return Cyclotomic(m, c.get<std::vector<std::int64_t>>(), den);
}

json to_json(const CharacterTable& t, const std::string& label) {
  const auto& g = t.group();
  const auto& cc = t.classes();
  json out = header("ksphere.chartab");
  out["group"] = label;
  out["order"] = g.order;
  out["modulus"] = t.modulus();
  json classes = json::array();
  for (std::size_t l = 0; l < cc.count(); ++l)
    classes.push_back({{"representative", g.element_labels[cc.representatives[l]]},
                       {"size", cc.class_sizes[l]},
                       {"element_order", cc.element_orders[l]}});
  out["classes"] = std::move(classes);
  json chars = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json values = json::array();
    for (const auto& v : t.irreducible(i).values) values.push_back(to_json(v));
    chars.push_back({{"index", i}, {"degree", t.degrees()[i]}, {"values", std::move(values)}});
  }
  out["characters"] = std::move(chars);
  return out;
}

json to_json(const IndexTwoSetting& s, const KGroupPresentation& p) {
  json out = header("ksphere.kgroup");
  out["group"] = s.group_label;
  out["lambda"] = s.lambda_label;
  out["sphere"] = to_string(p.sphere);
  out["order"] = s.group->order;
  out["kernel_order"] = s.kernel.subgroup.order;
  out["b"] = s.group->element_labels[s.b()];
  out["rank"] = p.rank;
  json basis = json::array();
  for (const auto& e : p.basis)
    basis.push_back({{"label", e.label},
                     {"representative", e.representative},
                     {"partner", e.partner},
                     {"coefficients", e.image.coefficients}});
  out["basis"] = std::move(basis);
  json action = json::array();
  for (std::size_t i = 0; i < p.action.size(); ++i)
    action.push_back({{"character", i}, {"degree", s.table->degrees()[i]},
                      {"matrix", int_matrix(p.action[i])}});
  out["action"] = std::move(action);
  out["product"] = "zero";
  out["character_table"] = to_json(*s.table, s.group_label);
  out["kernel_character_table"] = to_json(*s.kernel_table, "ker(" + s.lambda_label + ")");
  return out;
}

json to_json(const IndexTwoSetting& s, const IdealPresentation& p) {
  json out = header("ksphere.kgroup");
  out["group"] = s.group_label;
  out["lambda"] = s.lambda_label;
  out["sphere"] = to_string(p.sphere);
  out["order"] = s.group->order;
  out["lambda_character"] = p.lambda_index;
  out["rank"] = p.rank;
  json basis = json::array();
  for (std::size_t j = 0; j < p.rank; ++j)
    basis.push_back({{"label", "χ_" + std::to_string(p.representatives[j]) + " - χ_" +
                                   std::to_string(p.partners[j])},
                     {"representative", p.representatives[j]},
                     {"partner", p.partners[j]},
                     {"coefficients", p.basis[j].coefficients}});
  out["basis"] = std::move(basis);
  json action = json::array();
  for (std::size_t i = 0; i < p.action.size(); ++i)
    action.push_back({{"character", i}, {"degree", s.table->degrees()[i]},
                      {"matrix", int_matrix(p.action[i])}});
  out["action"] = std::move(action);
  out["character_table"] = to_json(*s.table, s.group_label);
  return out;
}

json to_json(const Report& r) {
  json out = header("ksphere.report");
  json records = json::array();
  std::size_t passed = 0, failed = 0, info = 0;
  for (const auto& c : r) {
    records.push_back({{"check", c.check},
                       {"group", c.group},
                       {"lambda", c.lambda},
                       {"status", to_string(c.status)},
                       {"details", c.details}});
    if (c.status == Status::pass) ++passed;
    else if (c.status == Status::fail) ++failed;
    else ++info;
  }
  out["summary"] = {{"total", r.size()}, {"passed", passed}, {"failed", failed}, {"info", info}};
  out["records"] = std::move(records);
  return out;
}

// ---------------------------------------------------------------------------

KGroupSummary summarize(const KGroupPresentation& p) {
  KGroupSummary s{p.sphere, p.rank, {}, p.action};
  for (const auto& e : p.basis) s.basis.push_back(e.image.coefficients);
  return s;
}

KGroupSummary summarize(const IdealPresentation& p) {
  KGroupSummary s{p.sphere, p.rank, {}, p.action};
  for (const auto& v : p.basis) s.basis.push_back(v.coefficients);
  return s;
}

KGroupSummary kgroup_from_json(const json& j) {
  check_header(j, "ksphere.kgroup");
  KGroupSummary s;
  const auto& sphere = field(j, "sphere", "");
  if (!sphere.is_string()) bad_field("sphere", "expected a string");
  s.sphere = parse_sphere(sphere.get<std::string>());
  s.rank = field(j, "rank", "").get<std::size_t>();
  const auto& basis = field(j, "basis", "");
  if (!basis.is_array()) bad_field("basis", "expected a list");
  for (std::size_t i = 0; i < basis.size(); ++i)
    s.basis.push_back(
        field(basis[i], "coefficients", "basis[" + std::to_string(i) + "]").get<IntVector>());
  const auto& action = field(j, "action", "");
  if (!action.is_array()) bad_field("action", "expected a list");
  for (std::size_t i = 0; i < action.size(); ++i) {
    auto path = "action[" + std::to_string(i) + "]";
    s.action.push_back(read_matrix(field(action[i], "matrix", path), path + ".matrix"));
  }
  if (s.basis.size() != s.rank) bad_field("basis", "length differs from rank");
  return s;
}

Report report_from_json(const json& j) {
  check_header(j, "ksphere.report");
  Report r;
  const auto& records = field(j, "records", "");
  if (!records.is_array()) bad_field("records", "expected a list");
  for (const auto& rec : records) {
    CheckRecord c;
    c.check = field(rec, "check", "records").get<std::string>();
    c.group = field(rec, "group", "records").get<std::string>();
    c.lambda = field(rec, "lambda", "records").get<std::string>();
    auto status = field(rec, "status", "records").get<std::string>();
    if (status == "pass") c.status = Status::pass;
    else if (status == "fail") c.status = Status::fail;
    else if (status == "info") c.status = Status::info;
    else bad_field("records.status", "unknown status '" + status + "'");
    c.details = field(rec, "details", "records").get<std::string>();
    r.push_back(std::move(c));
  }
  return r;
}

} // namespace ksphere
