#include "ksphere/cli.hpp"

#include "ksphere/errors.hpp"
#include "ksphere/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ksphere {

namespace {

constexpr const char* kFooter = R"(Group specs are inline JSON (anything starting with '{') or a path to a JSON file.
  {"family":"C","n":6}                   cyclic of order n           lambda: onto-pm1
  {"family":"D","n":4}                   dihedral of order 2n        lambda: reflection-sign
  {"family":"Q8"}                        quaternion of order 8       lambda: i-kernel, j-kernel, k-kernel
  {"family":"S","n":3}                   symmetric, n <= 6           lambda: sign
  {"family":"A","n":4}                   alternating, n <= 6         lambda: sign (always trivial, so rejected)
  {"family":"product","factors":[X,Y]}   direct product              lambda: left:<name>, right:<name>
  {"generators":[[1,0,2],[1,2,0]]}       permutation group           lambda: sign
Family names also accept cyclic, dihedral, quaternion, symmetric, alternating, direct_product.
lambda is {"convention": name} or {"generator_signs": [1,-1,...]}, one sign per generator:
  cyclic a; dihedral r (rotation), s (reflection); quaternion i, j; symmetric (0 1), (0 1 ... n-1);
  alternating (0 1 2), (0 1 3), ...; products list the left generators, then the right ones.
Character values are exact elements of Q(z), z = exp(2 pi i / m), printed in the power basis.
Environment: KSPHERE_ORDER_CAP overrides the maximal group order (default 1024).
Exit codes: 0 success, 1 failed check or internal error, 2 invalid input.)";

std::size_t order_cap() {
  const char* env = std::getenv("KSPHERE_ORDER_CAP");
  if (!env || !*env) return kDefaultOrderCap;
  char* end = nullptr;
  auto v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("KSPHERE_ORDER_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

ParsedSpec load_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_group_spec_text(arg);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read spec file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_spec_text(buf.str());
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw InputError("failed writing '" + path + "'");
}

std::string chi(std::size_t i) { return "χ_" + std::to_string(i); }

void print_table(std::ostream& out, const CharacterTable& t, const std::string& label) {
  const auto& g = t.group();
  const auto& cc = t.classes();
  out << label << ": order " << g.order << ", " << cc.count() << " classes, values in Q(z), z = exp(2 pi i/"
      << t.modulus() << ")\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"class"});
  rows.push_back({"size"});
  for (std::size_t l = 0; l < cc.count(); ++l) {
    rows[0].push_back(g.element_labels[cc.representatives[l]]);
    rows[1].push_back(std::to_string(cc.class_sizes[l]));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    rows.push_back({chi(i)});
    for (const auto& v : t.irreducible(i).values) rows.back().push_back(v.to_string());
  }
  std::vector<std::size_t> width(cc.count() + 1, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      // count code points so the chi labels align
      std::size_t n = 0;
      for (unsigned char ch : row[c]) n += (ch & 0xC0) != 0x80;
      width[c] = std::max(width[c], n);
    }
  for (const auto& row : rows) {
    out << "  ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::size_t n = 0;
      for (unsigned char ch : row[c]) n += (ch & 0xC0) != 0x80;
      out << row[c] << std::string(width[c] - n + 2, ' ');
    }
    out << '\n';
  }
}

void print_matrix(std::ostream& out, const IntMatrix& m) {
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j ? ", " : "") << m[i][j];
    out << ']';
  }
  out << "]";
}

std::string combination(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto mag = v[i] < 0 ? -v[i] : v[i];
    s += s.empty() ? (v[i] < 0 ? "-" : "") : (v[i] < 0 ? " - " : " + ");
    if (mag != 1) s += std::to_string(mag) + "*";
    s += chi(i);
  }
  return s.empty() ? "0" : s;
}

struct Loaded {
  ParsedSpec spec;
  GroupTable group;
};

Loaded load(const std::string& arg) {
  auto spec = load_spec(arg);
  auto g = build_group(spec.group, order_cap());
  return {std::move(spec), std::move(g)};
}

int cmd_chartab(const std::string& arg, const std::string& json_path, std::ostream& out) {
  auto l = load(arg);
  auto label = l.spec.group.label();
  auto table = character_table(std::make_shared<const GroupTable>(std::move(l.group)));
  print_table(out, *table, label);
  if (!json_path.empty()) write_json(json_path, to_json(*table, label));
  return 0;
}

int cmd_kgroup(const std::string& arg, const std::string& sphere_name, const std::string& json_path,
               std::ostream& out) {
  auto sphere = parse_sphere(sphere_name);
  auto l = load(arg);
  auto lambda = resolve_lambda(l.spec, l.group);
  auto lambda_name = lambda_label(l.spec, l.group, lambda);
  auto s = make_setting(std::move(l.group), std::move(lambda), l.spec.group.label(), lambda_name);
  out << "group " << s.group_label << " (order " << s.group->order << "), lambda " << s.lambda_label
      << ", sphere " << to_string(sphere) << '\n';
  print_table(out, *s.table, "Irr(G)");
  if (sphere == SphereModel::s_1_plus_lambda) {
    auto p = k_group_s1_lambda(s);
    out << "H = ker(lambda) of order " << s.kernel.subgroup.order << ", b = "
        << s.group->element_labels[s.b()] << '\n';
    print_table(out, *s.kernel_table, "Irr(H)");
    out << "rank " << p.rank << '\n';
    for (std::size_t j = 0; j < p.rank; ++j)
      out << "  e_" << j << " = " << p.basis[j].label << ", restricting to "
          << combination(p.basis[j].image.coefficients) << " in R(H)\n";
    out << "action of Irr(G), column j is the image of e_j:\n";
    for (std::size_t i = 0; i < p.action.size(); ++i) {
      out << "  " << chi(i) << ": ";
      print_matrix(out, p.action[i]);
      out << '\n';
    }
    out << "product: identically zero\n";
    if (!json_path.empty()) write_json(json_path, to_json(s, p));
  } else {
    auto p = k_group_s_lambda(s);
    out << "ideal of R(G) generated by 1 - " << chi(p.lambda_index) << '\n';
    out << "rank " << p.rank << '\n';
    for (std::size_t j = 0; j < p.rank; ++j)
      out << "  e_" << j << " = " << combination(p.basis[j].coefficients) << '\n';
    out << "action of Irr(G), column j is the image of e_j:\n";
    for (std::size_t i = 0; i < p.action.size(); ++i) {
      out << "  " << chi(i) << ": ";
      print_matrix(out, p.action[i]);
      out << '\n';
    }
    if (!json_path.empty()) write_json(json_path, to_json(s, p));
  }
  return 0;
}

int cmd_verify(const std::string& arg, std::size_t all_upto, const VerifyOptions& opt,
               bool verbose, const std::string& json_path, std::ostream& out) {
  Report report;
  if (all_upto > 0) {
    report = verify_catalogue(all_upto, opt);
  } else {
    auto l = load(arg);
    std::vector<SignHomomorphism> lambdas;
    if (l.spec.lambda) lambdas.push_back(resolve_lambda(l.spec, l.group));
    if (lambdas.empty() && all_sign_homomorphisms(l.group).empty())
      throw InputError(l.spec.group.label() + " has no surjection onto {+1,-1}");
    report = verify_group(l.group, l.spec.group.label(), std::move(lambdas), opt);
    if (l.spec.lambda && l.spec.lambda->convention)
      for (auto& r : report)
        if (r.lambda != "-") r.lambda = *l.spec.lambda->convention;
  }
  std::size_t passed = 0, failed = 0, info = 0;
  for (const auto& r : report) {
    if (r.status == Status::pass) ++passed;
    else if (r.status == Status::fail) ++failed;
    else ++info;
    if (verbose || r.status != Status::pass)
      out << std::left << std::setw(5) << to_string(r.status) << ' ' << r.check << ' ' << r.group
          << ' ' << r.lambda << ": " << r.details << '\n';
  }
  out << report.size() << " checks: " << passed << " passed, " << failed << " failed, " << info
      << " info\n";
  if (!json_path.empty()) write_json(json_path, to_json(report));
  return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character tables and equivariant K-groups of representation spheres "
               "for finite groups with a sign homomorphism.",
               "ksphere"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string spec_arg, json_path, sphere;
  std::size_t all_upto = 0;
  bool verbose = false;
  VerifyOptions opt;

  auto* chartab = app.add_subcommand("chartab", "Print the character table of a group.");
  chartab->add_option("spec", spec_arg, "Group spec (JSON text or file)")->required();
  chartab->add_option("--json", json_path, "Write the table as JSON to this path");

  auto* kgroup = app.add_subcommand(
      "kgroup", "Print the reduced equivariant K-group of S^lambda or S^(1+lambda): rank, basis, "
                "action matrices of Irr(G).");
  kgroup->add_option("spec", spec_arg, "Group spec with a lambda (JSON text or file)")->required();
  kgroup->add_option("--sphere", sphere, "s-lambda or s1-lambda")
      ->required()
      ->check(CLI::IsMember({"s-lambda", "s1-lambda"}));
  kgroup->add_option("--json", json_path, "Write the presentation as JSON to this path");

  auto* verify = app.add_subcommand(
      "verify", "Run the verification suite on one group (every lambda unless one is given) or on "
                "every built-in group up to an order.");
  auto* spec_opt = verify->add_option("spec", spec_arg, "Group spec (JSON text or file)");
  auto* upto_opt = verify->add_option("--all-upto", all_upto, "Verify all built-in groups of order <= N")
                       ->check(CLI::PositiveNumber);
  spec_opt->excludes(upto_opt);
  verify->add_option("--samples", opt.module_samples, "Random virtual characters per module check")
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "Seed for the module checks")->capture_default_str();
  verify->add_option("--threads", opt.threads, "Worker threads (0: hardware concurrency)")
      ->capture_default_str();
  verify->add_flag("-v,--verbose", verbose, "Print every record, not only failures");
  verify->add_option("--json", json_path, "Write the report as JSON to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (chartab->parsed()) return cmd_chartab(spec_arg, json_path, out);
    if (kgroup->parsed()) return cmd_kgroup(spec_arg, sphere, json_path, out);
    if (spec_arg.empty() && all_upto == 0) {
      err << "error: verify needs a group spec or --all-upto N\n";
      return 2;
    }
    return cmd_verify(spec_arg, all_upto, opt, verbose, json_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace ksphere
