#include "ksphere/verification.hpp"

#include "ksphere/catalogue.hpp"
#include "ksphere/errors.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <thread>

namespace ksphere {

std::string to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::info: return "info";
  }
  return "?";
}

bool all_passed(const Report& r) {
  return std::none_of(r.begin(), r.end(),
                      [](const CheckRecord& c) { return c.status == Status::fail; });
}

namespace {

// Collects the first few failure messages of a check.
class Failures {
public:
  void add(std::string msg) {
    if (count_++ < 5) messages_.push_back(std::move(msg));
  }
  void finish(CheckRecord& r, std::string pass_details) const {
    if (count_ == 0) {
      if (r.details.empty()) r.details = std::move(pass_details);
      return;
    }
    r.status = Status::fail;
    std::ostringstream os;
    os << count_ << " failure(s): ";
    for (std::size_t i = 0; i < messages_.size(); ++i) os << (i ? "; " : "") << messages_[i];
    r.details = os.str();
  }

private:
  std::size_t count_ = 0;
  std::vector<std::string> messages_;
};

template <class Body>
CheckRecord run_check(std::string name, std::string group, std::string lambda, Body body) {
  CheckRecord r{std::move(name), std::move(group), std::move(lambda), Status::pass, {}};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.details = std::string("exception: ") + e.what();
  }
  return r;
}

template <class Body>
CheckRecord run_check(std::string name, const IndexTwoSetting& s, Body body) {
  return run_check(std::move(name), s.group_label, s.lambda_label, std::move(body));
}

std::string idx(std::size_t i) { return std::to_string(i); }

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const auto n = a.size();
  IntMatrix c(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
  return c;
}

IntMatrix matadd(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = checked_add(a[i][j], b[i][j]);
  return c;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

} // namespace

// ---------------------------------------------------------------------------

CheckRecord check_group(const GroupTable& g, const std::string& label) {
  return run_check("group_axioms", label, "-", [&](CheckRecord& r) {
    Failures f;
    if (auto err = check_group_axioms(g); !err.empty()) f.add(err);
    auto cc = conjugacy_classes(g);
    std::size_t total = 0;
    for (auto s : cc.class_sizes) total += s;
    if (total != g.order) f.add("class sizes do not sum to the order");
    if (cc.class_sizes.empty() || cc.class_sizes[0] != 1 || cc.representatives[0] != 0)
      f.add("identity is not alone in the first class");
    f.finish(r, "order " + idx(g.order) + ", " + idx(cc.count()) + " classes");
  });
}

CheckRecord check_table(const CharacterTable& t, const std::string& label) {
  return run_check("character_table", label, "-", [&](CheckRecord& r) {
    Failures f;
    const auto& cc = t.classes();
    const auto k = cc.count();
    const auto order = static_cast<std::int64_t>(t.group().order);
    const auto m = t.modulus();
    if (t.size() != k) f.add("irreducible count " + idx(t.size()) + " != class count " + idx(k));
    std::int64_t sum = 0;
    for (auto d : t.degrees()) sum += d * d;
    if (sum != order) f.add("sum of squared degrees is " + std::to_string(sum));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i; j < t.size(); ++j) {
        auto ip = inner_product(t.irreducible(i), t.irreducible(j));
        if (ip != Cyclotomic::integer(m, i == j ? 1 : 0))
          f.add("<chi_" + idx(i) + ", chi_" + idx(j) + "> = " + ip.to_string());
      }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        auto s = Cyclotomic::integer(m, 0);
        for (std::size_t i = 0; i < t.size(); ++i)
          s += t.irreducible(i)[a] * t.irreducible(i)[b].conj();
        auto expected = a == b ? order / static_cast<std::int64_t>(cc.class_sizes[a]) : 0;
        if (s != Cyclotomic::integer(m, expected))
          f.add("column orthogonality fails at classes " + idx(a) + ", " + idx(b));
      }
    f.finish(r, idx(t.size()) + " irreducibles, orthogonality exact");
  });
}

CheckRecord check_frobenius_reciprocity(const IndexTwoSetting& s) {
  return run_check("frobenius_reciprocity", s, [&](CheckRecord& r) {
    Failures f;
    std::vector<VirtualCharacter> induced, restricted;
    for (std::size_t c = 0; c < s.kernel_table->size(); ++c)
      induced.push_back(induce(VirtualCharacter::irreducible(s.kernel_table, c), s.kernel, s.table));
    for (std::size_t p = 0; p < s.table->size(); ++p)
      restricted.push_back(restrict(VirtualCharacter::irreducible(s.table, p), s.kernel, s.kernel_table));
    for (std::size_t c = 0; c < induced.size(); ++c)
      for (std::size_t p = 0; p < restricted.size(); ++p)
        if (induced[c].coefficients[p] != restricted[p].coefficients[c])
          f.add("<ind chi_" + idx(c) + ", phi_" + idx(p) + "> != <chi_" + idx(c) + ", res phi_" +
                idx(p) + ">");
    f.finish(r, idx(induced.size() * restricted.size()) + " pairs");
  });
}

CheckRecord check_projection_formula(const IndexTwoSetting& s) {
  return run_check("projection_formula", s, [&](CheckRecord& r) {
    Failures f;
    std::vector<VirtualCharacter> induced;
    for (std::size_t c = 0; c < s.kernel_table->size(); ++c)
      induced.push_back(induce(VirtualCharacter::irreducible(s.kernel_table, c), s.kernel, s.table));
    for (std::size_t p = 0; p < s.table->size(); ++p) {
      auto phi = VirtualCharacter::irreducible(s.table, p);
      auto res = restrict(phi, s.kernel, s.kernel_table);
      for (std::size_t c = 0; c < induced.size(); ++c) {
        auto lhs = tensor(phi, induced[c]);
        // induction is additive, so ind(res phi (x) chi) is assembled from
        // the induced irreducibles
        auto product = tensor(res, VirtualCharacter::irreducible(s.kernel_table, c));
        auto rhs = VirtualCharacter::zero(s.table);
        for (std::size_t q = 0; q < product.coefficients.size(); ++q)
          if (product.coefficients[q] != 0) rhs = rhs + product.coefficients[q] * induced[q];
        if (lhs != rhs) f.add("phi_" + idx(p) + " (x) ind chi_" + idx(c));
      }
    }
    f.finish(r, idx(s.table->size() * induced.size()) + " pairs");
  });
}

CheckRecord check_mackey_restriction(const IndexTwoSetting& s) {
  return run_check("mackey_restriction", s, [&](CheckRecord& r) {
    Failures f;
    for (std::size_t c = 0; c < s.kernel_table->size(); ++c) {
      auto chi = VirtualCharacter::irreducible(s.kernel_table, c);
      auto lhs = restrict(induce(chi, s.kernel, s.table), s.kernel, s.kernel_table);
      auto rhs = chi + conjugate_twist(chi, *s.group, s.kernel, s.b());
      if (lhs != rhs) f.add("chi_" + idx(c));
    }
    f.finish(r, idx(s.kernel_table->size()) + " irreducibles of H");
  });
}

CheckRecord check_orbit_multiplicities(const IndexTwoSetting& s) {
  return run_check("orbit_multiplicities", s, [&](CheckRecord& r) {
    Failures f;
    auto twist = twist_permutation(s, s.b());
    for (std::size_t p = 0; p < s.table->size(); ++p) {
      auto res = restrict(VirtualCharacter::irreducible(s.table, p), s.kernel, s.kernel_table);
      for (std::size_t c = 0; c < twist.size(); ++c)
        if (res.coefficients[c] != res.coefficients[twist[c]])
          f.add("phi_" + idx(p) + " at chi_" + idx(c));
    }
    f.finish(r, idx(s.table->size()) + " restrictions");
  });
}

CheckRecord check_b_independence(const IndexTwoSetting& s) {
  return run_check("b_independence", s, [&](CheckRecord& r) {
    Failures f;
    auto orbits = g_orbits_on_irr(s);
    auto pres = k_group_s1_lambda(s);
    for (std::size_t c = 0; c < orbits.twist.size(); ++c)
      if (orbits.twist[orbits.twist[c]] != c) f.add("twist is not an involution at chi_" + idx(c));
    for (auto b : s.outside) {
      auto other = g_orbits_on_irr(s, b);
      if (other != orbits) {
        f.add("orbit data differs for b = " + s.group->element_labels[b]);
        continue;
      }
      auto p = k_group_s1_lambda(s, b);
      bool same = p.rank == pres.rank && p.action == pres.action;
      for (std::size_t j = 0; same && j < p.rank; ++j)
        same = p.basis[j].image == pres.basis[j].image;
      if (!same) f.add("presentation differs for b = " + s.group->element_labels[b]);
    }
    f.finish(r, idx(s.outside.size()) + " choices of b");
  });
}

bool has_central_outside_element(const IndexTwoSetting& s) {
  const auto& g = *s.group;
  for (auto b : s.outside) {
    bool central = true;
    for (auto h : s.kernel.inclusion)
      if (g.mul(b, h) != g.mul(h, b)) {
        central = false;
        break;
      }
    if (central) return true;
  }
  return false;
}

std::size_t stable_kernel_classes(const IndexTwoSetting& s, Element b) {
  const auto& g = *s.group;
  auto cc = conjugacy_classes(s.kernel.subgroup);
  std::size_t stable = 0;
  for (std::size_t l = 0; l < cc.count(); ++l) {
    auto image = g.conjugate(s.kernel.inclusion[cc.representatives[l]], b);
    if (cc.class_of[static_cast<Element>(s.kernel.preimage[image])] == l) ++stable;
  }
  return stable;
}

CheckRecord check_central_outside_element(const IndexTwoSetting& s) {
  return run_check("central_b_rank_zero", s, [&](CheckRecord& r) {
    auto rank = rank_splitting_report(s).rank;
    bool central = has_central_outside_element(s);
    if (central && rank != 0) {
      r.status = Status::fail;
      r.details = "a central b exists but rank is " + idx(rank);
    } else if (central) {
      r.details = "central b exists, rank 0";
    } else if (rank > 0) {
      r.details = "no central b, rank " + idx(rank);
    } else {
      r.status = Status::info;
      r.details = "no central b, rank 0 (condition is only sufficient)";
    }
  });
}

CheckRecord check_ideal_lattice(const IndexTwoSetting& s) {
  return check_ideal_lattice(s, k_group_s_lambda(s));
}

CheckRecord check_ideal_lattice(const IndexTwoSetting& s, const IdealPresentation& p) {
  return run_check("ideal_lattice", s, [&](CheckRecord& r) {
    Failures f;
    auto lam = VirtualCharacter::irreducible(s.table, lambda_character(s));
    auto one_minus_lambda = VirtualCharacter::trivial(s.table) - lam;
    IntMatrix generators, basis;
    for (std::size_t i = 0; i < s.table->size(); ++i)
      generators.push_back(
          tensor(one_minus_lambda, VirtualCharacter::irreducible(s.table, i)).coefficients);
    for (const auto& v : p.basis) basis.push_back(v.coefficients);
    auto ideal = hermite_normal_form(generators);
    if (ideal.size() != p.rank)
      f.add("lattice rank " + idx(ideal.size()) + " != presentation rank " + idx(p.rank));
    if (!integrally_independent(basis)) f.add("basis is not integrally independent");
    if (ideal != hermite_normal_form(basis)) f.add("basis does not span the ideal");
    f.finish(r, "rank " + idx(ideal.size()));
  });
}

CheckRecord check_presentation(const IndexTwoSetting& s) {
  return check_presentation(s, k_group_s1_lambda(s));
}

CheckRecord check_presentation(const IndexTwoSetting& s, const KGroupPresentation& p) {
  return run_check("presentation", s, [&](CheckRecord& r) {
    Failures f;
    const auto irr_h = s.kernel_table->size();
    const auto fixed = stable_kernel_classes(s, s.b());
    if (2 * p.rank + fixed != irr_h)
      f.add("rank " + idx(p.rank) + " disagrees with class count oracle (|Irr(H)| = " +
            idx(irr_h) + ", b-stable classes = " + idx(fixed) + ")");
    if (p.rank != rank_splitting_report(s).orbits_isotropy_kernel)
      f.add("rank differs from the number of orbits with isotropy H");
    IntMatrix rows;
    for (const auto& e : p.basis) rows.push_back(e.image.coefficients);
    if (!rows.empty() && !integrally_independent(rows)) f.add("basis is not integrally independent");
    if (p.action.size() != s.table->size()) f.add("missing action matrices");
    auto triv = VirtualCharacter::trivial(s.table);
    auto triv_index = static_cast<std::size_t>(
        std::find(triv.coefficients.begin(), triv.coefficients.end(), 1) - triv.coefficients.begin());
    if (p.action[triv_index] != identity_matrix(p.rank)) f.add("trivial character does not act as I");
    for (std::size_t i = 0; i < s.table->size(); ++i)
      for (std::size_t j = i; j < s.table->size(); ++j) {
        auto prod = tensor(VirtualCharacter::irreducible(s.table, i),
                           VirtualCharacter::irreducible(s.table, j));
        IntMatrix lhs(p.rank, IntVector(p.rank, 0));
        for (std::size_t q = 0; q < prod.coefficients.size(); ++q)
          if (prod.coefficients[q] != 0) {
            auto scaled = p.action[q];
            for (auto& row : scaled)
              for (auto& x : row) x = checked_mul(x, prod.coefficients[q]);
            lhs = matadd(lhs, scaled);
          }
        if (lhs != matmul(p.action[i], p.action[j]))
          f.add("action not multiplicative at (" + idx(i) + ", " + idx(j) + ")");
      }
    f.finish(r, "rank " + idx(p.rank));
  });
}

CheckRecord check_module_structure(const IndexTwoSetting& s, std::size_t samples,
                                   std::uint64_t seed) {
  return run_check("module_structure", s, [&](CheckRecord& r) {
    Failures f;
    auto p = k_group_s1_lambda(s);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
    auto random_character = [&] {
      auto v = VirtualCharacter::zero(s.table);
      for (auto& c : v.coefficients) c = coeff(rng);
      return v;
    };
    auto act = [&](const VirtualCharacter& phi) { return action_matrix(s, p, phi); };
    if (act(VirtualCharacter::trivial(s.table)) != identity_matrix(p.rank))
      f.add("trivial character does not act as I");
    for (std::size_t n = 0; n < samples; ++n) {
      auto phi = random_character();
      auto psi = random_character();
      auto a_phi = act(phi);
      auto a_psi = act(psi);
      IntMatrix linear(p.rank, IntVector(p.rank, 0));
      for (std::size_t i = 0; i < phi.coefficients.size(); ++i)
        for (std::size_t a = 0; a < p.rank; ++a)
          for (std::size_t b = 0; b < p.rank; ++b)
            linear[a][b] = checked_add(linear[a][b], checked_mul(phi.coefficients[i], p.action[i][a][b]));
      if (a_phi != linear) f.add("sample " + idx(n) + ": action disagrees with stored matrices");
      if (act(phi + psi) != matadd(a_phi, a_psi)) f.add("sample " + idx(n) + ": not additive");
      if (act(tensor(phi, psi)) != matmul(a_phi, a_psi))
        f.add("sample " + idx(n) + ": not multiplicative");
      IntVector x(p.rank), y(p.rank);
      for (auto& c : x) c = coeff(rng);
      for (auto& c : y) c = coeff(rng);
      auto prod = ring_product(p, make_element(p, x), make_element(p, y));
      if (std::any_of(prod.coordinates.begin(), prod.coordinates.end(),
                      [](std::int64_t c) { return c != 0; }))
        f.add("sample " + idx(n) + ": nonzero ring product");
    }
    f.finish(r, idx(samples) + " samples, rank " + idx(p.rank));
  });
}

// ---------------------------------------------------------------------------

Report verify_setting(const IndexTwoSetting& s, const VerifyOptions& opt) {
  return {check_frobenius_reciprocity(s), check_projection_formula(s),
          check_mackey_restriction(s),    check_orbit_multiplicities(s),
          check_b_independence(s),        check_central_outside_element(s),
          check_ideal_lattice(s),         check_presentation(s),
          check_module_structure(s, opt.module_samples, opt.seed)};
}

Report verify_group(const GroupTable& g, const std::string& label,
                    std::vector<SignHomomorphism> lambdas, const VerifyOptions& opt) {
  Report out{check_group(g, label)};
  TablePtr table;
  try {
    table = character_table(std::make_shared<const GroupTable>(g));
    out.push_back(check_table(*table, label));
  } catch (const std::exception& e) {
    out.push_back({"character_table", label, "-", Status::fail, std::string("exception: ") + e.what()});
    return out;
  }
  if (lambdas.empty()) lambdas = all_sign_homomorphisms(g);
  for (auto& lambda : lambdas) {
    auto lambda_label = describe_signs(g, lambda);
    try {
      auto s = make_setting(table, std::move(lambda), label, lambda_label);
      auto part = verify_setting(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    } catch (const std::exception& e) {
      out.push_back({"setting", label, lambda_label, Status::fail, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

Report verify_catalogue(std::size_t max_order, const VerifyOptions& opt) {
  auto specs = builtin_groups(max_order);
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Report> parts(specs.size());
  std::size_t next = 0;
  while (next < specs.size()) {
    std::vector<std::future<void>> batch;
    for (unsigned t = 0; t < threads && next < specs.size(); ++t, ++next) {
      batch.push_back(std::async(std::launch::async, [&, i = next] {
        try {
          auto g = build_group(specs[i]);
          parts[i] = verify_group(g, specs[i].label(), {}, opt);
        } catch (const std::exception& e) {
          parts[i] = {{"build", specs[i].label(), "-", Status::fail, e.what()}};
        }
      }));
    }
    for (auto& fut : batch) fut.get();
  }
  Report out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace ksphere
