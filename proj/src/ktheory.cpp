#include "ksphere/ktheory.hpp"

#include "ksphere/errors.hpp"

namespace ksphere {

std::string to_string(SphereModel s) {
  return s == SphereModel::s_lambda ? "s-lambda" : "s1-lambda";
}

SphereModel parse_sphere(const std::string& s) {
  if (s == "s-lambda") return SphereModel::s_lambda;
  if (s == "s1-lambda") return SphereModel::s_1_plus_lambda;
  throw InputError("unknown sphere '" + s + "' (expected s-lambda or s1-lambda)");
}

namespace {

std::uint64_t fingerprint_of(const IndexTwoSetting& s, SphereModel sphere) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(s.group->order);
  for (auto p : s.group->product) mix(p);
  for (auto v : s.lambda.values()) mix(static_cast<std::uint64_t>(v + 1));
  mix(static_cast<std::uint64_t>(sphere));
  return h;
}

} // namespace

KGroupPresentation k_group_s1_lambda(const IndexTwoSetting& s) {
  return k_group_s1_lambda(s, s.b());
}

KGroupPresentation k_group_s1_lambda(const IndexTwoSetting& s, Element b) {
  auto orbits = g_orbits_on_irr(s, b);
  KGroupPresentation p;
  p.sphere = SphereModel::s_1_plus_lambda;
  p.fingerprint = fingerprint_of(s, p.sphere);
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
    if (orbits.isotropy[o] != Isotropy::kernel) continue;
    auto chi = orbits.orbits[o][0];
    auto partner = orbits.orbits[o][1];
    auto image = VirtualCharacter::irreducible(s.kernel_table, chi) -
                 VirtualCharacter::irreducible(s.kernel_table, partner);
    p.basis.push_back({chi, partner, std::move(image),
                       "ind(χ_" + std::to_string(chi) + "⊗(ζ-1))"});
  }
  p.rank = p.basis.size();
  for (std::size_t i = 0; i < s.table->size(); ++i)
    p.action.push_back(action_matrix(s, p, VirtualCharacter::irreducible(s.table, i)));
  return p;
}

KGroupPresentation k_group_s1_lambda(const GroupTable& g, const SignHomomorphism& lambda) {
  return k_group_s1_lambda(make_setting(g, lambda));
}

IntVector module_action(const IndexTwoSetting& s, const KGroupPresentation& p,
                        const VirtualCharacter& phi, const IntVector& x) {
  if (x.size() != p.rank) throw InputError("coordinate vector does not match the rank");
  if (phi.table != s.table) throw InputError("acting character is not a character of G");
  auto element = VirtualCharacter::zero(s.kernel_table);
  for (std::size_t j = 0; j < p.rank; ++j) element = element + x[j] * p.basis[j].image;
  auto product = tensor(restrict(phi, s.kernel, s.kernel_table), element);

  IntVector coords(p.rank);
  auto rebuilt = VirtualCharacter::zero(s.kernel_table);
  for (std::size_t j = 0; j < p.rank; ++j) {
    coords[j] = product.coefficients[p.basis[j].representative];
    rebuilt = rebuilt + coords[j] * p.basis[j].image;
  }
  if (rebuilt != product)
    throw InternalError("module action left the span of the chi - b.chi basis");
  return coords;
}

IntMatrix action_matrix(const IndexTwoSetting& s, const KGroupPresentation& p,
                        const VirtualCharacter& phi) {
  IntMatrix m(p.rank, IntVector(p.rank, 0));
  for (std::size_t j = 0; j < p.rank; ++j) {
    IntVector e(p.rank, 0);
    e[j] = 1;
    auto col = module_action(s, p, phi, e);
    for (std::size_t i = 0; i < p.rank; ++i) m[i][j] = col[i];
  }
  return m;
}

KElement make_element(const KGroupPresentation& p, IntVector coordinates) {
  if (coordinates.size() != p.rank) throw InputError("coordinate vector does not match the rank");
  return {p.fingerprint, std::move(coordinates)};
}

KElement ring_product(const KGroupPresentation& p, const KElement& a, const KElement& b) {
  if (a.presentation != p.fingerprint || b.presentation != p.fingerprint)
    throw InputError("ring product of elements from different presentations");
  if (a.coordinates.size() != p.rank || b.coordinates.size() != p.rank)
    throw InputError("coordinate vector does not match the rank");
  // (zeta - 1)^2 = 0 kills every product of generators.
  return {p.fingerprint, IntVector(p.rank, 0)};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> lambda_multiplication(const IndexTwoSetting& s) {
  const auto& t = *s.table;
  const auto& lam = t.irreducible(lambda_character(s));
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto j = t.find(lam * t.irreducible(i));
    if (!j) throw InternalError("lambda (x) irreducible is not irreducible");
    perm.push_back(*j);
  }
  return perm;
}

IdealPresentation k_group_s_lambda(const IndexTwoSetting& s) {
  IdealPresentation p;
  p.lambda_index = lambda_character(s);
  auto perm = lambda_multiplication(s);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] <= i) continue;
    p.representatives.push_back(i);
    p.partners.push_back(perm[i]);
    p.basis.push_back(VirtualCharacter::irreducible(s.table, i) -
                      VirtualCharacter::irreducible(s.table, perm[i]));
  }
  p.rank = p.basis.size();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto phi = VirtualCharacter::irreducible(s.table, i);
    IntMatrix m(p.rank, IntVector(p.rank, 0));
    for (std::size_t j = 0; j < p.rank; ++j) {
      auto col = ideal_coordinates(p, tensor(phi, p.basis[j]));
      for (std::size_t r = 0; r < p.rank; ++r) m[r][j] = col[r];
    }
    p.action.push_back(std::move(m));
  }
  return p;
}

IntVector ideal_coordinates(const IdealPresentation& p, const VirtualCharacter& v) {
  IntVector coords(p.rank);
  if (p.rank == 0) {
    if (!v.is_zero()) throw InputError("element is not in the ideal");
    return coords;
  }
  auto rebuilt = VirtualCharacter::zero(v.table);
  for (std::size_t j = 0; j < p.rank; ++j) {
    coords[j] = v.coefficients[p.representatives[j]];
    rebuilt = rebuilt + coords[j] * p.basis[j];
  }
  if (rebuilt != v) throw InputError("element is not in the ideal");
  return coords;
}

IdealPresentation k_group_s_lambda(const GroupTable& g, const SignHomomorphism& lambda) {
  return k_group_s_lambda(make_setting(g, lambda));
}

RankSplitting rank_splitting_report(const IndexTwoSetting& s) {
  auto orbits = g_orbits_on_irr(s);
  RankSplitting r;
  for (auto iso : orbits.isotropy) {
    if (iso == Isotropy::kernel) ++r.orbits_isotropy_kernel;
    else ++r.orbits_isotropy_group;
  }
  r.rank = r.orbits_isotropy_kernel;
  return r;
}

} // namespace ksphere
