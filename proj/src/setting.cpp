#include "ksphere/setting.hpp"

#include "ksphere/errors.hpp"

#include <algorithm>

namespace ksphere {

IndexTwoSetting make_setting(GroupTable g, SignHomomorphism lambda, std::string group_label,
                             std::string lambda_label) {
  auto table = character_table(std::make_shared<const GroupTable>(std::move(g)));
  return make_setting(std::move(table), std::move(lambda), std::move(group_label),
                      std::move(lambda_label));
}

IndexTwoSetting make_setting(TablePtr table, SignHomomorphism lambda, std::string group_label,
                             std::string lambda_label) {
  auto group = table->space()->group;
  if (lambda.values().size() != group->order)
    throw InputError("sign homomorphism does not match the group");
  auto kernel = kernel_embedding(*group, lambda);
  auto kernel_group = std::make_shared<const GroupTable>(kernel.subgroup);
  auto kernel_table = character_table(kernel_group, table->modulus());
  auto outside = coset_representatives(*group, lambda);
  if (lambda_label.empty()) lambda_label = describe_signs(*group, lambda);
  return IndexTwoSetting{std::move(group_label), std::move(lambda_label), group,
                         std::move(table),       std::move(lambda),       std::move(kernel),
                         std::move(kernel_table), std::move(outside)};
}

IndexTwoSetting make_setting(const GroupSpec& spec, const std::string& convention) {
  auto g = build_group(spec);
  auto lambda = sign_convention(spec, g, convention);
  return make_setting(std::move(g), std::move(lambda), spec.label(), convention);
}

std::vector<std::size_t> twist_permutation(const IndexTwoSetting& s, Element g) {
  const auto& irr = *s.kernel_table;
  const auto& cc = irr.classes();
  const auto& kernel = s.kernel;
  if (g >= s.group->order) throw InputError("twisting element is not in the group");
  // class of g^-1 h g for each class representative h of H
  std::vector<std::size_t> image;
  for (auto rep : cc.representatives) {
    auto y = s.group->conjugate(kernel.inclusion[rep], g);
    if (!kernel.contains(y)) throw InputError("twisting element does not normalize the kernel");
    image.push_back(cc.class_of[static_cast<Element>(kernel.preimage[y])]);
  }
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    ClassFunction twisted{irr.space(), {}};
    for (auto c : image) twisted.values.push_back(irr.irreducible(i).values[c]);
    auto j = irr.find(twisted);
    if (!j) throw InternalError("twist of an irreducible is not irreducible");
    perm.push_back(*j);
  }
  return perm;
}

OrbitData g_orbits_on_irr(const IndexTwoSetting& s) { return g_orbits_on_irr(s, s.b()); }

OrbitData g_orbits_on_irr(const IndexTwoSetting& s, Element b) {
  if (b >= s.group->order || s.lambda(b) != -1)
    throw InputError("orbit computation needs an element outside the kernel");
  OrbitData out;
  out.twist = twist_permutation(s, b);
  std::vector<bool> seen(out.twist.size(), false);
  for (std::size_t i = 0; i < out.twist.size(); ++i) {
    if (seen[i]) continue;
    auto j = out.twist[i];
    if (out.twist[j] != i) throw InternalError("twist is not an involution on Irr(H)");
    seen[i] = seen[j] = true;
    if (i == j) {
      out.orbits.push_back({i});
      out.isotropy.push_back(Isotropy::whole_group);
    } else {
      out.orbits.push_back({i, j});
      out.isotropy.push_back(Isotropy::kernel);
    }
    out.representatives.push_back(i);
  }
  return out;
}

std::size_t lambda_character(const IndexTwoSetting& s) {
  const auto& space = s.table->space();
  ClassFunction f{space, {}};
  for (auto rep : space->classes.representatives)
    f.values.push_back(Cyclotomic::integer(space->modulus, s.lambda(rep)));
  auto i = s.table->find(f);
  if (!i) throw InternalError("sign character missing from the character table");
  return *i;
}

} // namespace ksphere
