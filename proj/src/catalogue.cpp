#include "ksphere/catalogue.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace ksphere {

namespace {

std::size_t factorial(unsigned n) {
  std::size_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

GroupSpec product_of(const std::vector<GroupSpec>& factors) {
  GroupSpec acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    acc = GroupSpec::product(acc, factors[i]);
  return acc;
}

// Invariant factors d1 | d2 | ... | dk with each d >= 2.
void invariant_factor_lists(std::size_t max_order, std::vector<unsigned>& prefix,
                            std::size_t running,
                            std::vector<std::vector<unsigned>>& out) {
  if (!prefix.empty()) out.push_back(prefix);
  unsigned last = prefix.empty() ? 1 : prefix.back();
  for (unsigned d = std::max(2u, last); running * d <= max_order; d += last) {
    if (d % last != 0) continue;
    prefix.push_back(d);
    invariant_factor_lists(max_order, prefix, running * d, out);
    prefix.pop_back();
  }
}

} // namespace

std::size_t spec_order(const GroupSpec& spec) {
  return std::visit(
      [&](const auto& k) -> std::size_t {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Cyclic>) {
          return k.n;
        } else if constexpr (std::is_same_v<K, spec::Dihedral>) {
          return 2 * std::size_t{k.n};
        } else if constexpr (std::is_same_v<K, spec::Quaternion>) {
          return 8;
        } else if constexpr (std::is_same_v<K, spec::Symmetric>) {
          return factorial(k.n);
        } else if constexpr (std::is_same_v<K, spec::Alternating>) {
          return k.n < 2 ? 1 : factorial(k.n) / 2;
        } else if constexpr (std::is_same_v<K, spec::DirectProduct>) {
          return spec_order(*k.left) * spec_order(*k.right);
        } else {
          return build_group(spec).order;
        }
      },
      spec.kind);
}

std::vector<GroupSpec> abelian_groups(std::size_t max_order) {
  std::vector<std::vector<unsigned>> lists;
  std::vector<unsigned> prefix;
  invariant_factor_lists(max_order, prefix, 1, lists);
  std::vector<GroupSpec> out{GroupSpec::cyclic(1)};
  for (const auto& l : lists) {
    std::vector<GroupSpec> factors;
    for (auto d : l) factors.push_back(GroupSpec::cyclic(d));
    out.push_back(product_of(factors));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return spec_order(a) < spec_order(b);
  });
  return out;
}

std::vector<GroupSpec> builtin_groups(std::size_t max_order) {
  std::vector<GroupSpec> out = abelian_groups(max_order);
  auto add = [&](GroupSpec s) {
    if (spec_order(s) <= max_order) out.push_back(std::move(s));
  };
  for (unsigned n = 3; 2 * n <= max_order; ++n) add(GroupSpec::dihedral(n));
  add(GroupSpec::quaternion());
  for (unsigned n = 3; n <= 6; ++n) add(GroupSpec::symmetric(n));
  for (unsigned n = 4; n <= 6; ++n) add(GroupSpec::alternating(n));

  const std::vector<GroupSpec> small_nonabelian{
      GroupSpec::symmetric(3), GroupSpec::dihedral(4), GroupSpec::quaternion(),
      GroupSpec::dihedral(5),  GroupSpec::dihedral(6), GroupSpec::alternating(4),
      GroupSpec::symmetric(4)};
  for (const auto& x : small_nonabelian)
    for (unsigned k : {2u, 3u, 4u}) add(GroupSpec::product(x, GroupSpec::cyclic(k)));
  add(GroupSpec::product(GroupSpec::dihedral(4),
                         GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2))));
  add(GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::symmetric(3)));
  add(GroupSpec::product(GroupSpec::dihedral(4), GroupSpec::dihedral(4)));
  add(GroupSpec::product(GroupSpec::quaternion(), GroupSpec::quaternion()));
  add(GroupSpec::product(GroupSpec::quaternion(), GroupSpec::dihedral(4)));

  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(spec_order(a), a.label()) < std::pair(spec_order(b), b.label());
  });
  return out;
}

} // namespace ksphere
