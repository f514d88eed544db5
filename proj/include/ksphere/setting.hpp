#pragma once

#include "ksphere/characters.hpp"
#include "ksphere/group.hpp"

#include <string>
#include <vector>

namespace ksphere {

/// G with a surjection lambda: G -> {+1,-1}, the kernel H, and exact
/// character tables of both in the same cyclotomic modulus (exponent of G).
struct IndexTwoSetting {
  std::string group_label;
  std::string lambda_label;
  GroupPtr group;
  TablePtr table;
  SignHomomorphism lambda;
  SubgroupEmbedding kernel;
  TablePtr kernel_table;
  std::vector<Element> outside; // G \ H, ascending

  Element b() const { return outside.front(); }
};

IndexTwoSetting make_setting(GroupTable g, SignHomomorphism lambda,
                             std::string group_label = {}, std::string lambda_label = {});

/// Reuses an existing character table of G.
IndexTwoSetting make_setting(TablePtr table, SignHomomorphism lambda,
                             std::string group_label = {}, std::string lambda_label = {});

/// Build from a spec and a named convention (see sign_conventions).
IndexTwoSetting make_setting(const GroupSpec& spec, const std::string& convention);

/// perm[i] = index of the twist (x) chi_i by g, over Irr(H).
std::vector<std::size_t> twist_permutation(const IndexTwoSetting& s, Element g);

enum class Isotropy { whole_group, kernel };

struct OrbitData {
  std::vector<std::vector<std::size_t>> orbits; // ascending members
  std::vector<Isotropy> isotropy;
  std::vector<std::size_t> representatives;     // smallest member
  std::vector<std::size_t> twist;               // the twist permutation used

  friend bool operator==(const OrbitData&, const OrbitData&) = default;
};

/// Orbits of G on Irr(H) via the twist by the canonical b.
OrbitData g_orbits_on_irr(const IndexTwoSetting& s);
/// Same, twisting by a chosen element of G \ H.
OrbitData g_orbits_on_irr(const IndexTwoSetting& s, Element b);

/// Index in Irr(G) of the complexified sign character.
std::size_t lambda_character(const IndexTwoSetting& s);

} // namespace ksphere
